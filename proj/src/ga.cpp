#include "roverloc/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "roverloc/errors.hpp"
#include "roverloc/model.hpp"

namespace roverloc::ga {

void validate(const GaConfig& config) {
    if (config.population_size < 2)
        throw ConfigError("ga: population_size must be >= 2");
    if (config.generations < 0)
        throw ConfigError("ga: generations must be >= 0");
    if (config.crossover_rate < 0.0 || config.crossover_rate > 1.0)
        throw ConfigError("ga: crossover_rate must be in [0, 1]");
    if (config.mutation_rate < 0.0 || config.mutation_rate > 1.0)
        throw ConfigError("ga: mutation_rate must be in [0, 1]");
    if (config.restarts < 1)
        throw ConfigError("ga: restarts must be >= 1");
    if (config.bits_per_var < 1 || config.bits_per_var > 62)
        throw ConfigError("ga: bits_per_var must be in [1, 62]");
    for (const auto& b : config.bounds)
        if (!(b.lo_mm < b.hi_mm))
            throw ConfigError("ga: bounds must satisfy lo < hi");
}

Genome random_genome(const GaConfig& config, Rng& rng) {
    Genome g;
    g.bounds = config.bounds;
    g.bits_per_var = config.bits_per_var;
    g.bits.resize(2 * static_cast<std::size_t>(config.bits_per_var));
    for (auto& bit : g.bits)
        bit = static_cast<std::uint8_t>(rng.bounded(2));
    return g;
}

std::array<double, 2> decode(const Genome& genome) {
    const int b = genome.bits_per_var;
    const double denom = static_cast<double>((std::uint64_t{1} << b) - 1);
    std::array<double, 2> out{};
    for (int var = 0; var < 2; ++var) {
        std::uint64_t value = 0;
        for (int i = 0; i < b; ++i)
            value = (value << 1) | genome.bits[static_cast<std::size_t>(var * b + i)];
        const auto& bounds = genome.bounds[static_cast<std::size_t>(var)];
        out[static_cast<std::size_t>(var)] =
            bounds.lo_mm + static_cast<double>(value) * (bounds.hi_mm - bounds.lo_mm) / denom;
    }
    return out;
}

namespace {

void mutate_in_place(Genome& genome, double mutation_rate, Rng& rng) {
    for (auto& bit : genome.bits)
        if (rng.uniform() < mutation_rate)
            bit ^= 1;
}

/// Fitness from pre-fetched channel measurements; the hot-loop form.
double fitness_raw(std::array<double, 2> candidate, double phi, double r_aa, double r_bb) {
    if (candidate[0] == 0.0 && candidate[1] == 0.0)
        return kOriginFitnessPenalty;
    const double est_aa = model::rssi_2d(model::Channel::AA, candidate[0], candidate[1], phi);
    const double est_bb = model::rssi_2d(model::Channel::BB, candidate[0], candidate[1], phi);
    const double da = r_aa - est_aa;
    const double db = r_bb - est_bb;
    return da * da + db * db;
}

} // namespace

double fitness(std::array<double, 2> candidate_mm, double phi,
               const pipeline::MeasurementSet& measured, std::pair<int, int> rover_pair) {
    if (candidate_mm[0] == 0.0 && candidate_mm[1] == 0.0)
        throw std::domain_error("fitness: candidate at the origin");
    const double r_aa = measured.require(rover_pair, model::Channel::AA);
    const double r_bb = measured.require(rover_pair, model::Channel::BB);
    return fitness_raw(candidate_mm, phi, r_aa, r_bb);
}

int select_roulette(std::span<const double> fitnesses, Rng& rng) {
    const std::size_t n = fitnesses.size();
    const auto [min_it, max_it] = std::minmax_element(fitnesses.begin(), fitnesses.end());
    const double f_min = *min_it;
    const double f_max = *max_it;
    if (f_max == f_min)
        return static_cast<int>(rng.bounded(n));
    const double window = kSelectionWindowEpsilon * (f_max - f_min);
    double total = 0.0;
    for (const double f : fitnesses)
        total += (f_max - f) + window;
    const double u = rng.uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += (f_max - fitnesses[i]) + window;
        if (u < acc)
            return static_cast<int>(i);
    }
    return static_cast<int>(n - 1);
}

std::pair<Genome, Genome> crossover_single_point(const Genome& parent_a, const Genome& parent_b,
                                                 double crossover_rate, Rng& rng) {
    if (parent_a.bits.size() != parent_b.bits.size())
        throw std::invalid_argument("crossover: genome lengths differ");
    Genome child_a = parent_a;
    Genome child_b = parent_b;
    if (rng.uniform() < crossover_rate) {
        const std::size_t len = parent_a.bits.size();
        const std::size_t cut = 1 + rng.bounded(len - 1);
        for (std::size_t i = cut; i < len; ++i)
            std::swap(child_a.bits[i], child_b.bits[i]);
    }
    return {std::move(child_a), std::move(child_b)};
}

Genome mutate(const Genome& genome, double mutation_rate, Rng& rng) {
    Genome out = genome;
    mutate_in_place(out, mutation_rate, rng);
    return out;
}

GaRunResult run_ga(const GaConfig& config, double phi, const pipeline::MeasurementSet& measured,
                   std::pair<int, int> rover_pair) {
    validate(config);
    const double r_aa = measured.require(rover_pair, model::Channel::AA);
    const double r_bb = measured.require(rover_pair, model::Channel::BB);
    const auto n = static_cast<std::size_t>(config.population_size);

    Rng rng(config.rng_seed);
    std::vector<Genome> population;
    population.reserve(n);
    std::vector<double> fit(n);
    for (std::size_t i = 0; i < n; ++i) {
        population.push_back(random_genome(config, rng));
        fit[i] = fitness_raw(decode(population[i]), phi, r_aa, r_bb);
    }

    const auto best_index = [&] {
        return static_cast<std::size_t>(
            std::min_element(fit.begin(), fit.end()) - fit.begin());
    };

    GaRunResult result;
    std::size_t bi = best_index();
    result.best_candidate = decode(population[bi]);
    result.best_fitness = fit[bi];
    result.best_per_generation.reserve(static_cast<std::size_t>(config.generations) + 1);
    result.best_per_generation.push_back(result.best_fitness);

    std::vector<Genome> next;
    std::vector<double> next_fit;
    next.reserve(n);
    next_fit.reserve(n);
    for (int gen = 0; gen < config.generations; ++gen) {
        next.clear();
        next_fit.clear();
        // Elite slot: the current best survives unchanged.
        bi = best_index();
        next.push_back(population[bi]);
        next_fit.push_back(fit[bi]);
        while (next.size() < n) {
            const auto ia = static_cast<std::size_t>(select_roulette(fit, rng));
            const auto ib = static_cast<std::size_t>(select_roulette(fit, rng));
            auto children = crossover_single_point(population[ia], population[ib],
                                                   config.crossover_rate, rng);
            auto push_child = [&](Genome&& child) {
                mutate_in_place(child, config.mutation_rate, rng);
                const double f = fitness_raw(decode(child), phi, r_aa, r_bb);
                next.push_back(std::move(child));
                next_fit.push_back(f);
            };
            push_child(std::move(children.first));
            if (next.size() < n)
                push_child(std::move(children.second));
        }
        population.swap(next);
        fit.swap(next_fit);
        bi = best_index();
        if (fit[bi] < result.best_fitness) {
            result.best_fitness = fit[bi];
            result.best_candidate = decode(population[bi]);
        }
        result.best_per_generation.push_back(result.best_fitness);
    }
    return result;
}

MultiStartResult multi_start(const GaConfig& config, double phi,
                             const pipeline::MeasurementSet& measured,
                             std::pair<int, int> rover_pair, int threads) {
    validate(config);
    const int restarts = config.restarts;
    int workers = threads;
    if (workers <= 0)
        workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, restarts);

    struct Best {
        double fitness = std::numeric_limits<double>::infinity();
        int restart = -1;
        std::array<double, 2> candidate{};
    };

    const auto run_range = [&](int first, int stride, Best& best) {
        for (int r = first; r < restarts; r += stride) {
            GaConfig cfg = config;
            cfg.rng_seed = config.rng_seed + static_cast<std::uint64_t>(r);
            const GaRunResult run = run_ga(cfg, phi, measured, rover_pair);
            if (run.best_fitness < best.fitness ||
                (run.best_fitness == best.fitness && r < best.restart)) {
                best.fitness = run.best_fitness;
                best.restart = r;
                best.candidate = run.best_candidate;
            }
        }
    };

    std::vector<Best> bests(static_cast<std::size_t>(workers));
    if (workers == 1) {
        run_range(0, 1, bests[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run_range, w, workers, std::ref(bests[static_cast<std::size_t>(w)]));
        for (auto& t : pool)
            t.join();
    }

    // Deterministic merge: lowest fitness wins, ties break to the lowest
    // restart index, so the outcome is independent of the worker count.
    Best overall;
    for (const auto& b : bests) {
        if (b.restart < 0)
            continue;
        if (overall.restart < 0 || b.fitness < overall.fitness ||
            (b.fitness == overall.fitness && b.restart < overall.restart))
            overall = b;
    }
    return MultiStartResult{overall.candidate, overall.fitness, overall.restart};
}

} // namespace roverloc::ga
