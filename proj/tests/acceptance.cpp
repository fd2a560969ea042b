// Acceptance suite: runs every release criterion end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "roverloc/ga.hpp"
#include "roverloc/harness.hpp"
#include "roverloc/model.hpp"
#include "roverloc/newton.hpp"
#include "roverloc/pipeline.hpp"
#include "roverloc/rng.hpp"

using namespace roverloc;

namespace {

int g_failures = 0;

class Criterion {
public:
    explicit Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& detail) {
        if (!ok) {
            failed_ = true;
            details_.push_back(detail);
        }
    }

    void note(const std::string& detail) { details_.push_back(detail); }

    void finish(double runtime_limit_seconds = 0.0) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (runtime_limit_seconds > 0.0 && secs > runtime_limit_seconds) {
            failed_ = true;
            details_.push_back("runtime " + harness::format_fixed(secs, 2) + "s exceeds " +
                               harness::format_fixed(runtime_limit_seconds, 0) + "s");
        }
        std::cout << (failed_ ? "[FAIL]" : "[PASS]") << " criterion " << number_ << ": "
                  << title_ << " (" << harness::format_fixed(secs, 2) << " s";
        for (const auto& d : details_)
            std::cout << "; " << d;
        std::cout << ")\n" << std::flush;
        if (failed_)
            ++g_failures;
    }

private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    bool failed_ = false;
    std::vector<std::string> details_;
};

std::filesystem::path fig5_path() {
    const char* env = std::getenv("ROVERLOC_FIG5");
    if (env == nullptr) {
        std::cerr << "ROVERLOC_FIG5 is not set\n";
        std::exit(1);
    }
    return env;
}

double median3(std::array<double, 3> v) {
    std::sort(v.begin(), v.end());
    return v[1];
}

double rel_distance_error(const std::array<double, 2>& truth, const std::array<double, 2>& est) {
    const double d = std::hypot(truth[0], truth[1]);
    return std::abs(d - std::hypot(est[0], est[1])) / d;
}

struct SeedCase {
    int rover;
    std::array<double, 2> truth;
    std::array<double, 2> seed;
};

const std::vector<SeedCase> kNewtonSeeds = {
    {2, {10000.0, 10000.0}, {10122.98584, 10196.990967}},
    {3, {10000.0, 20000.0}, {11677.993774, 20789.993286}},
    {8, {0.0, 60000.0}, {2766.006470, 64238.998413}},
};

// --- criterion bodies -------------------------------------------------------

void criterion1_jacobian_oracle() {
    Criterion c(1, "analytic Jacobian matches central finite differences");
    Rng rng(160);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const std::array<double, 2> p{500.0 + rng.uniform() * 94500.0,
                                      500.0 + rng.uniform() * 94500.0};
        const double phi = newton::bearing(p);
        const double r_aa = model::rssi_2d(model::Channel::AA, p[0], p[1], phi);
        const auto a = newton::jacobian_analytic(p);
        const auto fd = newton::jacobian_fd(p, phi, r_aa, 1e-6);
        const auto dev = [](double u, double v) { return std::abs(u - v) / std::abs(v); };
        worst = std::max({worst, dev(a.drssi_dx, fd.drssi_dx), dev(a.drssi_dy, fd.drssi_dy),
                          dev(a.dbearing_dx, fd.dbearing_dx), dev(a.dbearing_dy, fd.dbearing_dy)});
    }
    c.note("max rel deviation " + harness::format_fixed(worst * 1e9, 3) + "e-9");
    c.require(worst < 1e-6, "deviation exceeds 1e-6");
    c.finish(1.0);
}

void criterion2_forward_inverse_identity() {
    Criterion c(2, "channel pair inverts to the true bearing");
    Rng rng(161);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = 500.0 + rng.uniform() * 94500.0;
        const double y = 500.0 + rng.uniform() * 94500.0;
        const double phi = model::horizontal_angle({x, y, 0.0});
        const double aa = model::rssi_2d(model::Channel::AA, x, y, phi);
        const double bb = model::rssi_2d(model::Channel::BB, x, y, phi);
        worst = std::max(worst, std::abs(model::recover_phi(aa, bb) - phi));
    }
    c.note("max |phi error| " + harness::format_fixed(worst * 1e12, 3) + "e-12 rad");
    c.require(worst < 1e-9, "bearing error exceeds 1e-9 rad");
    c.finish(1.0);
}

void criterion3_newton_from_ga_seeds() {
    Criterion c(3, "Newton refinement from recorded GA seeds (rovers 2, 3, 8)");
    const auto measured = harness::synthesize_measurements(harness::load_scenario(fig5_path()));
    for (const auto& row : kNewtonSeeds) {
        const double r_aa = measured.require({0, row.rover}, model::Channel::AA);
        const double r_bb = measured.require({0, row.rover}, model::Channel::BB);
        const double phi = model::recover_phi(r_aa, r_bb);
        const auto out = newton::solve(row.seed, phi, r_aa, {});
        const double err = rel_distance_error(row.truth, out.solution_mm);
        c.note("rover " + std::to_string(row.rover) + ": err " +
               harness::format_fixed(err * 1e12, 3) + "e-12 in " +
               std::to_string(out.iterations) + " iters");
        c.require(out.iterations <= 100, "iteration cap exceeded");
        c.require(err < 1e-10, "relative distance error not below 1e-10");
    }
    c.finish(1.0);
}

void criterion4_relative_error_metric() {
    Criterion c(4, "relative-error metric reproduces the printed table values");
    const double r2 =
        pipeline::relative_error({10000.0, 10000.0, 0.0}, {10122.98584, 10196.990967});
    const double r8 =
        pipeline::relative_error({0.0, 60000.0, 0.0}, {2766.006470, 64238.998413});
    c.note("rover 2: " + harness::format_fixed(r2, 6) + ", rover 8: " +
           harness::format_fixed(r8, 6));
    c.require(std::abs(r2 - 0.016006) < 1e-6, "rover-2 value off by more than 1e-6");
    c.require(std::abs(r8 - 0.071642) < 1e-6, "rover-8 value off by more than 1e-6");
    c.finish(0.0);
}

void criterion5_experiment1() {
    Criterion c(5, "GA(10x10)+Newton on the fig5 layout beats the bound and the GA");
    const harness::Scenario base = harness::load_scenario(fig5_path());
    harness::RunOptions options;
    options.threads = 0; // all cores
    std::array<double, 3> newton_avgs{};
    std::array<double, 3> ga_avgs{};
    for (int s = 0; s < 3; ++s) {
        harness::Scenario scenario = base;
        scenario.seed = static_cast<std::uint64_t>(s + 1);
        const auto report = harness::run_experiment1(scenario, {}, {}, options);
        newton_avgs[static_cast<std::size_t>(s)] = report.newton_average.value_or(1.0);
        ga_avgs[static_cast<std::size_t>(s)] = report.ga_average.value_or(1.0);
    }
    const double newton_med = median3(newton_avgs);
    const double ga_med = median3(ga_avgs);
    c.note("median newton avg " + harness::format_fixed(newton_med, 6));
    c.note("median ga avg " + harness::format_fixed(ga_med, 6));
    c.require(newton_med <= 0.02, "median GA+Newton average error above 0.02");
    c.require(newton_med <= ga_med, "GA+Newton did not beat the GA-only average");
    c.finish(300.0);
}

void criterion6_experiment2_trend() {
    Criterion c(6, "restart sweep: GA+Newton beats GA-only at every n, time grows");
    const harness::Scenario base = harness::load_scenario(fig5_path());
    const std::vector<int> n_list{2, 4, 8};
    harness::RunOptions options;
    options.threads = 0;
    std::array<std::array<double, 3>, 3> ga_err{};  // [n index][seed]
    std::array<double, 3> cmp_err{};
    std::array<double, 3> t2{};
    std::array<double, 3> t8{};
    for (int s = 0; s < 3; ++s) {
        harness::Scenario scenario = base;
        scenario.seed = static_cast<std::uint64_t>(s + 1);
        const auto report = harness::run_experiment2(scenario, n_list, {}, {}, options);
        for (std::size_t k = 0; k < 3; ++k)
            ga_err[k][static_cast<std::size_t>(s)] = report.sweep[k].avg_rel_error;
        cmp_err[static_cast<std::size_t>(s)] = report.sweep[3].avg_rel_error;
        t2[static_cast<std::size_t>(s)] = report.sweep[0].seconds;
        t8[static_cast<std::size_t>(s)] = report.sweep[2].seconds;
    }
    const double cmp_med = median3(cmp_err);
    c.note("ga+newton median " + harness::format_fixed(cmp_med, 8));
    for (std::size_t k = 0; k < 3; ++k) {
        const double ga_med = median3(ga_err[k]);
        c.note("n=" + std::to_string(n_list[k]) + " ga median " +
               harness::format_fixed(ga_med, 8));
        c.require(cmp_med <= ga_med,
                  "GA+Newton not better at n=" + std::to_string(n_list[k]));
    }
    const double t2_med = median3(t2);
    const double t8_med = median3(t8);
    c.note("time n=2: " + harness::format_fixed(t2_med, 3) + "s, n=8: " +
           harness::format_fixed(t8_med, 3) + "s");
    c.require(t8_med > t2_med, "computing time not increasing from n=2 to n=8");
    c.finish(300.0);
}

void criterion7_cli_determinism() {
    Criterion c(7, "two identical solve invocations emit byte-identical CSV");
    const char* cli = std::getenv("ROVERLOC_CLI");
    if (cli == nullptr) {
        c.require(false, "ROVERLOC_CLI is not set");
        c.finish(0.0);
        return;
    }
    const auto out_a = std::filesystem::temp_directory_path() / "roverloc_det_a.csv";
    const auto out_b = std::filesystem::temp_directory_path() / "roverloc_det_b.csv";
    const std::string base = std::string("\"") + cli + "\" solve --scenario \"" +
                             fig5_path().string() +
                             "\" --mode ga-newton --seed 12345 --ga-pop 20 --ga-gens 30 "
                             "--restarts 4 --no-timings --format csv --out ";
    const int rc_a = std::system((base + "\"" + out_a.string() + "\"").c_str());
    const int rc_b = std::system((base + "\"" + out_b.string() + "\"").c_str());
    c.require(rc_a == rc_b, "exit codes differ between runs");
    const auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const std::string a = slurp(out_a);
    const std::string b = slurp(out_b);
    c.require(!a.empty(), "first run produced no output");
    c.require(a == b, "CSV outputs differ");
    c.finish(60.0);
}

void criterion8_ga_property_suite() {
    Criterion c(8, "GA property suite (decode bounds, elitism, roulette, multi-start)");

    // Decode bounds over one million random genomes.
    {
        ga::GaConfig cfg;
        Rng rng(162);
        bool in_bounds = true;
        for (int i = 0; i < 1000000 && in_bounds; ++i) {
            const auto v = ga::decode(ga::random_genome(cfg, rng));
            in_bounds = v[0] >= 0.0 && v[0] <= 100000.0 && v[1] >= 0.0 && v[1] <= 100000.0;
        }
        c.require(in_bounds, "decode left the bounds");
    }

    // Elitism: the best-ever trace of a seeded run never increases.
    {
        const double phi = model::horizontal_angle({10000.0, 10000.0, 0.0});
        pipeline::MeasurementSet m;
        m.samples.push_back({model::Channel::AA,
                             model::rssi_2d(model::Channel::AA, 10000.0, 10000.0, phi), {0, 2}});
        m.samples.push_back({model::Channel::BB,
                             model::rssi_2d(model::Channel::BB, 10000.0, 10000.0, phi), {0, 2}});
        ga::GaConfig cfg;
        cfg.population_size = 40;
        cfg.generations = 80;
        cfg.rng_seed = 4711;
        const auto run = ga::run_ga(cfg, phi, m, {0, 2});
        c.require(std::is_sorted(run.best_per_generation.rbegin(),
                                 run.best_per_generation.rend()),
                  "best-fitness trace increased");

        // Multi-start best-of-k monotonicity on a shared stream.
        double previous = std::numeric_limits<double>::infinity();
        bool monotone = true;
        for (const int k : {1, 2, 4, 8}) {
            cfg.restarts = k;
            const auto ms = ga::multi_start(cfg, phi, m, {0, 2});
            monotone = monotone && ms.best_fitness <= previous;
            previous = ms.best_fitness;
        }
        c.require(monotone, "multi-start best-of-k fitness increased");
    }

    // Roulette frequencies vs the windowed probabilities, chi-square at
    // p > 0.001 (statistic below the 0.999 quantile for the fixed vectors).
    {
        const auto chi_square = [](const std::vector<double>& fitnesses,
                                   const std::vector<double>& probs, std::uint64_t seed) {
            Rng rng(seed);
            const int draws = 100000;
            std::vector<int> counts(fitnesses.size(), 0);
            for (int i = 0; i < draws; ++i)
                ++counts[static_cast<std::size_t>(ga::select_roulette(fitnesses, rng))];
            double stat = 0.0;
            for (std::size_t i = 0; i < probs.size(); ++i) {
                const double expected = probs[i] * draws;
                const double diff = counts[i] - expected;
                stat += diff * diff / expected;
            }
            return stat;
        };
        // Windowed weights for (0, 10): (10.1, 0.1) / 10.2.
        const double stat1 = chi_square({0.0, 10.0}, {10.1 / 10.2, 0.1 / 10.2}, 163);
        c.require(stat1 < 10.828, "chi-square (2 classes) rejected at p = 0.001, stat " +
                                      harness::format_fixed(stat1, 3));
        // Windowed weights for (0..4): (4.04, 3.04, 2.04, 1.04, 0.04) / 10.2.
        const double stat2 = chi_square({0.0, 1.0, 2.0, 3.0, 4.0},
                                        {4.04 / 10.2, 3.04 / 10.2, 2.04 / 10.2, 1.04 / 10.2,
                                         0.04 / 10.2},
                                        164);
        c.require(stat2 < 18.467, "chi-square (5 classes) rejected at p = 0.001, stat " +
                                      harness::format_fixed(stat2, 3));
    }
    c.finish(60.0);
}

void criterion9_exclusions() {
    Criterion c(9, "not asserted: absolute computing times and Newton iteration counts "
                   "are environment/implementation artifacts, reported only");
    c.finish(0.0);
}

} // namespace

int main() {
    criterion1_jacobian_oracle();
    criterion2_forward_inverse_identity();
    criterion3_newton_from_ga_seeds();
    criterion4_relative_error_metric();
    criterion5_experiment1();
    criterion6_experiment2_trend();
    criterion7_cli_determinism();
    criterion8_ga_property_suite();
    criterion9_exclusions();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
