#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "roverloc/measurement.hpp"
#include "roverloc/rng.hpp"

namespace roverloc::ga {

struct VarBounds {
    double lo_mm = 0.0;
    double hi_mm = 100000.0;
};

/// Fixed-width bit string over two decision variables. Bits are stored
/// MSB-first per variable, so the all-zero string decodes to the lower
/// bounds and the all-one string to the upper bounds.
struct Genome {
    std::vector<std::uint8_t> bits; // 0/1 flags, length 2 * bits_per_var
    std::array<VarBounds, 2> bounds{};
    int bits_per_var = 24;
};

struct GaConfig {
    int population_size = 100;
    int generations = 200;
    double crossover_rate = 0.9;
    double mutation_rate = 0.01; // per bit
    int restarts = 100;          // n*n, run as n x n
    std::array<VarBounds, 2> bounds{{{0.0, 100000.0}, {0.0, 100000.0}}};
    int bits_per_var = 24;
    std::uint64_t rng_seed = 0;
};

/// Window width added when converting fitness (minimized) to roulette
/// weights; keeps the worst individual selectable.
inline constexpr double kSelectionWindowEpsilon = 0.01;

/// Fitness assigned to a candidate that decodes exactly to the origin,
/// where the channel model is undefined. Large enough to lose every
/// selection contest, small enough to keep the window arithmetic finite.
inline constexpr double kOriginFitnessPenalty = 1e30;

void validate(const GaConfig& config);

Genome random_genome(const GaConfig& config, Rng& rng);

/// Binary-to-decimal mapping: v = lo + int(bits) * (hi - lo) / (2^b - 1).
std::array<double, 2> decode(const Genome& genome);

/// Squared residual between measured and candidate-predicted RSSI on the
/// AA and BB channels of `rover_pair`, with the orientation angle fixed at
/// `phi`. Zero iff both residuals vanish. Throws ConfigError when a channel
/// is missing and std::domain_error for the origin candidate.
double fitness(std::array<double, 2> candidate_mm, double phi,
               const pipeline::MeasurementSet& measured, std::pair<int, int> rover_pair);

/// Roulette-wheel draw for minimization. Weights are windowed per call:
/// s_i = (f_max - f_i) + eps * (f_max - f_min); equal fitnesses degenerate
/// to a uniform draw.
int select_roulette(std::span<const double> fitnesses, Rng& rng);

/// With probability `crossover_rate` picks a cut in [1, len-1] uniformly
/// and swaps suffixes; otherwise returns copies of the parents.
std::pair<Genome, Genome> crossover_single_point(const Genome& parent_a, const Genome& parent_b,
                                                 double crossover_rate, Rng& rng);

/// Flips each bit independently with probability `mutation_rate`.
Genome mutate(const Genome& genome, double mutation_rate, Rng& rng);

struct GaRunResult {
    std::array<double, 2> best_candidate{};
    double best_fitness = 0.0;
    /// Best-ever fitness after initialization and after each generation
    /// (generations + 1 entries); non-increasing thanks to elitism.
    std::vector<double> best_per_generation;
};

/// One GA run: generational replacement with a single elite slot. The RNG
/// stream is fully determined by config.rng_seed.
GaRunResult run_ga(const GaConfig& config, double phi, const pipeline::MeasurementSet& measured,
                   std::pair<int, int> rover_pair);

struct MultiStartResult {
    std::array<double, 2> best_candidate{};
    double best_fitness = 0.0;
    int best_restart = 0;
};

/// Runs config.restarts independent GA instances and keeps the best.
/// Restart i runs with seed rng_seed + i (each run finalizes its seed with
/// mix64, so this is a splitmix-style stream; restart 0 is bit-identical
/// to a plain run_ga call). Ties break toward the lowest restart index, so
/// the result is independent of `threads`.
MultiStartResult multi_start(const GaConfig& config, double phi,
                             const pipeline::MeasurementSet& measured,
                             std::pair<int, int> rover_pair, int threads = 1);

} // namespace roverloc::ga
