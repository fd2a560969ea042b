#include "roverloc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "roverloc/errors.hpp"
#include "roverloc/harness.hpp"

namespace roverloc::pipeline {

namespace {

constexpr std::uint64_t kRoverStreamTag = 0x726f766572ULL; // per-rover GA streams

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

const model::RssiSample* MeasurementSet::find(std::pair<int, int> rover_pair,
                                              model::Channel channel) const {
    const model::RssiSample* hit = nullptr;
    for (const auto& s : samples) {
        if (s.rover_pair == rover_pair && s.channel == channel) {
            if (hit != nullptr)
                return nullptr; // duplicates are as unusable as absence
            hit = &s;
        }
    }
    return hit;
}

double MeasurementSet::require(std::pair<int, int> rover_pair, model::Channel channel) const {
    const auto* s = find(rover_pair, channel);
    if (s == nullptr)
        throw ConfigError("measurement set lacks a unique " +
                          std::string(model::to_string(channel)) + " sample for pair (" +
                          std::to_string(rover_pair.first) + ", " +
                          std::to_string(rover_pair.second) + ")");
    return s->value_dbm;
}

double relative_error(const model::Pose2D& actual, std::array<double, 2> estimated_mm) {
    const double d = std::hypot(actual.x_mm, actual.y_mm);
    if (d == 0.0)
        throw std::domain_error("relative_error: actual position at the origin");
    const double d_est = std::hypot(estimated_mm[0], estimated_mm[1]);
    return std::abs(d - d_est) / d;
}

EstimationResult estimate_rover(const MeasurementSet& measured, int rover_index,
                                const model::Pose2D& actual, const ga::GaConfig& ga_config,
                                const newton::NewtonConfig& newton_config, Mode mode,
                                int threads) {
    EstimationResult result;
    result.rover_index = rover_index;
    result.actual = actual;
    const std::pair<int, int> pair{0, rover_index};

    const double r_aa = measured.require(pair, model::Channel::AA);
    const double r_bb = measured.require(pair, model::Channel::BB);

    try {
        result.phi_used = model::recover_phi(r_aa, r_bb);
    } catch (const MeasurementInconsistency& e) {
        result.failure = e.what();
        return result;
    }

    ga::GaConfig rover_cfg = ga_config;
    rover_cfg.rng_seed = derive_stream(derive_stream(ga_config.rng_seed, kRoverStreamTag),
                                       static_cast<std::uint64_t>(rover_index));

    const auto t_ga = std::chrono::steady_clock::now();
    const auto seed = ga::multi_start(rover_cfg, result.phi_used, measured, pair, threads);
    result.timings.ga_seconds = seconds_since(t_ga);
    result.ga_seed = seed.best_candidate;
    result.ga_relative_error = relative_error(actual, seed.best_candidate);

    if (mode == Mode::GaNewton) {
        const auto t_newton = std::chrono::steady_clock::now();
        const auto outcome = newton::solve(seed.best_candidate, result.phi_used, r_aa,
                                           newton_config);
        result.timings.newton_seconds = seconds_since(t_newton);
        result.newton_relative_error = relative_error(actual, outcome.solution_mm);
        result.newton_outcome = outcome;
    }
    return result;
}

ScenarioRun run_scenario(const harness::Scenario& scenario, const ga::GaConfig& ga_config,
                         const newton::NewtonConfig& newton_config, Mode mode, int threads) {
    harness::validate(scenario);
    if (scenario.rovers.size() < 2)
        throw ConfigError("scenario '" + scenario.name + "' has no target rovers");

    const auto t0 = std::chrono::steady_clock::now();
    const MeasurementSet measured = harness::synthesize_measurements(scenario);

    // The scenario seed is the root of every stream in the run.
    ga::GaConfig cfg = ga_config;
    cfg.rng_seed = scenario.seed;

    std::vector<const harness::RoverSpec*> targets;
    for (const auto& rover : scenario.rovers)
        if (rover.id != 0)
            targets.push_back(&rover);
    std::sort(targets.begin(), targets.end(),
              [](const auto* a, const auto* b) { return a->id < b->id; });

    ScenarioRun run;
    for (const auto* rover : targets)
        run.results.push_back(
            estimate_rover(measured, rover->id, rover->pose, cfg, newton_config, mode, threads));

    double ga_sum = 0.0;
    double newton_sum = 0.0;
    std::size_t counted = 0;
    for (const auto& r : run.results) {
        if (r.failure)
            continue;
        ga_sum += r.ga_relative_error;
        if (r.newton_relative_error)
            newton_sum += *r.newton_relative_error;
        ++counted;
    }
    if (counted > 0) {
        run.summary.mean_ga_relative_error = ga_sum / static_cast<double>(counted);
        if (mode == Mode::GaNewton)
            run.summary.mean_newton_relative_error = newton_sum / static_cast<double>(counted);
    }
    run.summary.total_seconds = seconds_since(t0);
    return run;
}

} // namespace roverloc::pipeline
