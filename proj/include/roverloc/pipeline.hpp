#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roverloc/ga.hpp"
#include "roverloc/measurement.hpp"
#include "roverloc/newton.hpp"
#include "roverloc/scenario.hpp"

namespace roverloc::pipeline {

enum class Mode { GaOnly, GaNewton };

struct PhaseTimings {
    double ga_seconds = 0.0;
    double newton_seconds = 0.0;
};

/// Everything recorded about one target rover's estimate. `failure` is set
/// (and the estimate fields left empty) when phi recovery rejects the
/// measurements; solver trouble is reported through the Newton status
/// instead of aborting the batch.
struct EstimationResult {
    int rover_index = 0;
    model::Pose2D actual{};
    std::array<double, 2> ga_seed{};
    double ga_relative_error = std::numeric_limits<double>::quiet_NaN();
    std::optional<newton::Outcome> newton_outcome;
    std::optional<double> newton_relative_error;
    double phi_used = std::numeric_limits<double>::quiet_NaN();
    PhaseTimings timings{};
    std::optional<std::string> failure;
};

/// |d - d'| / d on Euclidean distances from the origin. Throws
/// std::domain_error when the actual position is the origin.
double relative_error(const model::Pose2D& actual, std::array<double, 2> estimated_mm);

/// Full per-rover estimation: recover phi from the pair's AA/BB samples,
/// seed with the GA multi-start, then (in GaNewton mode) refine with
/// Newton from the seed. The GA stream is derived from
/// (ga_config.rng_seed, rover_index), so results do not depend on the
/// order rovers are processed in.
EstimationResult estimate_rover(const MeasurementSet& measured, int rover_index,
                                const model::Pose2D& actual, const ga::GaConfig& ga_config,
                                const newton::NewtonConfig& newton_config, Mode mode,
                                int threads = 1);

struct ScenarioSummary {
    double mean_ga_relative_error = 0.0;
    std::optional<double> mean_newton_relative_error;
    double total_seconds = 0.0;
};

struct ScenarioRun {
    std::vector<EstimationResult> results; // ordered by rover id
    ScenarioSummary summary;
};

/// Synthesizes measurements for the scenario and estimates every non-origin
/// rover independently. The scenario seed feeds both the noise streams and
/// the per-rover GA streams.
ScenarioRun run_scenario(const harness::Scenario& scenario, const ga::GaConfig& ga_config,
                         const newton::NewtonConfig& newton_config, Mode mode, int threads = 1);

} // namespace roverloc::pipeline
