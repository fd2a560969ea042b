#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roverloc/model.hpp"

namespace roverloc::harness {

struct RoverSpec {
    int id = 0;
    model::Pose2D pose{};
};

/// A named layout of rovers: rover 0 sits at the origin and the others are
/// the estimation targets. `seed` drives every random draw of a run.
struct Scenario {
    std::string name;
    std::vector<RoverSpec> rovers;
    double noise_sigma_dbm = 0.0;
    std::uint64_t seed = 0;
};

/// Throws ConfigError on duplicate ids, a missing origin rover (id 0 at
/// (0, 0)), non-finite fields, mixed headings, or targets with x < 0 (the
/// arctangent formulation only covers the first and fourth quadrants).
void validate(const Scenario& scenario);

const RoverSpec* find_rover(const Scenario& scenario, int id);

} // namespace roverloc::harness
