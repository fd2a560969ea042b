#pragma once

#include <utility>
#include <vector>

#include "roverloc/model.hpp"

namespace roverloc::pipeline {

/// RSSI samples keyed by (rover_pair, channel), plus the noise level they
/// were synthesized (or measured) under. The planar pipeline expects
/// channels AA and BB exactly once per target pair (0, i).
struct MeasurementSet {
    std::vector<model::RssiSample> samples;
    double noise_sigma_dbm = 0.0;

    const model::RssiSample* find(std::pair<int, int> rover_pair, model::Channel channel) const;

    /// Returns the sample value; throws ConfigError when the channel is
    /// absent or duplicated for the pair.
    double require(std::pair<int, int> rover_pair, model::Channel channel) const;
};

} // namespace roverloc::pipeline
