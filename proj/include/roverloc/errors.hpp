#pragma once

#include <stdexcept>
#include <string>

namespace roverloc {

/// Scenario, flag, or measurement-set shape problems (missing channel,
/// duplicate rover id, bad file). Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Measured channel pair is inconsistent with the signal model beyond the
/// clamping tolerance (|r_aa - r_bb| > 10 + tol).
class MeasurementInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace roverloc
