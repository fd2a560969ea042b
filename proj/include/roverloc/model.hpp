#pragma once

#include <array>
#include <string_view>
#include <utility>

namespace roverloc::model {

// Signal model constants (dBm scale). All distances throughout the library
// are millimetres; the path-loss curve consumes millimetre distances
// directly, and synthesis and estimation share the same forward model, so
// estimates are unit-consistent end to end.
inline constexpr double kPathLossSlope = 14.69;
inline constexpr double kPathLossShift = 0.31;
inline constexpr double kPathLossBias = -49.17;

/// A rover's planar position (mm) and heading (rad, in [-pi, pi)).
struct Pose2D {
    double x_mm = 0.0;
    double y_mm = 0.0;
    double heading_rad = 0.0;
};

/// Position of a remote antenna expressed in a local antenna frame.
struct RelativePosition3 {
    double x_mm = 0.0;
    double y_mm = 0.0;
    double z_mm = 0.0;
};

/// Horizontal and elevation angles of a remote antenna seen from a local
/// antenna frame.
struct AnglePair {
    double phi_rad = 0.0;
    double theta_rad = 0.0;
};

/// Antenna pairing of an RSSI sample. The planar pipeline uses AA and BB;
/// AB/BA exist for the full forward model.
enum class Channel { AA, BB, AB, BA };

std::string_view to_string(Channel c);
Channel channel_from_string(std::string_view s);

/// One received-signal-strength sample between a rover pair.
struct RssiSample {
    Channel channel = Channel::AA;
    double value_dbm = 0.0;
    std::pair<int, int> rover_pair{0, 0};
};

/// Antenna mounting offsets from the rover centre (mm, body frame): A on
/// the mid-left edge, B on the mid-bottom edge of the 50 mm body.
inline constexpr std::array<double, 2> kAntennaOffsetA{-25.0, 0.0};
inline constexpr std::array<double, 2> kAntennaOffsetB{0.0, -25.0};

/// Normalizes an angle to [-pi, pi).
double wrap_angle(double rad);

/// Distance-dependent RSSI component: -14.69*log10(d + 0.31) - 49.17.
/// Strictly decreasing in d. Throws std::domain_error for negative or
/// non-finite distances.
double path_loss(double distance_mm);

/// Horizontal antenna gain (5/2)(cos 2phi - 1), in [-5, 0], even, pi-periodic.
double horizontal_gain(double phi_rad);

/// Vertical antenna gain 25*(cos(5pi/2)cos(5pi/2-|theta|)/sin(5pi/2-|theta|)) - 1.
/// cos(5pi/2) = 0, so this is the constant -1 everywhere the denominator is
/// nonzero; kept in the printed form rather than folded away. Throws
/// std::domain_error where the denominator vanishes (|theta| near pi/2 + k*pi).
double vertical_gain(double theta_rad);

/// Horizontal angle of `rel`: the two-argument arctangent of (y, x), which
/// equals arctan(y/x) for x > 0 and extends to pi/2 at x = 0, y > 0.
/// Throws std::domain_error when (x, y) = (0, 0).
double horizontal_angle(const RelativePosition3& rel);

/// Elevation angle arctan(z / hypot(x, y)), in (-pi/2, pi/2).
/// Throws std::domain_error when (x, y) = (0, 0).
double elevation_angle(const RelativePosition3& rel);

/// Offset of the target antenna from the origin antenna, rotated into the
/// origin rover's body frame (planar; z = 0). Antenna offsets are body-frame
/// mm pairs relative to each rover's centre.
RelativePosition3 relative_position(const Pose2D& origin_pose,
                                    const Pose2D& target_pose,
                                    std::array<double, 2> antenna_offset_origin,
                                    std::array<double, 2> antenna_offset_target);

/// Planar channel model between two rovers with shared orientation:
///   AA: path_loss(hypot(x, y)) + 5(cos 2phi - 1)
///   BB: path_loss(hypot(x, y)) + 5(cos 2(pi/2 - phi) - 1)
/// AA - BB == 10 cos 2phi for every input. Throws std::domain_error at the
/// origin and std::invalid_argument for AB/BA.
double rssi_2d(Channel channel, double x_mm, double y_mm, double phi_rad);

/// Full forward model: path loss over the 3-D range plus horizontal and
/// vertical gains at both ends.
double rssi_3d(const RelativePosition3& rel, const AnglePair& angles_fwd,
               const AnglePair& angles_rev);

/// Inverts AA - BB = 10 cos 2phi: phi = acos(clamp(diff/10)) / 2, in [0, pi/2].
/// Differences beyond 10 + tol_clamp throw MeasurementInconsistency; within
/// the tolerance the ratio is clamped before acos.
double recover_phi(double r_aa_dbm, double r_bb_dbm, double tol_clamp = 1e-6);

} // namespace roverloc::model
