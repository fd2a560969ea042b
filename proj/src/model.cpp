#include "roverloc/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "roverloc/errors.hpp"

namespace roverloc::model {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

std::string_view to_string(Channel c) {
    switch (c) {
    case Channel::AA: return "AA";
    case Channel::BB: return "BB";
    case Channel::AB: return "AB";
    case Channel::BA: return "BA";
    }
    return "??";
}

Channel channel_from_string(std::string_view s) {
    if (s == "AA") return Channel::AA;
    if (s == "BB") return Channel::BB;
    if (s == "AB") return Channel::AB;
    if (s == "BA") return Channel::BA;
    throw ConfigError("unknown channel '" + std::string(s) + "'");
}

double wrap_angle(double rad) {
    double a = std::remainder(rad, 2.0 * kPi); // [-pi, pi]
    if (a == kPi) a = -kPi;
    return a;
}

double path_loss(double distance_mm) {
    if (!std::isfinite(distance_mm) || distance_mm < 0.0)
        throw std::domain_error("path_loss: distance must be finite and >= 0");
    return -kPathLossSlope * std::log10(distance_mm + kPathLossShift) + kPathLossBias;
}

double horizontal_gain(double phi_rad) {
    if (!std::isfinite(phi_rad))
        throw std::domain_error("horizontal_gain: angle must be finite");
    return 2.5 * (std::cos(2.0 * phi_rad) - 1.0);
}

double vertical_gain(double theta_rad) {
    if (!std::isfinite(theta_rad))
        throw std::domain_error("vertical_gain: angle must be finite");
    const double arg = 2.5 * kPi - std::abs(theta_rad);
    const double denom = std::sin(arg);
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("vertical_gain: denominator sin(5pi/2 - |theta|) vanishes");
    return 25.0 * (std::cos(2.5 * kPi) * std::cos(arg) / denom) - 1.0;
}

double horizontal_angle(const RelativePosition3& rel) {
    if (rel.x_mm == 0.0 && rel.y_mm == 0.0)
        throw std::domain_error("horizontal_angle: undefined at the origin");
    return std::atan2(rel.y_mm, rel.x_mm);
}

double elevation_angle(const RelativePosition3& rel) {
    if (rel.x_mm == 0.0 && rel.y_mm == 0.0)
        throw std::domain_error("elevation_angle: undefined above the origin");
    return std::atan(rel.z_mm / std::hypot(rel.x_mm, rel.y_mm));
}

RelativePosition3 relative_position(const Pose2D& origin_pose,
                                    const Pose2D& target_pose,
                                    std::array<double, 2> antenna_offset_origin,
                                    std::array<double, 2> antenna_offset_target) {
    const auto world_antenna = [](const Pose2D& pose, const std::array<double, 2>& off) {
        const double c = std::cos(pose.heading_rad);
        const double s = std::sin(pose.heading_rad);
        return std::array<double, 2>{pose.x_mm + c * off[0] - s * off[1],
                                     pose.y_mm + s * off[0] + c * off[1]};
    };
    const auto a = world_antenna(origin_pose, antenna_offset_origin);
    const auto b = world_antenna(target_pose, antenna_offset_target);
    const double dx = b[0] - a[0];
    const double dy = b[1] - a[1];
    // Rotate the world offset into the origin rover's body frame.
    const double c = std::cos(origin_pose.heading_rad);
    const double s = std::sin(origin_pose.heading_rad);
    return RelativePosition3{c * dx + s * dy, -s * dx + c * dy, 0.0};
}

double rssi_2d(Channel channel, double x_mm, double y_mm, double phi_rad) {
    if (x_mm == 0.0 && y_mm == 0.0)
        throw std::domain_error("rssi_2d: undefined at the origin");
    const double base = path_loss(std::hypot(x_mm, y_mm));
    switch (channel) {
    case Channel::AA:
        return base + 5.0 * (std::cos(2.0 * phi_rad) - 1.0);
    case Channel::BB:
        return base + 5.0 * (std::cos(2.0 * (kPi / 2.0 - phi_rad)) - 1.0);
    default:
        throw std::invalid_argument("rssi_2d: only channels AA and BB exist in the planar model");
    }
}

double rssi_3d(const RelativePosition3& rel, const AnglePair& angles_fwd,
               const AnglePair& angles_rev) {
    if (rel.x_mm == 0.0 && rel.y_mm == 0.0 && rel.z_mm == 0.0)
        throw std::domain_error("rssi_3d: undefined at the origin");
    const double range = std::sqrt(rel.x_mm * rel.x_mm + rel.y_mm * rel.y_mm + rel.z_mm * rel.z_mm);
    return path_loss(range) + horizontal_gain(angles_fwd.phi_rad) +
           horizontal_gain(angles_rev.phi_rad) + vertical_gain(angles_fwd.theta_rad) +
           vertical_gain(angles_rev.theta_rad);
}

double recover_phi(double r_aa_dbm, double r_bb_dbm, double tol_clamp) {
    const double diff = r_aa_dbm - r_bb_dbm;
    if (!std::isfinite(diff) || std::abs(diff) > 10.0 + tol_clamp)
        throw MeasurementInconsistency(
            "recover_phi: |r_aa - r_bb| = " + std::to_string(std::abs(diff)) +
            " exceeds the model bound 10 dBm");
    const double u = std::clamp(diff / 10.0, -1.0, 1.0);
    return 0.5 * std::acos(u);
}

} // namespace roverloc::model
