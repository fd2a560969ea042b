#include "roverloc/newton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "roverloc/model.hpp"

namespace roverloc::newton {

namespace {
constexpr double kDetAbsFloor = 1e-300;
constexpr double kDetRelFloor = 1e-14;
} // namespace

std::string_view to_string(Status s) {
    switch (s) {
    case Status::ConvergedStep: return "converged_step";
    case Status::MaxIterations: return "max_iterations";
    case Status::SingularJacobian: return "singular_jacobian";
    case Status::DivergedNonFinite: return "diverged_non_finite";
    }
    return "??";
}

double bearing(std::array<double, 2> candidate_mm) {
    return model::horizontal_angle({candidate_mm[0], candidate_mm[1], 0.0});
}

std::array<double, 2> residual(std::array<double, 2> candidate_mm, double phi,
                               double r_aa_measured_dbm) {
    const double f1 =
        model::rssi_2d(model::Channel::AA, candidate_mm[0], candidate_mm[1], phi) -
        r_aa_measured_dbm;
    const double f2 = bearing(candidate_mm) - phi;
    return {f1, f2};
}

Jacobian2x2 jacobian_analytic(std::array<double, 2> candidate_mm) {
    const double x = candidate_mm[0];
    const double y = candidate_mm[1];
    if (x == 0.0 && y == 0.0)
        throw std::domain_error("jacobian_analytic: undefined at the origin");
    const double rho = std::hypot(x, y);
    const double rho2 = rho * rho;
    const double k = -model::kPathLossSlope / std::numbers::ln10 /
                     (rho * (rho + model::kPathLossShift));
    return Jacobian2x2{k * x, k * y, -y / rho2, x / rho2};
}

Jacobian2x2 jacobian_fd(std::array<double, 2> candidate_mm, double phi,
                        double r_aa_measured_dbm, double fd_step) {
    const double rho = std::hypot(candidate_mm[0], candidate_mm[1]);
    const double h = fd_step * rho;
    if (h == 0.0)
        throw std::domain_error("jacobian_fd: zero perturbation");
    Jacobian2x2 jac;
    for (int var = 0; var < 2; ++var) {
        auto hi = candidate_mm;
        auto lo = candidate_mm;
        hi[var] += h;
        lo[var] -= h;
        const auto f_hi = residual(hi, phi, r_aa_measured_dbm);
        const auto f_lo = residual(lo, phi, r_aa_measured_dbm);
        const double d0 = (f_hi[0] - f_lo[0]) / (2.0 * h);
        const double d1 = (f_hi[1] - f_lo[1]) / (2.0 * h);
        if (var == 0) {
            jac.drssi_dx = d0;
            jac.dbearing_dx = d1;
        } else {
            jac.drssi_dy = d0;
            jac.dbearing_dy = d1;
        }
    }
    return jac;
}

std::optional<std::array<double, 2>> solve_2x2(const Jacobian2x2& jac,
                                               std::array<double, 2> rhs) {
    const double det = jac.drssi_dx * jac.dbearing_dy - jac.drssi_dy * jac.dbearing_dx;
    const double max_entry =
        std::max({std::abs(jac.drssi_dx), std::abs(jac.drssi_dy), std::abs(jac.dbearing_dx),
                  std::abs(jac.dbearing_dy)});
    if (!std::isfinite(det) || std::abs(det) <= kDetAbsFloor ||
        std::abs(det) <= kDetRelFloor * max_entry * max_entry)
        return std::nullopt;
    return std::array<double, 2>{(rhs[0] * jac.dbearing_dy - rhs[1] * jac.drssi_dy) / det,
                                 (jac.drssi_dx * rhs[1] - jac.dbearing_dx * rhs[0]) / det};
}

Outcome solve(std::array<double, 2> initial_mm, double phi, double r_aa_measured_dbm,
              const NewtonConfig& config) {
    if (initial_mm[0] == 0.0 && initial_mm[1] == 0.0)
        throw std::domain_error("newton::solve: initial guess must be off the origin");

    const auto residual_norm_at = [&](std::array<double, 2> p) {
        if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || (p[0] == 0.0 && p[1] == 0.0))
            return std::numeric_limits<double>::infinity();
        const auto f = residual(p, phi, r_aa_measured_dbm);
        return std::hypot(f[0], f[1]);
    };

    auto x = initial_mm;
    Outcome out;
    for (int k = 1; k <= config.max_iterations; ++k) {
        out.iterations = k;
        if (!std::isfinite(x[0]) || !std::isfinite(x[1]) || (x[0] == 0.0 && x[1] == 0.0)) {
            out.status = Status::DivergedNonFinite;
            break;
        }
        const auto f = residual(x, phi, r_aa_measured_dbm);
        const auto jac = config.use_finite_difference
                             ? jacobian_fd(x, phi, r_aa_measured_dbm, config.fd_step)
                             : jacobian_analytic(x);
        const auto step = solve_2x2(jac, {-f[0], -f[1]});
        if (!step) {
            out.status = Status::SingularJacobian;
            break;
        }
        x[0] += (*step)[0];
        x[1] += (*step)[1];
        const double step_norm = std::hypot((*step)[0], (*step)[1]);
        out.step_norms.push_back(step_norm);
        if (!std::isfinite(x[0]) || !std::isfinite(x[1])) {
            out.status = Status::DivergedNonFinite;
            break;
        }
        if (step_norm < config.step_tolerance_mm) {
            out.status = Status::ConvergedStep;
            break;
        }
        out.status = Status::MaxIterations;
    }
    out.solution_mm = x;
    out.final_residual_norm = residual_norm_at(x);
    return out;
}

} // namespace roverloc::newton
