#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace roverloc::newton {

struct NewtonConfig {
    double step_tolerance_mm = 1e-10; // on the update-vector Euclidean norm
    int max_iterations = 100;
    double fd_step = 1e-6;            // relative perturbation for finite differences
    bool use_finite_difference = false;
};

enum class Status { ConvergedStep, MaxIterations, SingularJacobian, DivergedNonFinite };

std::string_view to_string(Status s);

struct Outcome {
    std::array<double, 2> solution_mm{};
    int iterations = 0;
    Status status = Status::MaxIterations;
    double final_residual_norm = 0.0;
    std::vector<double> step_norms; // one entry per applied update
};

/// Row 1: d(RSSI model)/d(x, y); row 2: d(bearing)/d(x, y).
struct Jacobian2x2 {
    double drssi_dx = 0.0;
    double drssi_dy = 0.0;
    double dbearing_dx = 0.0;
    double dbearing_dy = 0.0;
};

/// Residual of the planar position system at `candidate`:
///   F1 = rssi_2d(AA, x, y, phi) - r_aa_measured
///   F2 = bearing(x, y) - phi
/// Both vanish at the true position under noiseless measurement. Throws
/// std::domain_error at the origin.
std::array<double, 2> residual(std::array<double, 2> candidate_mm, double phi,
                               double r_aa_measured_dbm);

/// Exact derivatives of the residual system (rho = hypot(x, y)):
///   dF1/dx = -(14.69/ln 10) x / (rho (rho + 0.31)),  dF1/dy analogous
///   dF2/dx = -y / rho^2,  dF2/dy = x / rho^2
double bearing(std::array<double, 2> candidate_mm);
Jacobian2x2 jacobian_analytic(std::array<double, 2> candidate_mm);

/// Central finite differences of `residual` with step fd_step * rho per
/// coordinate; the independent check for the analytic entries.
Jacobian2x2 jacobian_fd(std::array<double, 2> candidate_mm, double phi,
                        double r_aa_measured_dbm, double fd_step);

/// Solves J * delta = rhs by Cramer's rule. Empty when the determinant is
/// below both the absolute floor and a relative threshold against the
/// squared largest entry (mm-scale coordinates make raw determinants tiny
/// without being singular).
std::optional<std::array<double, 2>> solve_2x2(const Jacobian2x2& jac,
                                               std::array<double, 2> rhs);

/// Newton iteration x_{k+1} = x_k - J(x_k)^{-1} F(x_k), undamped. Stops on
/// step norm < step_tolerance (ConvergedStep), the iteration cap, a
/// singular Jacobian, or a non-finite/origin iterate. Numerical failures
/// are reported via the status field, never thrown. Throws
/// std::domain_error only when the initial guess is the origin.
Outcome solve(std::array<double, 2> initial_mm, double phi, double r_aa_measured_dbm,
              const NewtonConfig& config);

} // namespace roverloc::newton
