#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <ostream>
#include <vector>

#include "spcauchy/collocation.hpp"

namespace spc {

/// Thin SVD of A, computed once and reused for every regularization parameter.
/// For gamma > 0 the minimizer of |A x - b|^2 + gamma |x|^2 is
///   x = sum_i sigma_i / (sigma_i^2 + gamma) * (u_i . b) v_i.
class TikhonovSolver {
public:
    /// Throws std::runtime_error if the SVD fails to converge.
    TikhonovSolver(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);
    explicit TikhonovSolver(const CollocationSystem& sys) : TikhonovSolver(sys.A, sys.b) {}

    [[nodiscard]] Eigen::VectorXd solve(double gamma) const;
    /// |A x_gamma - b|, from the filter factors plus the part of b outside range(A).
    [[nodiscard]] double residual_norm(double gamma) const;
    [[nodiscard]] double solution_norm(double gamma) const;

    [[nodiscard]] const Eigen::VectorXd& singular_values() const { return sigma_; }
    [[nodiscard]] double perpendicular_residual() const { return perp_; }

private:
    Eigen::MatrixXd V_;
    Eigen::VectorXd sigma_;
    Eigen::VectorXd beta_;  // U^T b
    double perp_ = 0.0;     // |b - U U^T b|
};

/// Regularized least squares for one gamma > 0.
Eigen::VectorXd tikhonov_solve(const CollocationSystem& sys, double gamma);

struct TikhonovSweep {
    std::vector<double> gammas;  // strictly decreasing
    std::vector<Eigen::VectorXd> coefficients;
    std::vector<double> residual_norms;
    std::vector<double> solution_norms;
    /// Signed three-point curvature of (log|x|^2, log|Ax-b|^2); zero at both ends.
    std::vector<double> curvature;
    /// Residual norms non-increasing and solution norms non-decreasing along the sweep.
    bool monotone = true;
};

struct LCurveSelection {
    double gamma = 0.0;
    std::size_t index = 0;
    bool degenerate = false;
    TikhonovSweep sweep;
};

/// `count` log-spaced values from `hi` down to `lo`.
std::vector<double> log_spaced_gammas(double hi, double lo, std::size_t count);

/// Default sweep: from max(1, sigma_max^2) rounded up to a power of ten down to 1e-12,
/// at the density of 40 points over [1e-12, 1]. The upper end covers the range where
/// the filter factors sigma^2/(sigma^2 + gamma) are still active.
std::vector<double> default_gammas(double sigma_max);

/// Runs the sweep and picks the gamma of maximal discrete curvature, ties to the larger gamma.
/// A curve that is straight to within 1e-12 yields the median gamma with `degenerate` set.
/// Requires at least 5 strictly decreasing positive gammas.
LCurveSelection lcurve_select(const CollocationSystem& sys, const std::vector<double>& gammas);
LCurveSelection lcurve_select(const TikhonovSolver& solver, const std::vector<double>& gammas);

/// Menger curvature of three planar points, positive for a counter-clockwise turn.
double three_point_curvature(double x0, double y0, double x1, double y1, double x2, double y2);

/// Columns gamma, residual_norm, solution_norm, curvature, selected_flag.
void write_sweep_csv(std::ostream& os, const LCurveSelection& sel);

}  // namespace spc
