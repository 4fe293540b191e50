#include "spcauchy/tikhonov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace spc {

TikhonovSolver::TikhonovSolver(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    if (A.rows() != b.size()) throw std::invalid_argument("tikhonov: A and b disagree on the row count");
    if (A.rows() == 0 || A.cols() == 0) throw std::invalid_argument("tikhonov: empty system");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) throw std::runtime_error("tikhonov: SVD did not converge");
    sigma_ = svd.singularValues();
    V_ = svd.matrixV();
    beta_ = svd.matrixU().transpose() * b;
    perp_ = (b - svd.matrixU() * beta_).norm();
}

Eigen::VectorXd TikhonovSolver::solve(double gamma) const {
    if (!(gamma > 0.0)) throw std::invalid_argument("tikhonov: gamma must be positive");
    Eigen::VectorXd c(sigma_.size());
    for (Eigen::Index i = 0; i < sigma_.size(); ++i) {
        const double s = sigma_(i);
        c(i) = s * beta_(i) / (s * s + gamma);
    }
    return V_ * c;
}

double TikhonovSolver::residual_norm(double gamma) const {
    double acc = perp_ * perp_;
    for (Eigen::Index i = 0; i < sigma_.size(); ++i) {
        const double s2 = sigma_(i) * sigma_(i);
        const double r = gamma / (s2 + gamma) * beta_(i);
        acc += r * r;
    }
    return std::sqrt(acc);
}

double TikhonovSolver::solution_norm(double gamma) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < sigma_.size(); ++i) {
        const double s = sigma_(i);
        const double c = s * beta_(i) / (s * s + gamma);
        acc += c * c;
    }
    return std::sqrt(acc);
}

Eigen::VectorXd tikhonov_solve(const CollocationSystem& sys, double gamma) {
    return TikhonovSolver(sys).solve(gamma);
}

std::vector<double> log_spaced_gammas(double hi, double lo, std::size_t count) {
    if (!(hi > 0.0 && lo > 0.0 && hi > lo)) throw std::invalid_argument("gamma grid: need hi > lo > 0");
    if (count < 2) throw std::invalid_argument("gamma grid: need at least two points");
    std::vector<double> g(count);
    const double a = std::log10(hi);
    const double b = std::log10(lo);
    for (std::size_t i = 0; i < count; ++i) {
        g[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return g;
}

std::vector<double> default_gammas(double sigma_max) {
    const double top = std::max(0.0, std::ceil(std::log10(std::max(1.0, sigma_max * sigma_max)) - 1e-12));
    const double decades = top + 12.0;
    const auto count = static_cast<std::size_t>(std::lround(decades * 39.0 / 12.0)) + 1;
    return log_spaced_gammas(std::pow(10.0, top), 1e-12, count);
}

double three_point_curvature(double x0, double y0, double x1, double y1, double x2, double y2) {
    const double ax = x1 - x0, ay = y1 - y0;
    const double bx = x2 - x1, by = y2 - y1;
    const double cx = x2 - x0, cy = y2 - y0;
    const double la = std::hypot(ax, ay), lb = std::hypot(bx, by), lc = std::hypot(cx, cy);
    if (la == 0.0 || lb == 0.0 || lc == 0.0) return 0.0;
    return 2.0 * (ax * by - ay * bx) / (la * lb * lc);
}

namespace {

double safe_log_sq(double v) {
    return std::log(std::max(v * v, std::numeric_limits<double>::min()));
}

}  // namespace

LCurveSelection lcurve_select(const TikhonovSolver& solver, const std::vector<double>& gammas) {
    if (gammas.size() < 5) throw std::invalid_argument("lcurve: need at least 5 gamma values");
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (!(gammas[i] > 0.0)) throw std::invalid_argument("lcurve: gamma values must be positive");
        if (i > 0 && !(gammas[i] < gammas[i - 1])) throw std::invalid_argument("lcurve: gamma grid must be strictly decreasing");
    }

    LCurveSelection sel;
    TikhonovSweep& sw = sel.sweep;
    sw.gammas = gammas;
    const std::size_t n = gammas.size();
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        sw.coefficients.push_back(solver.solve(gammas[i]));
        sw.residual_norms.push_back(solver.residual_norm(gammas[i]));
        sw.solution_norms.push_back(solver.solution_norm(gammas[i]));
        xs[i] = safe_log_sq(sw.solution_norms[i]);
        ys[i] = safe_log_sq(sw.residual_norms[i]);
    }
    constexpr double slack = 1e-12;
    for (std::size_t i = 1; i < n; ++i) {
        if (sw.residual_norms[i] > sw.residual_norms[i - 1] * (1.0 + slack)) sw.monotone = false;
        if (sw.solution_norms[i] < sw.solution_norms[i - 1] * (1.0 - slack)) sw.monotone = false;
    }

    sw.curvature.assign(n, 0.0);
    double max_sine = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        sw.curvature[i] = three_point_curvature(xs[i - 1], ys[i - 1], xs[i], ys[i], xs[i + 1], ys[i + 1]);
        const double ax = xs[i] - xs[i - 1], ay = ys[i] - ys[i - 1];
        const double bx = xs[i + 1] - xs[i], by = ys[i + 1] - ys[i];
        const double la = std::hypot(ax, ay), lb = std::hypot(bx, by);
        if (la > 0.0 && lb > 0.0) max_sine = std::max(max_sine, std::abs(ax * by - ay * bx) / (la * lb));
    }

    if (max_sine <= 1e-12) {
        sel.degenerate = true;
        sel.index = (n - 1) / 2;
    } else {
        std::size_t best = 1;
        for (std::size_t i = 2; i + 1 < n; ++i) {
            if (sw.curvature[i] > sw.curvature[best]) best = i;
        }
        sel.index = best;
    }
    sel.gamma = gammas[sel.index];
    return sel;
}

LCurveSelection lcurve_select(const CollocationSystem& sys, const std::vector<double>& gammas) {
    return lcurve_select(TikhonovSolver(sys), gammas);
}

void write_sweep_csv(std::ostream& os, const LCurveSelection& sel) {
    os << "gamma,residual_norm,solution_norm,curvature,selected_flag\n";
    char buf[160];
    const auto& sw = sel.sweep;
    for (std::size_t i = 0; i < sw.gammas.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%d\n", sw.gammas[i], sw.residual_norms[i],
                      sw.solution_norms[i], sw.curvature[i], i == sel.index ? 1 : 0);
        os << buf;
    }
}

}  // namespace spc
