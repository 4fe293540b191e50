#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spcauchy/geometry.hpp"
#include "spcauchy/grid.hpp"

namespace spc {

/// Fundamental solution of u_t = Laplace(u) in d dimensions:
///   (4 pi (t - tau))^{-d/2} exp(-|x - xi|^2 / (4 (t - tau))).
/// Throws std::domain_error unless t > tau.
double heat_kernel(const Point& x, double t, const Point& xi, double tau, std::size_t dim);

enum class SourceLayout { uniform_grid };

/// Source points on one time layer t = DT below the problem's time interval. Spatially
/// they fill the domain's bounding box expanded by R on every side, which for [0,1]
/// is the interval [-R, R+1].
struct SourceConfig {
    double R = 3.5;
    double DT = -0.1;
    std::size_t N = 60;
    SourceLayout layout = SourceLayout::uniform_grid;

    void validate(std::size_t dim) const;
};

struct SourcePoint {
    Point xi{0.0, 0.0};
    double tau = 0.0;

    bool operator==(const SourcePoint&) const = default;
};

/// N points on a uniform grid (k x k with k^2 = N in 2D) over the expanded box; a
/// single point sits at the box center.
std::vector<SourcePoint> place_sources(const SourceConfig& config, const Box& domain, std::size_t dim);

struct SpaceTimePoint {
    Point x{0.0, 0.0};
    double t = 0.0;
};

/// y(x,t) = sum_l coefficients[l] * heat_kernel(x, t, xi_l, tau_l).
struct KernelExpansion {
    std::size_t dim = 1;
    std::vector<SourcePoint> sources;
    std::vector<double> coefficients;

    [[nodiscard]] double max_source_time() const;
};

/// Throws std::domain_error if any point is not strictly later than every source.
std::vector<double> evaluate_expansion(const KernelExpansion& expansion, std::span<const SpaceTimePoint> points);

/// Evaluates on every (time, node) pair, row-major by time. Uses the product structure
/// of the Gaussian so only per-axis exponentials are computed.
std::vector<double> evaluate_on_nodes(const KernelExpansion& expansion, const NodeSet& nodes,
                                      std::span<const double> times);

std::string to_string(SourceLayout layout);
SourceLayout source_layout_from_string(const std::string& s);

}  // namespace spc
