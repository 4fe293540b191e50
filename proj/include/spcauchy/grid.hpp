#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spcauchy/geometry.hpp"

namespace spc {

/// Uniform space-time discretization of a box: m intervals per axis, n time steps.
struct GridSpec {
    std::size_t m = 0;
    std::size_t n = 0;
    Box box;
    double T = 1.0;
    Point h{0.0, 0.0};
    double tau = 0.0;
    /// Explicit-scheme stability: tau <= h^2/2 in 1D, tau <= 1/(2 * sum_a 1/h_a^2) in 2D.
    bool cfl_ok = false;

    [[nodiscard]] std::size_t dim() const { return box.dim; }
    [[nodiscard]] std::size_t nodes_per_axis() const { return m + 1; }
    [[nodiscard]] double time(std::size_t k) const { return static_cast<double>(k) * tau; }
};

/// Throws std::invalid_argument when m < 2, n < 1, T <= 0 or the box is degenerate.
GridSpec make_grid(std::size_t m, std::size_t n, const Box& box, double T = 1.0);

/// Refines space by `factor` and time by `factor^2`, which keeps tau/h^2 fixed.
GridSpec refine(const GridSpec& grid, std::size_t factor);

/// Spatial nodes of a grid on a domain together with quadrature weights.
///
/// Box layouts are lexicographic with the first axis fastest: j = i0 + (m+1) * i1.
/// Disc layouts are polar: node 0 is the center, then rings r = 1..m at radius r/m * R
/// with `n_theta` nodes each, j = 1 + (r-1) * n_theta + a, angle a * 2pi / n_theta.
struct NodeSet {
    Shape shape = Shape::box;
    std::size_t dim = 1;
    std::size_t m = 0;
    std::size_t n_theta = 0;
    std::vector<Point> points;
    std::vector<double> weights;
    std::vector<std::uint8_t> on_boundary;

    [[nodiscard]] std::size_t size() const { return points.size(); }
    [[nodiscard]] std::size_t box_index(std::size_t i0, std::size_t i1 = 0) const { return i0 + (m + 1) * i1; }
    [[nodiscard]] std::size_t polar_index(std::size_t ring, std::size_t a) const {
        return ring == 0 ? 0 : 1 + (ring - 1) * n_theta + (a % n_theta);
    }
};

NodeSet make_nodes(const GridSpec& grid, const Domain& domain);

/// Composite trapezoid weights for possibly non-uniform sorted abscissae.
std::vector<double> trapezoid_weights(const std::vector<double>& x);

}  // namespace spc
