#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "spcauchy/brownian.hpp"
#include "spcauchy/cauchy_data.hpp"
#include "spcauchy/field.hpp"
#include "spcauchy/problem.hpp"

namespace spc {

/// Explicit Euler-Maruyama finite differences on a box:
///   y_{k+1} = y_k + tau * Lap_h(y_k) + a3 * dW_k * y_k,
/// with the 3-point (1D) or 5-point (2D) Laplacian. Row 0 is f at every node;
/// boundary nodes of rows k >= 1 are set to g1(t_k, x).
///
/// Throws std::invalid_argument if the grid fails the CFL bound, the domain is not a box,
/// or the path does not match the grid.
FieldSnapshotSeries solve_forward(const ProblemSpec& spec, const GridSpec& grid, const BrownianPath& path);

/// Straight edge piece of a box boundary: the face where coordinate `axis` is at its
/// lower or upper bound, restricted to [from, to] along the other axis (2D only).
struct EdgeSegment {
    std::size_t axis = 0;
    bool upper = true;
    double from = -std::numeric_limits<double>::infinity();
    double to = std::numeric_limits<double>::infinity();
};

/// Arc of a disc boundary, angles in radians measured from the positive first axis.
struct ArcSegment {
    double theta_from = 0.0;
    double theta_to = 0.0;
};

/// Accessible part Gamma of the boundary.
struct GammaSpec {
    std::vector<EdgeSegment> edges;
    std::optional<ArcSegment> arc;

    static GammaSpec edge(std::size_t axis, bool upper) { return GammaSpec{{EdgeSegment{axis, upper}}, std::nullopt}; }
    static GammaSpec arc_from_zero(double theta) { return GammaSpec{{}, ArcSegment{0.0, theta}}; }
};

/// Reads (boundary value, one-line-inward value) on Gamma at every time level.
/// Rows are ordered by time level; within a level the Gamma nodes come first, then the
/// inward nodes, each by ascending node index. Nodes shared by several edges or inward
/// lines appear once, and a node on Gamma is always tagged `boundary`.
///
/// Throws std::invalid_argument when Gamma does not line up with grid nodes.
CauchyData extract_cauchy(const FieldSnapshotSeries& field, const GammaSpec& gamma);

}  // namespace spc
