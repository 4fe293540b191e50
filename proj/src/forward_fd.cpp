#include "spcauchy/forward_fd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace spc {

FieldSnapshotSeries solve_forward(const ProblemSpec& spec, const GridSpec& grid, const BrownianPath& path) {
    if (spec.domain.shape != Shape::box) {
        throw std::invalid_argument("solve_forward: finite differences need a box domain");
    }
    if (spec.domain.dim() != grid.dim()) throw std::invalid_argument("solve_forward: grid/domain dimension mismatch");
    if (!grid.cfl_ok) {
        throw std::invalid_argument("solve_forward: tau = " + std::to_string(grid.tau) +
                                    " violates the explicit stability bound");
    }
    if (path.steps() != grid.n) throw std::invalid_argument("solve_forward: path length differs from n");
    if (std::abs(path.tau - grid.tau) > 1e-12 * grid.tau) {
        throw std::invalid_argument("solve_forward: path time step differs from grid tau");
    }
    if (!spec.initial || !spec.dirichlet) throw std::invalid_argument("solve_forward: missing initial or boundary data");

    FieldSnapshotSeries field;
    field.grid = grid;
    field.nodes = make_nodes(grid, spec.domain);
    const std::size_t nn = field.node_count();
    field.times.resize(grid.n + 1);
    for (std::size_t k = 0; k <= grid.n; ++k) field.times[k] = grid.time(k);
    field.values.assign((grid.n + 1) * nn, 0.0);

    for (std::size_t j = 0; j < nn; ++j) field.at(0, j) = spec.initial(field.nodes.points[j]);

    std::vector<std::size_t> boundary;
    for (std::size_t j = 0; j < nn; ++j) {
        if (field.nodes.on_boundary[j]) boundary.push_back(j);
    }

    const double a3 = spec.noise_coefficient();
    const std::size_t p = grid.m + 1;
    const double r0 = grid.tau / (grid.h[0] * grid.h[0]);
    const double r1 = grid.dim() == 2 ? grid.tau / (grid.h[1] * grid.h[1]) : 0.0;

    for (std::size_t k = 0; k < grid.n; ++k) {
        const std::span<const double> y = field.row(k);
        double* next = field.values.data() + (k + 1) * nn;
        const double noise = a3 * path.increments[k];
        if (grid.dim() == 1) {
            for (std::size_t j = 1; j + 1 < p; ++j) {
                next[j] = y[j] + r0 * (y[j - 1] - 2.0 * y[j] + y[j + 1]) + noise * y[j];
            }
        } else {
            for (std::size_t i1 = 1; i1 + 1 < p; ++i1) {
                for (std::size_t i0 = 1; i0 + 1 < p; ++i0) {
                    const std::size_t j = i0 + p * i1;
                    next[j] = y[j] + r0 * (y[j - 1] - 2.0 * y[j] + y[j + 1]) +
                              r1 * (y[j - p] - 2.0 * y[j] + y[j + p]) + noise * y[j];
                }
            }
        }
        const double t = field.times[k + 1];
        for (std::size_t j : boundary) next[j] = spec.dirichlet(t, field.nodes.points[j]);
    }
    return field;
}

namespace {

// Index of the grid node at coordinate c along an axis, or nullopt when c is off-grid.
std::optional<std::size_t> node_on_axis(double c, double lo, double h, std::size_t m) {
    const double s = (c - lo) / h;
    const double r = std::round(s);
    if (std::abs(s - r) > 1e-9 || r < 0.0 || r > static_cast<double>(m)) return std::nullopt;
    return static_cast<std::size_t>(r);
}

struct Selection {
    std::set<std::size_t> boundary;
    std::set<std::size_t> inward;
};

void select_box(const FieldSnapshotSeries& field, const EdgeSegment& e, Selection& sel) {
    const GridSpec& g = field.grid;
    const std::size_t dim = g.dim();
    if (e.axis >= dim) throw std::invalid_argument("extract_cauchy: edge axis out of range");
    const std::size_t fixed = e.upper ? g.m : 0;
    const std::size_t inner = e.upper ? g.m - 1 : 1;
    if (dim == 1) {
        sel.boundary.insert(fixed);
        sel.inward.insert(inner);
        return;
    }
    const std::size_t other = 1 - e.axis;
    std::size_t first = 0;
    std::size_t last = g.m;
    if (std::isfinite(e.from)) {
        auto i = node_on_axis(e.from, g.box.lower[other], g.h[other], g.m);
        if (!i) throw std::invalid_argument("extract_cauchy: edge segment start is not on a grid node");
        first = *i;
    }
    if (std::isfinite(e.to)) {
        auto i = node_on_axis(e.to, g.box.lower[other], g.h[other], g.m);
        if (!i) throw std::invalid_argument("extract_cauchy: edge segment end is not on a grid node");
        last = *i;
    }
    if (first > last) throw std::invalid_argument("extract_cauchy: empty edge segment");
    for (std::size_t s = first; s <= last; ++s) {
        const auto idx = [&](std::size_t along_axis, std::size_t along_other) {
            return e.axis == 0 ? field.nodes.box_index(along_axis, along_other)
                               : field.nodes.box_index(along_other, along_axis);
        };
        sel.boundary.insert(idx(fixed, s));
        sel.inward.insert(idx(inner, s));
    }
}

void select_arc(const FieldSnapshotSeries& field, const ArcSegment& arc, Selection& sel) {
    const NodeSet& ns = field.nodes;
    if (ns.m < 2) throw std::invalid_argument("extract_cauchy: polar grid needs at least two rings");
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(ns.n_theta);
    const auto aligned = [&](double th) -> long {
        const double s = th / dtheta;
        const double r = std::round(s);
        if (std::abs(s - r) > 1e-9) throw std::invalid_argument("extract_cauchy: arc end is not on an angular node");
        return static_cast<long>(r);
    };
    const long a0 = aligned(arc.theta_from);
    const long a1 = aligned(arc.theta_to);
    if (a1 < a0) throw std::invalid_argument("extract_cauchy: arc end precedes its start");
    const long count = std::min<long>(a1 - a0 + 1, static_cast<long>(ns.n_theta));
    const long nt = static_cast<long>(ns.n_theta);
    for (long i = 0; i < count; ++i) {
        const auto a = static_cast<std::size_t>(((a0 + i) % nt + nt) % nt);
        sel.boundary.insert(ns.polar_index(ns.m, a));
        sel.inward.insert(ns.polar_index(ns.m - 1, a));
    }
}

}  // namespace

CauchyData extract_cauchy(const FieldSnapshotSeries& field, const GammaSpec& gamma) {
    Selection sel;
    if (field.nodes.shape == Shape::box) {
        if (gamma.arc) throw std::invalid_argument("extract_cauchy: arc descriptor on a box grid");
        if (gamma.edges.empty()) throw std::invalid_argument("extract_cauchy: empty sub-boundary");
        for (const auto& e : gamma.edges) select_box(field, e, sel);
    } else {
        if (!gamma.arc || !gamma.edges.empty()) {
            throw std::invalid_argument("extract_cauchy: disc grids need exactly one arc descriptor");
        }
        select_arc(field, *gamma.arc, sel);
    }
    for (std::size_t j : sel.boundary) sel.inward.erase(j);

    CauchyData data;
    data.dim = field.nodes.dim;
    data.rows.reserve(field.time_count() * (sel.boundary.size() + sel.inward.size()));
    for (std::size_t k = 0; k < field.time_count(); ++k) {
        for (std::size_t j : sel.boundary) {
            data.rows.push_back({field.nodes.points[j], field.times[k], field.at(k, j), k, j, ObservationRole::boundary});
        }
        for (std::size_t j : sel.inward) {
            data.rows.push_back({field.nodes.points[j], field.times[k], field.at(k, j), k, j, ObservationRole::inward});
        }
    }
    return data;
}

}  // namespace spc
