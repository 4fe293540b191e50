#include "spcauchy/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace spc {

double heat_kernel(const Point& x, double t, const Point& xi, double tau, std::size_t dim) {
    const double s = t - tau;
    if (!(s > 0.0)) throw std::domain_error("heat_kernel: evaluation time must exceed the source time");
    const double r2 = squared_distance(x, xi, dim);
    const double norm = dim == 1 ? 1.0 / std::sqrt(4.0 * std::numbers::pi * s) : 1.0 / (4.0 * std::numbers::pi * s);
    return norm * std::exp(-r2 / (4.0 * s));
}

void SourceConfig::validate(std::size_t dim) const {
    if (!(DT < 0.0)) throw std::invalid_argument("sources: DT must be negative");
    if (N < 1) throw std::invalid_argument("sources: N must be at least 1");
    if (!(R >= 0.0)) throw std::invalid_argument("sources: R must be non-negative");
    if (dim == 2 && N > 1) {
        const auto k = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(N))));
        if (k * k != N) throw std::invalid_argument("sources: 2D uniform grid needs N to be a perfect square");
    }
}

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = 0.5 * (lo + hi);
        return v;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) v[i] = lo + static_cast<double>(i) * step;
    v.back() = hi;
    return v;
}

}  // namespace

std::vector<SourcePoint> place_sources(const SourceConfig& config, const Box& domain, std::size_t dim) {
    config.validate(dim);
    const Box ext = domain.expanded(config.R);
    std::vector<SourcePoint> out;
    out.reserve(config.N);
    if (config.N == 1) {
        out.push_back({domain.center(), config.DT});
        return out;
    }
    if (dim == 1) {
        for (double x : linspace(ext.lower[0], ext.upper[0], config.N)) out.push_back({{x, 0.0}, config.DT});
        return out;
    }
    const auto k = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(config.N))));
    const auto x0 = linspace(ext.lower[0], ext.upper[0], k);
    const auto x1 = linspace(ext.lower[1], ext.upper[1], k);
    for (double b : x1) {
        for (double a : x0) out.push_back({{a, b}, config.DT});
    }
    return out;
}

double KernelExpansion::max_source_time() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& s : sources) m = std::max(m, s.tau);
    return m;
}

std::vector<double> evaluate_expansion(const KernelExpansion& expansion, std::span<const SpaceTimePoint> points) {
    if (expansion.coefficients.size() != expansion.sources.size()) {
        throw std::invalid_argument("evaluate_expansion: coefficient/source count mismatch");
    }
    const double tmax = expansion.max_source_time();
    std::vector<double> out(points.size(), 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].t > tmax)) throw std::domain_error("evaluate_expansion: point at or below a source time");
        double acc = 0.0;
        for (std::size_t l = 0; l < expansion.sources.size(); ++l) {
            const auto& s = expansion.sources[l];
            acc += expansion.coefficients[l] * heat_kernel(points[i].x, points[i].t, s.xi, s.tau, expansion.dim);
        }
        out[i] = acc;
    }
    return out;
}

namespace {

// Distinct values of one coordinate and, per item, the index of its value.
struct AxisTable {
    std::vector<double> values;
    std::vector<std::size_t> index;
};

template <class Coord>
AxisTable axis_table(std::size_t count, Coord coord) {
    AxisTable t;
    t.index.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double c = coord(i);
        auto it = std::find(t.values.begin(), t.values.end(), c);
        if (it == t.values.end()) {
            t.index[i] = t.values.size();
            t.values.push_back(c);
        } else {
            t.index[i] = static_cast<std::size_t>(it - t.values.begin());
        }
    }
    return t;
}

}  // namespace

std::vector<double> evaluate_on_nodes(const KernelExpansion& expansion, const NodeSet& nodes,
                                      std::span<const double> times) {
    const std::size_t ns = expansion.sources.size();
    if (expansion.coefficients.size() != ns) {
        throw std::invalid_argument("evaluate_on_nodes: coefficient/source count mismatch");
    }
    const double tmax = expansion.max_source_time();
    for (double t : times) {
        if (!(t > tmax)) throw std::domain_error("evaluate_on_nodes: time at or below a source time");
    }
    const std::size_t nn = nodes.size();
    const std::size_t dim = expansion.dim;
    std::vector<double> out(times.size() * nn, 0.0);

    const bool single_layer = std::all_of(expansion.sources.begin(), expansion.sources.end(),
                                          [&](const SourcePoint& s) { return s.tau == tmax; });
    if (!single_layer) {
        std::vector<SpaceTimePoint> pts;
        pts.reserve(out.size());
        for (double t : times) {
            for (const auto& x : nodes.points) pts.push_back({x, t});
        }
        return evaluate_expansion(expansion, pts);
    }

    // All sources share one time, so the kernel factorizes over axes and only
    // exp(-(x_a - xi_a)^2 / 4s) for distinct coordinate pairs is needed per time level.
    std::array<AxisTable, 2> node_axis, src_axis;
    for (std::size_t a = 0; a < dim; ++a) {
        node_axis[a] = axis_table(nn, [&](std::size_t j) { return nodes.points[j][a]; });
        src_axis[a] = axis_table(ns, [&](std::size_t l) { return expansion.sources[l].xi[a]; });
    }
    std::array<std::vector<double>, 2> table;
    std::vector<double> lambda_row(ns);
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double s = times[k] - tmax;
        const double inv4s = 1.0 / (4.0 * s);
        const double norm = dim == 1 ? 1.0 / std::sqrt(4.0 * std::numbers::pi * s) : 1.0 / (4.0 * std::numbers::pi * s);
        for (std::size_t a = 0; a < dim; ++a) {
            const auto& nv = node_axis[a].values;
            const auto& sv = src_axis[a].values;
            table[a].resize(nv.size() * sv.size());
            for (std::size_t u = 0; u < nv.size(); ++u) {
                for (std::size_t v = 0; v < sv.size(); ++v) {
                    const double d = nv[u] - sv[v];
                    table[a][u * sv.size() + v] = std::exp(-d * d * inv4s);
                }
            }
        }
        double* row = out.data() + k * nn;
        const std::size_t s0 = src_axis[0].values.size();
        const std::size_t s1 = dim == 2 ? src_axis[1].values.size() : 0;
        for (std::size_t j = 0; j < nn; ++j) {
            const double* e0 = table[0].data() + node_axis[0].index[j] * s0;
            double acc = 0.0;
            if (dim == 1) {
                for (std::size_t l = 0; l < ns; ++l) acc += expansion.coefficients[l] * e0[src_axis[0].index[l]];
            } else {
                const double* e1 = table[1].data() + node_axis[1].index[j] * s1;
                for (std::size_t l = 0; l < ns; ++l) {
                    acc += expansion.coefficients[l] * e0[src_axis[0].index[l]] * e1[src_axis[1].index[l]];
                }
            }
            row[j] = norm * acc;
        }
    }
    return out;
}

std::string to_string(SourceLayout) { return "uniform-grid"; }

SourceLayout source_layout_from_string(const std::string& s) {
    if (s == "uniform-grid") return SourceLayout::uniform_grid;
    throw std::invalid_argument("unknown source layout '" + s + "'");
}

}  // namespace spc
