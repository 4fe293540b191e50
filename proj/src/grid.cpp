#include "spcauchy/grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace spc {

GridSpec make_grid(std::size_t m, std::size_t n, const Box& box, double T) {
    if (m < 2) throw std::invalid_argument("grid: m must be at least 2");
    if (n < 1) throw std::invalid_argument("grid: n must be at least 1");
    if (!(T > 0.0)) throw std::invalid_argument("grid: final time T must be positive");
    if (box.degenerate()) throw std::invalid_argument("grid: degenerate box");

    GridSpec g;
    g.m = m;
    g.n = n;
    g.box = box;
    g.T = T;
    double inv_h2 = 0.0;
    for (std::size_t a = 0; a < box.dim; ++a) {
        g.h[a] = box.width(a) / static_cast<double>(m);
        inv_h2 += 1.0 / (g.h[a] * g.h[a]);
    }
    g.tau = T / static_cast<double>(n);
    // Compared as tau * 2 * sum(1/h^2) <= 1 with a relative slack of a few ulps so
    // that equality cases such as m = 15, n = 450 (tau = h^2/2) survive rounding.
    g.cfl_ok = g.tau * 2.0 * inv_h2 <= 1.0 + 8.0 * std::numeric_limits<double>::epsilon();
    return g;
}

GridSpec refine(const GridSpec& grid, std::size_t factor) {
    if (factor < 1) throw std::invalid_argument("refine: factor must be positive");
    return make_grid(grid.m * factor, grid.n * factor * factor, grid.box, grid.T);
}

NodeSet make_nodes(const GridSpec& grid, const Domain& domain) {
    NodeSet ns;
    ns.shape = domain.shape;
    ns.dim = domain.dim();
    ns.m = grid.m;

    if (domain.shape == Shape::box) {
        const std::size_t p = grid.m + 1;
        std::vector<double> x0(p), x1(p);
        for (std::size_t i = 0; i < p; ++i) {
            x0[i] = grid.box.lower[0] + static_cast<double>(i) * grid.h[0];
            if (ns.dim == 2) x1[i] = grid.box.lower[1] + static_cast<double>(i) * grid.h[1];
        }
        x0.back() = grid.box.upper[0];
        if (ns.dim == 2) x1.back() = grid.box.upper[1];
        const auto w0 = trapezoid_weights(x0);
        if (ns.dim == 1) {
            for (std::size_t i = 0; i < p; ++i) {
                ns.points.push_back({x0[i], 0.0});
                ns.weights.push_back(w0[i]);
                ns.on_boundary.push_back(i == 0 || i == grid.m);
            }
        } else {
            const auto w1 = trapezoid_weights(x1);
            for (std::size_t i1 = 0; i1 < p; ++i1) {
                for (std::size_t i0 = 0; i0 < p; ++i0) {
                    ns.points.push_back({x0[i0], x1[i1]});
                    ns.weights.push_back(w0[i0] * w1[i1]);
                    ns.on_boundary.push_back(i0 == 0 || i0 == grid.m || i1 == 0 || i1 == grid.m);
                }
            }
        }
        return ns;
    }

    // Polar layout; the weights integrate r dr dtheta with the trapezoid rule in r.
    ns.n_theta = domain.n_theta;
    const double dr = domain.radius / static_cast<double>(grid.m);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(domain.n_theta);
    ns.points.push_back(domain.center);
    ns.weights.push_back(std::numbers::pi * 0.25 * dr * dr);
    ns.on_boundary.push_back(0);
    for (std::size_t r = 1; r <= grid.m; ++r) {
        const double rad = static_cast<double>(r) * dr;
        const double wr = (r == grid.m ? 0.5 : 1.0) * dr * rad;
        for (std::size_t a = 0; a < domain.n_theta; ++a) {
            const double th = static_cast<double>(a) * dtheta;
            ns.points.push_back({domain.center[0] + rad * std::cos(th), domain.center[1] + rad * std::sin(th)});
            ns.weights.push_back(wr * dtheta);
            ns.on_boundary.push_back(r == grid.m);
        }
    }
    return ns;
}

std::vector<double> trapezoid_weights(const std::vector<double>& x) {
    std::vector<double> w(x.size(), 0.0);
    if (x.size() < 2) {
        if (!w.empty()) w[0] = 1.0;
        return w;
    }
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double half = 0.5 * (x[i + 1] - x[i]);
        w[i] += half;
        w[i + 1] += half;
    }
    return w;
}

}  // namespace spc
