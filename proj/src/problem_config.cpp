#include "spcauchy/problem_config.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spc {

InitialData FunctionSpec::build(std::size_t dim) const {
    const FunctionSpec s = *this;
    if (kind == "constant") {
        return [v = s.value](const Point&) { return v; };
    }
    if (kind == "sine-product") {
        return [s, dim](const Point& x) {
            double p = s.amplitude;
            for (std::size_t a = 0; a < dim; ++a) p *= std::sin(s.frequency * std::numbers::pi * x[a]);
            return s.offset + p;
        };
    }
    if (kind == "bubble") {
        return [s, dim](const Point& x) {
            double p = s.amplitude;
            for (std::size_t a = 0; a < dim; ++a) p *= (x[a] - s.lower[a]) * (s.upper[a] - x[a]);
            return p;
        };
    }
    if (kind == "hat") {
        if (!(s.lower[0] < s.peak && s.peak < s.upper[0])) throw std::invalid_argument("hat: need lower < peak < upper");
        return [s](const Point& x) {
            const double t = x[0];
            if (t < s.lower[0] || t > s.upper[0]) return 0.0;
            if (t < s.peak) return s.height * (t - s.lower[0]) / (s.peak - s.lower[0]);
            return s.height * (s.upper[0] - t) / (s.upper[0] - s.peak);
        };
    }
    if (kind == "indicator-box") {
        return [s, dim](const Point& x) {
            for (std::size_t a = 0; a < dim; ++a) {
                if (x[a] < s.lower[a] || x[a] > s.upper[a]) return s.outside;
            }
            return s.inside;
        };
    }
    if (kind == "indicator-discs") {
        return [s, dim](const Point& x) {
            for (const auto& c : s.centers) {
                if (squared_distance(x, c, dim) <= s.radius * s.radius) return s.inside;
            }
            return s.outside;
        };
    }
    throw std::invalid_argument("unknown function kind '" + kind + "'");
}

ProblemSpec ProblemConfig::build() const {
    ProblemSpec p;
    p.domain = shape == Shape::box ? (box.dim == 1 ? Domain::interval(box.lower[0], box.upper[0])
                                                   : Domain::rectangle(box.lower, box.upper))
                                   : Domain::disc(center, radius, n_theta);
    p.T = T;
    p.initial = initial.build(p.domain.dim());
    auto g = dirichlet.build(p.domain.dim());
    p.dirichlet = [g](double, const Point& x) { return g(x); };
    p.a3 = a3;
    p.deterministic = deterministic;
    return p;
}

}  // namespace spc
