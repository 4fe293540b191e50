#pragma once

#include <functional>

#include "spcauchy/geometry.hpp"

namespace spc {

using InitialData = std::function<double(const Point&)>;
using BoundaryData = std::function<double(double t, const Point&)>;

/// Initial-boundary value problem
///   dy = Laplace(y) dt + a3 y dW(t)  in (0,T) x G,
///   y(0,x) = f(x),  y = g1(t,x) on (0,T) x boundary(G).
struct ProblemSpec {
    Domain domain;
    double T = 1.0;
    InitialData initial;
    BoundaryData dirichlet;
    double a3 = 1.0;
    bool deterministic = false;

    [[nodiscard]] double noise_coefficient() const { return deterministic ? 0.0 : a3; }
};

}  // namespace spc
