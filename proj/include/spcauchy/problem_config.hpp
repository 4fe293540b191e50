#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spcauchy/problem.hpp"

namespace spc {

/// Serializable description of an initial or boundary function of x.
///
///   constant          value
///   sine-product      offset + amplitude * prod_a sin(frequency * pi * x_a)
///   bubble            amplitude * prod_a (x_a - lower_a)(upper_a - x_a)
///   hat               piecewise linear: 0 at lower, height at peak, 0 at upper (first axis)
///   indicator-box     inside on [lower, upper] (closed box), else outside
///   indicator-discs   inside within `radius` of any center (closed), else outside
struct FunctionSpec {
    std::string kind = "constant";
    double value = 0.0;
    double amplitude = 1.0;
    double offset = 0.0;
    double frequency = 1.0;
    double height = 1.0;
    double peak = 0.5;
    double inside = 1.0;
    double outside = 0.0;
    double radius = 0.0;
    Point lower{0.0, 0.0};
    Point upper{1.0, 1.0};
    std::vector<Point> centers;

    [[nodiscard]] InitialData build(std::size_t dim) const;
};

struct ProblemConfig {
    Shape shape = Shape::box;
    Box box;
    Point center{0.0, 0.0};
    double radius = 1.0;
    std::size_t n_theta = 48;
    double T = 1.0;
    FunctionSpec initial;
    FunctionSpec dirichlet;
    double a3 = 1.0;
    bool deterministic = false;

    [[nodiscard]] ProblemSpec build() const;
};

}  // namespace spc
