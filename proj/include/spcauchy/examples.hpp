#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spcauchy/forward_fd.hpp"
#include "spcauchy/kernel.hpp"
#include "spcauchy/problem_config.hpp"

namespace spc {

/// Named test problems and their default discretization.
///
///   ex1a  G = (0,1), f = x(1-x), g1 = 0, Gamma = {x = 1}
///   ex1b  G = (0,1), f = 4x on [0,1/4), (4 - 4x)/3 on [1/4,1], g1 = 0, Gamma = {x = 1}
///   ex2a  G = [-1,1]^2, f = sin(pi x1) sin(pi x2) + 2, g1 = 2
///   ex2b  G = [-1,1]^2, f = 3 inside the radius-0.15 discs at (+-0.5, +-0.5), else 1; g1 = 1
///   ex3   unit disc, f = 3 on [0.2,0.6]^2, else 1; g1 = 1; Gamma = arc theta in [0, Theta]
///
/// All use a3 = 1 and T = 1. For the square, Gamma1 = {x1 = 1}, Gamma2 = {x2 = 1}
/// (one full edge) and Gamma3 = boundary minus {x1 = -1} (three edges).
struct BuiltinExample {
    std::string id;
    ProblemConfig problem_config;
    ProblemSpec problem;
    std::size_t m = 0;
    std::size_t n = 0;
    SourceConfig sources;
    double delta = 0.0;
    std::string boundary;  // "x=1", "gamma1".."gamma3", or "theta=<radians|pi/k>"
};

const std::vector<std::string>& builtin_ids();
bool is_builtin(const std::string& id);
/// Throws std::invalid_argument for unknown ids.
BuiltinExample builtin_example(const std::string& id);

/// Parses a boundary descriptor name for the given domain.
GammaSpec parse_boundary(const std::string& name, const Domain& domain);

}  // namespace spc
