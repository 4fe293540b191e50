#include "spcauchy/examples.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spc {

const std::vector<std::string>& builtin_ids() {
    static const std::vector<std::string> ids{"ex1a", "ex1b", "ex2a", "ex2b", "ex3"};
    return ids;
}

bool is_builtin(const std::string& id) {
    for (const auto& s : builtin_ids()) {
        if (s == id) return true;
    }
    return false;
}

namespace {

constexpr double pi = std::numbers::pi;

FunctionSpec constant(double v) {
    FunctionSpec f;
    f.kind = "constant";
    f.value = v;
    return f;
}

BuiltinExample one_dimensional(std::string id, FunctionSpec f) {
    BuiltinExample ex;
    ex.id = std::move(id);
    ex.problem_config.shape = Shape::box;
    ex.problem_config.box = Box{1, {0.0, 0.0}, {1.0, 0.0}};
    ex.problem_config.initial = std::move(f);
    ex.problem_config.dirichlet = constant(0.0);
    ex.m = 15;
    ex.n = 450;
    ex.sources = SourceConfig{3.5, -0.1, 60};
    ex.delta = 0.01;
    ex.boundary = "x=1";
    return ex;
}

BuiltinExample square(std::string id, FunctionSpec f, double g) {
    BuiltinExample ex;
    ex.id = std::move(id);
    ex.problem_config.shape = Shape::box;
    ex.problem_config.box = Box{2, {-1.0, -1.0}, {1.0, 1.0}};
    ex.problem_config.initial = std::move(f);
    ex.problem_config.dirichlet = constant(g);
    ex.m = 12;
    ex.n = 144;
    ex.sources = SourceConfig{3.5, -0.1, 256};
    ex.delta = 0.03;
    ex.boundary = "gamma2";
    return ex;
}

BuiltinExample make(const std::string& id) {
    if (id == "ex1a") {
        FunctionSpec f;
        f.kind = "bubble";
        f.amplitude = 1.0;
        f.lower = {0.0, 0.0};
        f.upper = {1.0, 0.0};
        return one_dimensional(id, f);
    }
    if (id == "ex1b") {
        FunctionSpec f;
        f.kind = "hat";
        f.height = 1.0;
        f.peak = 0.25;
        f.lower = {0.0, 0.0};
        f.upper = {1.0, 0.0};
        return one_dimensional(id, f);
    }
    if (id == "ex2a") {
        FunctionSpec f;
        f.kind = "sine-product";
        f.amplitude = 1.0;
        f.frequency = 1.0;
        f.offset = 2.0;
        return square(id, f, 2.0);
    }
    if (id == "ex2b") {
        FunctionSpec f;
        f.kind = "indicator-discs";
        f.inside = 3.0;
        f.outside = 1.0;
        f.radius = 0.15;
        f.centers = {{0.5, 0.5}, {0.5, -0.5}, {-0.5, 0.5}, {-0.5, -0.5}};
        return square(id, f, 1.0);
    }
    if (id == "ex3") {
        BuiltinExample ex;
        ex.id = id;
        ex.problem_config.shape = Shape::disc;
        ex.problem_config.center = {0.0, 0.0};
        ex.problem_config.radius = 1.0;
        ex.problem_config.n_theta = 48;
        ex.problem_config.box = Box{2, {-1.0, -1.0}, {1.0, 1.0}};
        FunctionSpec f;
        f.kind = "indicator-box";
        f.inside = 3.0;
        f.outside = 1.0;
        f.lower = {0.2, 0.2};
        f.upper = {0.6, 0.6};
        ex.problem_config.initial = f;
        ex.problem_config.dirichlet = constant(1.0);
        ex.m = 8;
        ex.n = 100;
        ex.sources = SourceConfig{3.5, -0.1, 256};
        ex.delta = 0.03;
        ex.boundary = "theta=pi/3";
        return ex;
    }
    throw std::invalid_argument("unknown example '" + id + "'");
}

}  // namespace

BuiltinExample builtin_example(const std::string& id) {
    BuiltinExample ex = make(id);
    ex.problem_config.T = 1.0;
    ex.problem_config.a3 = 1.0;
    ex.problem = ex.problem_config.build();
    return ex;
}

GammaSpec parse_boundary(const std::string& name, const Domain& domain) {
    if (domain.shape == Shape::disc) {
        const std::string key = "theta=";
        if (name.rfind(key, 0) != 0) throw std::invalid_argument("boundary: disc domains need 'theta=<radians>'");
        const std::string v = name.substr(key.size());
        double theta = 0.0;
        if (v == "pi/6") theta = pi / 6.0;
        else if (v == "pi/4") theta = pi / 4.0;
        else if (v == "pi/3") theta = pi / 3.0;
        else if (v == "pi/2") theta = pi / 2.0;
        else if (v == "pi") theta = pi;
        else theta = std::stod(v);
        return GammaSpec::arc_from_zero(theta);
    }
    if (domain.dim() == 1) {
        if (name == "x=1" || name == "upper") return GammaSpec::edge(0, true);
        if (name == "x=0" || name == "lower") return GammaSpec::edge(0, false);
        throw std::invalid_argument("boundary: 1D domains accept 'upper' ('x=1') or 'lower' ('x=0')");
    }
    if (name == "gamma1") return GammaSpec::edge(0, true);
    if (name == "gamma2") return GammaSpec::edge(1, true);
    if (name == "gamma3") {
        GammaSpec g;
        g.edges = {EdgeSegment{0, true}, EdgeSegment{1, false}, EdgeSegment{1, true}};
        return g;
    }
    throw std::invalid_argument("boundary: rectangles accept gamma1, gamma2 or gamma3");
}

}  // namespace spc
