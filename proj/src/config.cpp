#include "spcauchy/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "spcauchy/examples.hpp"
#include "spcauchy/grid.hpp"

namespace spc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) throw std::invalid_argument("config: " + field + " " + what);
}

bool is_count(double v) { return v >= 1.0 && std::floor(v) == v && v < 1e9; }

/// Reads members of one JSON object and rejects keys nobody asked for.
class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw std::invalid_argument("config: " + where() + " must be an object");
    }

    template <class T>
    void get(const char* key, T& out) {
        seen_.insert(key);
        auto it = j_.find(key);
        if (it == j_.end()) return;
        try {
            out = it->template get<T>();
        } catch (const json::exception&) {
            throw std::invalid_argument("config: " + field(key) + " has the wrong type");
        }
    }

    const json* child(const char* key) {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    [[nodiscard]] std::string field(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!seen_.count(it.key())) throw std::invalid_argument("config: unknown key '" + field(it.key().c_str()) + "'");
        }
    }

private:
    [[nodiscard]] std::string where() const { return path_.empty() ? "document" : path_; }

    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

ordered_json point_json(const Point& p, std::size_t dim) {
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i < dim; ++i) a.push_back(p[i]);
    return a;
}

Point point_from(const json& j, const std::string& field) {
    require(j.is_array() && !j.empty() && j.size() <= 2, field, "must be an array of 1 or 2 numbers");
    Point p{0.0, 0.0};
    for (std::size_t i = 0; i < j.size(); ++i) {
        require(j[i].is_number(), field, "must contain numbers");
        p[i] = j[i].get<double>();
    }
    return p;
}

ordered_json function_json(const FunctionSpec& f, std::size_t dim) {
    ordered_json j;
    j["kind"] = f.kind;
    if (f.kind == "constant") {
        j["value"] = f.value;
    } else if (f.kind == "sine-product") {
        j["offset"] = f.offset;
        j["amplitude"] = f.amplitude;
        j["frequency"] = f.frequency;
    } else if (f.kind == "bubble") {
        j["amplitude"] = f.amplitude;
        j["lower"] = point_json(f.lower, dim);
        j["upper"] = point_json(f.upper, dim);
    } else if (f.kind == "hat") {
        j["height"] = f.height;
        j["peak"] = f.peak;
        j["lower"] = point_json(f.lower, 1);
        j["upper"] = point_json(f.upper, 1);
    } else if (f.kind == "indicator-box") {
        j["inside"] = f.inside;
        j["outside"] = f.outside;
        j["lower"] = point_json(f.lower, dim);
        j["upper"] = point_json(f.upper, dim);
    } else if (f.kind == "indicator-discs") {
        j["inside"] = f.inside;
        j["outside"] = f.outside;
        j["radius"] = f.radius;
        ordered_json c = ordered_json::array();
        for (const auto& p : f.centers) c.push_back(point_json(p, dim));
        j["centers"] = c;
    }
    return j;
}

FunctionSpec function_from(const json& j, const std::string& path) {
    FunctionSpec f;
    Reader r(j, path);
    r.get("kind", f.kind);
    r.get("value", f.value);
    r.get("amplitude", f.amplitude);
    r.get("offset", f.offset);
    r.get("frequency", f.frequency);
    r.get("height", f.height);
    r.get("peak", f.peak);
    r.get("inside", f.inside);
    r.get("outside", f.outside);
    r.get("radius", f.radius);
    if (const json* v = r.child("lower")) f.lower = point_from(*v, r.field("lower"));
    if (const json* v = r.child("upper")) f.upper = point_from(*v, r.field("upper"));
    if (const json* v = r.child("centers")) {
        require(v->is_array(), r.field("centers"), "must be an array");
        f.centers.clear();
        for (const auto& c : *v) f.centers.push_back(point_from(c, r.field("centers")));
    }
    r.finish();
    return f;
}

ordered_json sources_json(const SourceConfig& s) {
    ordered_json j;
    j["R"] = s.R;
    j["DT"] = s.DT;
    j["N"] = s.N;
    j["layout"] = to_string(s.layout);
    return j;
}

SourceConfig sources_from(const json& j, const std::string& path) {
    SourceConfig s;
    Reader r(j, path);
    r.get("R", s.R);
    r.get("DT", s.DT);
    r.get("N", s.N);
    std::string layout = to_string(s.layout);
    r.get("layout", layout);
    s.layout = source_layout_from_string(layout);
    r.finish();
    return s;
}

Domain domain_of(const ProblemConfig& p) {
    if (p.shape == Shape::disc) return Domain::disc(p.center, p.radius, p.n_theta);
    return p.box.dim == 1 ? Domain::interval(p.box.lower[0], p.box.upper[0]) : Domain::rectangle(p.box.lower, p.box.upper);
}

const std::set<std::string> kSweepParameters{"paths", "delta", "R", "DT", "N"};

}  // namespace

void ExperimentConfig::validate() const {
    const ProblemConfig& p = problem;
    require(p.box.dim == 1 || p.box.dim == 2, "problem.box.dim", "must be 1 or 2");
    if (p.shape == Shape::box) {
        require(!p.box.degenerate(), "problem.box", "must have lower < upper on every axis");
    } else {
        require(p.box.dim == 2, "problem.shape", "disc needs a 2D box");
        require(p.radius > 0.0, "problem.radius", "must be positive");
        require(p.n_theta >= 4, "problem.n_theta", "must be at least 4");
    }
    require(p.T > 0.0 && std::isfinite(p.T), "problem.T", "must be positive");
    require(std::isfinite(p.a3), "problem.a3", "must be finite");
    try {
        (void)p.initial.build(p.box.dim);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: problem.initial: ") + e.what());
    }
    try {
        (void)p.dirichlet.build(p.box.dim);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: problem.dirichlet: ") + e.what());
    }

    require(m >= 2, "m", "must be at least 2");
    require(n >= 1, "n", "must be at least 1");
    const GridSpec grid = make_grid(m, n, p.box, p.T);
    if (p.shape == Shape::box && forward == ForwardMethod::finite_difference) {
        require(grid.cfl_ok, "n", "violates the explicit stability limit for this m");
    }
    try {
        sources.validate(p.box.dim);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: sources: ") + e.what());
    }
    require(delta >= 0.0 && delta <= 1.0, "delta", "must lie in [0, 1]");
    if (fixed_gamma) require(*fixed_gamma > 0.0 && std::isfinite(*fixed_gamma), "gamma", "must be positive");
    if (gamma_grid) {
        require(gamma_grid->lo > 0.0 && gamma_grid->hi > gamma_grid->lo, "gamma_grid", "needs 0 < lo < hi");
        require(gamma_grid->count >= 5, "gamma_grid.count", "must be at least 5");
    }
    require(paths >= 1, "paths", "must be at least 1");
    try {
        (void)parse_boundary(boundary, domain_of(p));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    require(observation_stride >= 1, "observation_stride", "must be at least 1");
    require(refinement >= 1, "refinement", "must be at least 1");
    require(interior_lo >= 0.0 && interior_lo < interior_hi && interior_hi <= 1.0, "interior", "needs 0 <= lo < hi <= 1");
    require(t_window_from >= 0.0 && t_window_from < p.T, "t_window_from", "must lie in [0, T)");
    require(kernel_forward.gamma > 0.0, "kernel_forward.gamma", "must be positive");
    require(kernel_forward.boundary_time_stride >= 1, "kernel_forward.boundary_time_stride", "must be at least 1");
    for (const auto& s : sweeps) {
        require(kSweepParameters.count(s.parameter) == 1, "sweeps", "has unknown parameter '" + s.parameter + "'");
        require(!s.values.empty(), "sweeps." + s.parameter, "needs at least one value");
        for (double v : s.values) {
            require(std::isfinite(v), "sweeps." + s.parameter, "values must be finite");
            if (s.parameter == "paths" || s.parameter == "N") require(is_count(v), "sweeps." + s.parameter, "values must be positive integers");
            if (s.parameter == "delta") require(v >= 0.0 && v <= 1.0, "sweeps.delta", "values must lie in [0, 1]");
            if (s.parameter == "DT") require(v < 0.0, "sweeps.DT", "values must be negative");
            if (s.parameter == "R") require(v >= 0.0, "sweeps.R", "values must be non-negative");
        }
    }
}

EnsembleOptions ExperimentConfig::ensemble_options() const {
    EnsembleOptions o;
    o.sources = sources;
    o.noise = NoiseSpec{delta, noise_model, 0};
    o.paths = paths;
    o.base_seed = seed;
    o.gamma_boundary = parse_boundary(boundary, domain_of(problem));
    o.fixed_gamma = fixed_gamma;
    if (gamma_grid) o.gamma_grid = log_spaced_gammas(gamma_grid->hi, gamma_grid->lo, gamma_grid->count);
    o.shared_gamma = shared_gamma;
    o.observation_stride = observation_stride;
    o.include_initial = include_initial;
    o.refinement = refinement;
    o.interior_lo = interior_lo;
    o.interior_hi = interior_hi;
    o.t_window_from = t_window_from;
    o.forward = forward;
    o.kernel_forward = kernel_forward;
    return o;
}

ExperimentConfig example_config(const std::string& id) {
    const BuiltinExample ex = builtin_example(id);
    ExperimentConfig c;
    c.example = id;
    c.problem = ex.problem_config;
    c.m = ex.m;
    c.n = ex.n;
    c.sources = ex.sources;
    c.delta = ex.delta;
    c.boundary = ex.boundary;
    c.kernel_forward.sources = SourceConfig{3.5, -0.1, ex.problem_config.box.dim == 1 ? 60u : 256u};
    return c;
}

ordered_json to_json(const ExperimentConfig& c) {
    const std::size_t dim = c.problem.box.dim;
    ordered_json j;
    j["example"] = c.example;

    ordered_json p;
    p["shape"] = to_string(c.problem.shape);
    p["box"] = {{"dim", dim}, {"lower", point_json(c.problem.box.lower, dim)}, {"upper", point_json(c.problem.box.upper, dim)}};
    if (c.problem.shape == Shape::disc) {
        p["center"] = point_json(c.problem.center, 2);
        p["radius"] = c.problem.radius;
        p["n_theta"] = c.problem.n_theta;
    }
    p["T"] = c.problem.T;
    p["initial"] = function_json(c.problem.initial, dim);
    p["dirichlet"] = function_json(c.problem.dirichlet, dim);
    p["a3"] = c.problem.a3;
    p["deterministic"] = c.problem.deterministic;
    j["problem"] = p;

    j["m"] = c.m;
    j["n"] = c.n;
    j["sources"] = sources_json(c.sources);
    j["delta"] = c.delta;
    j["noise_model"] = to_string(c.noise_model);
    if (c.fixed_gamma) j["gamma"] = *c.fixed_gamma;
    else j["gamma"] = "auto";
    if (c.gamma_grid) j["gamma_grid"] = {{"lo", c.gamma_grid->lo}, {"hi", c.gamma_grid->hi}, {"count", c.gamma_grid->count}};
    else j["gamma_grid"] = "default";
    j["shared_gamma"] = c.shared_gamma;
    j["paths"] = c.paths;
    j["boundary"] = c.boundary;
    j["observation_stride"] = c.observation_stride;
    j["include_initial"] = c.include_initial;
    j["refinement"] = c.refinement;
    j["interior_lo"] = c.interior_lo;
    j["interior_hi"] = c.interior_hi;
    j["t_window_from"] = c.t_window_from;
    j["forward"] = to_string(c.forward);
    ordered_json kf = sources_json(c.kernel_forward.sources);
    kf["gamma"] = c.kernel_forward.gamma;
    kf["boundary_time_stride"] = c.kernel_forward.boundary_time_stride;
    kf["fit_tolerance"] = c.kernel_forward.fit_tolerance;
    j["kernel_forward"] = kf;
    j["seed"] = c.seed;
    j["output_dir"] = c.output_dir;
    ordered_json sw = ordered_json::array();
    for (const auto& s : c.sweeps) sw.push_back({{"parameter", s.parameter}, {"values", s.values}});
    j["sweeps"] = sw;
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig c;
    Reader r(j, "");
    r.get("example", c.example);
    if (const json* pj = r.child("problem")) {
        Reader p(*pj, "problem");
        std::string shape = to_string(c.problem.shape);
        p.get("shape", shape);
        c.problem.shape = shape_from_string(shape);
        if (const json* bj = p.child("box")) {
            Reader b(*bj, "problem.box");
            b.get("dim", c.problem.box.dim);
            if (const json* v = b.child("lower")) c.problem.box.lower = point_from(*v, "problem.box.lower");
            if (const json* v = b.child("upper")) c.problem.box.upper = point_from(*v, "problem.box.upper");
            b.finish();
        }
        if (const json* v = p.child("center")) c.problem.center = point_from(*v, "problem.center");
        p.get("radius", c.problem.radius);
        p.get("n_theta", c.problem.n_theta);
        p.get("T", c.problem.T);
        if (const json* v = p.child("initial")) c.problem.initial = function_from(*v, "problem.initial");
        if (const json* v = p.child("dirichlet")) c.problem.dirichlet = function_from(*v, "problem.dirichlet");
        p.get("a3", c.problem.a3);
        p.get("deterministic", c.problem.deterministic);
        p.finish();
    }
    r.get("m", c.m);
    r.get("n", c.n);
    if (const json* v = r.child("sources")) c.sources = sources_from(*v, "sources");
    r.get("delta", c.delta);
    std::string noise = to_string(c.noise_model);
    r.get("noise_model", noise);
    c.noise_model = noise_model_from_string(noise);
    if (const json* v = r.child("gamma")) {
        if (v->is_string()) {
            require(v->get<std::string>() == "auto", "gamma", "must be a number or \"auto\"");
            c.fixed_gamma.reset();
        } else {
            require(v->is_number(), "gamma", "must be a number or \"auto\"");
            c.fixed_gamma = v->get<double>();
        }
    }
    if (const json* v = r.child("gamma_grid")) {
        if (v->is_string()) {
            require(v->get<std::string>() == "default", "gamma_grid", "must be an object or \"default\"");
            c.gamma_grid.reset();
        } else {
            GammaGrid g;
            Reader gr(*v, "gamma_grid");
            gr.get("lo", g.lo);
            gr.get("hi", g.hi);
            gr.get("count", g.count);
            gr.finish();
            c.gamma_grid = g;
        }
    }
    r.get("shared_gamma", c.shared_gamma);
    r.get("paths", c.paths);
    r.get("boundary", c.boundary);
    r.get("observation_stride", c.observation_stride);
    r.get("include_initial", c.include_initial);
    r.get("refinement", c.refinement);
    r.get("interior_lo", c.interior_lo);
    r.get("interior_hi", c.interior_hi);
    r.get("t_window_from", c.t_window_from);
    std::string forward = to_string(c.forward);
    r.get("forward", forward);
    c.forward = forward_method_from_string(forward);
    if (const json* v = r.child("kernel_forward")) {
        Reader k(*v, "kernel_forward");
        k.get("R", c.kernel_forward.sources.R);
        k.get("DT", c.kernel_forward.sources.DT);
        k.get("N", c.kernel_forward.sources.N);
        std::string layout = to_string(c.kernel_forward.sources.layout);
        k.get("layout", layout);
        c.kernel_forward.sources.layout = source_layout_from_string(layout);
        k.get("gamma", c.kernel_forward.gamma);
        k.get("boundary_time_stride", c.kernel_forward.boundary_time_stride);
        k.get("fit_tolerance", c.kernel_forward.fit_tolerance);
        k.finish();
    }
    r.get("seed", c.seed);
    r.get("output_dir", c.output_dir);
    if (const json* v = r.child("sweeps")) {
        require(v->is_array(), "sweeps", "must be an array");
        for (const auto& s : *v) {
            SweepAxis a;
            Reader sr(s, "sweeps[]");
            sr.get("parameter", a.parameter);
            sr.get("values", a.values);
            sr.finish();
            c.sweeps.push_back(std::move(a));
        }
    }
    r.finish();
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config: " + path + ": " + e.what());
    }
    if (j.is_object() && j.contains("config") && j.contains("files")) return config_from_json(j.at("config"));
    return config_from_json(j);
}

}  // namespace spc
