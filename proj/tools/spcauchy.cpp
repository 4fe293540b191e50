#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spcauchy/config.hpp"
#include "spcauchy/examples.hpp"
#include "spcauchy/runner.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

double to_double(const std::string& s, const std::string& flag) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": '" + s + "' is not a number");
    }
}

/// "a,b,c" or "lo:hi:step" (inclusive of hi up to rounding).
std::vector<double> parse_values(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw std::invalid_argument(flag + ": expected lo:hi:step");
        const double lo = to_double(parts[0], flag), hi = to_double(parts[1], flag), step = to_double(parts[2], flag);
        if (!(step > 0.0) || hi < lo) throw std::invalid_argument(flag + ": need step > 0 and hi >= lo");
        const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) values.push_back(lo + static_cast<double>(i) * step);
    } else {
        for (const auto& p : split(text, ',')) values.push_back(to_double(p, flag));
    }
    return values;
}

void set_sweep(spc::ExperimentConfig& c, const std::string& parameter, std::vector<double> values) {
    for (auto& s : c.sweeps) {
        if (s.parameter == parameter) {
            s.values = std::move(values);
            return;
        }
    }
    c.sweeps.push_back({parameter, std::move(values)});
}

spc::ExperimentConfig resolve(const std::string& target) {
    if (spc::is_builtin(target)) return spc::example_config(target);
    return spc::load_config(target);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernel-based Tikhonov reconstruction for a stochastic heat equation Cauchy problem"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List built-in examples");

    std::string dump_target;
    auto* dump = app.add_subcommand("dump-config", "Print the resolved config of an example or file");
    dump->add_option("target", dump_target, "Example id or config path")->required();

    std::string target;
    std::optional<double> delta, R, DT, a3;
    std::optional<std::size_t> paths, N, m, n;
    std::optional<std::string> gamma, gamma_grid, boundary, out, forward;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> sweep_paths, sweep_delta, sweep_R, sweep_DT, sweep_N;
    bool deterministic = false, shared_gamma = false, quiet = false;
    std::size_t threads = 0;

    auto* run = app.add_subcommand("run", "Run an experiment and write its artifacts");
    run->add_option("target", target, "Example id (ex1a, ex1b, ex2a, ex2b, ex3), config file or manifest")->required();
    run->add_option("--delta", delta, "Relative noise level");
    run->add_option("--paths", paths, "Number of Brownian sample paths");
    run->add_option("--R", R, "Source spread beyond the domain");
    run->add_option("--DT", DT, "Source time layer (negative)");
    run->add_option("--N", N, "Number of source points");
    run->add_option("--gamma", gamma, "Fixed regularization parameter or 'auto' for the L-curve");
    run->add_option("--gamma-grid", gamma_grid, "L-curve grid lo:hi:count");
    run->add_option("--seed", seed, "Master seed");
    run->add_option("--boundary", boundary, "Accessible boundary (x=1, gamma1..3, theta=pi/3, ...)");
    run->add_option("--m", m, "Spatial intervals per axis (rings on a disc)");
    run->add_option("--n", n, "Time steps");
    run->add_option("--a3", a3, "Noise coefficient of the equation");
    run->add_option("--forward", forward, "Forward solver: fd (finite-difference) or kernel");
    run->add_flag("--deterministic", deterministic, "Drop the stochastic term");
    run->add_flag("--shared-gamma", shared_gamma, "Use the median L-curve gamma on every path");
    run->add_option("--sweep-paths", sweep_paths, "Path counts: list a,b,c or lo:hi:step");
    run->add_option("--sweep-delta", sweep_delta, "Noise levels");
    run->add_option("--sweep-R", sweep_R, "Source spreads");
    run->add_option("--sweep-DT", sweep_DT, "Source time layers");
    run->add_option("--sweep-N", sweep_N, "Source counts");
    run->add_option("--threads", threads, "Worker threads, 0 = all cores");
    run->add_option("--out", out, "Output directory");
    run->add_flag("--quiet", quiet, "Do not print the summary");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            for (const auto& id : spc::builtin_ids()) {
                const auto c = spc::example_config(id);
                std::printf("%-5s  %s  m=%zu n=%zu N=%zu delta=%g boundary=%s\n", id.c_str(),
                            spc::to_string(c.problem.shape).c_str(), c.m, c.n, c.sources.N, c.delta, c.boundary.c_str());
            }
            return 0;
        }
        if (*dump) {
            std::cout << spc::to_json(resolve(dump_target)).dump(2) << '\n';
            return 0;
        }

        spc::ExperimentConfig c = resolve(target);
        if (delta) c.delta = *delta;
        if (paths) c.paths = *paths;
        if (R) c.sources.R = *R;
        if (DT) c.sources.DT = *DT;
        if (N) c.sources.N = *N;
        if (gamma) {
            if (*gamma == "auto") c.fixed_gamma.reset();
            else c.fixed_gamma = to_double(*gamma, "--gamma");
        }
        if (gamma_grid) {
            const auto parts = split(*gamma_grid, ':');
            if (parts.size() != 3) throw std::invalid_argument("--gamma-grid: expected lo:hi:count");
            const double count = to_double(parts[2], "--gamma-grid");
            if (!(count >= 1.0) || std::floor(count) != count) throw std::invalid_argument("--gamma-grid: count must be a positive integer");
            c.gamma_grid = spc::GammaGrid{to_double(parts[0], "--gamma-grid"), to_double(parts[1], "--gamma-grid"),
                                          static_cast<std::size_t>(count)};
        }
        if (seed) c.seed = *seed;
        if (boundary) c.boundary = *boundary;
        if (m) c.m = *m;
        if (n) c.n = *n;
        if (a3) c.problem.a3 = *a3;
        if (forward) c.forward = spc::forward_method_from_string(*forward);
        if (deterministic) c.problem.deterministic = true;
        if (shared_gamma) c.shared_gamma = true;
        if (sweep_paths) set_sweep(c, "paths", parse_values(*sweep_paths, "--sweep-paths"));
        if (sweep_delta) set_sweep(c, "delta", parse_values(*sweep_delta, "--sweep-delta"));
        if (sweep_R) set_sweep(c, "R", parse_values(*sweep_R, "--sweep-R"));
        if (sweep_DT) set_sweep(c, "DT", parse_values(*sweep_DT, "--sweep-DT"));
        if (sweep_N) set_sweep(c, "N", parse_values(*sweep_N, "--sweep-N"));
        if (out) c.output_dir = *out;
        c.validate();

        const spc::RunReport report = spc::run_experiment(c, threads);
        if (!quiet) {
            std::printf("%-8s %-6s %-6s %-6s %-5s %-12s %s\n", "delta", "paths", "R", "DT", "N", "gamma", "mean_E");
            for (const auto& r : report.rows) {
                std::printf("%-8g %-6zu %-6g %-6g %-5zu %-12.4e %.6g\n", r.point.delta, r.point.paths, r.point.R,
                            r.point.DT, r.point.N, r.gamma_selected, r.mean_E);
            }
            std::printf("wrote %zu files to %s\n", report.artifacts.size(), c.output_dir.c_str());
        }
        return 0;
    } catch (const spc::StageError& e) {
        std::fprintf(stderr, "error: path %zu, stage %s: %s\n", e.path(), e.stage().c_str(), e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
