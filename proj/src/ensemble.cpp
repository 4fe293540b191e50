#include "spcauchy/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <thread>

#include "spcauchy/collocation.hpp"
#include "spcauchy/random.hpp"

namespace spc {

StageError::StageError(std::size_t path, std::string stage, const std::string& what)
    : std::runtime_error("path " + std::to_string(path) + ", stage " + stage + ": " + what),
      path_(path),
      stage_(std::move(stage)) {}

namespace {

template <class F>
auto stage(std::size_t path, const char* name, F&& f) {
    try {
        return f();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(path, name, e.what());
    }
}

template <class F>
void parallel_for(std::size_t count, std::size_t threads, F&& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    std::vector<std::exception_ptr> errors(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// State kept between the L-curve phase and the evaluation phase of one path.
struct PathWork {
    std::unique_ptr<TikhonovSolver> solver;
    BrownianPath path;
};

}  // namespace

EnsembleResult run_ensemble(const ProblemSpec& spec, const GridSpec& grid, const EnsembleOptions& options) {
    if (options.paths < 1) throw std::invalid_argument("ensemble: paths must be at least 1");
    if (options.refinement < 1) throw std::invalid_argument("ensemble: refinement must be positive");
    const bool kernel_forward = options.forward == ForwardMethod::kernel || spec.domain.shape == Shape::disc;
    const std::size_t dim = grid.dim();

    const GridSpec fine = refine(grid, options.refinement);
    const std::size_t time_ratio = options.refinement * options.refinement;
    const auto sources = place_sources(options.sources, spec.domain.bounding_box(), dim);

    std::unique_ptr<KernelForward> coarse_kernel, fine_kernel;
    if (kernel_forward) {
        coarse_kernel = std::make_unique<KernelForward>(spec, grid, options.kernel_forward);
        fine_kernel = std::make_unique<KernelForward>(spec, fine, options.kernel_forward);
    }

    EnsembleResult result;
    result.paths = options.paths;
    result.interior = Region{spec.domain, options.interior_lo, options.interior_hi};
    result.per_path.resize(options.paths);
    std::vector<PathWork> work(options.paths);

    // Phase 1: data, system and gamma choice per path.
    parallel_for(options.paths, options.threads, [&](std::size_t p) {
        PathResult& pr = result.per_path[p];
        PathWork& w = work[p];
        pr.index = p;
        pr.brownian_seed = derive_seed(options.base_seed, Stream::brownian, p);
        pr.noise_seed = derive_seed(options.base_seed, Stream::noise, p);
        w.path = stage(p, "brownian", [&] { return sample_brownian(grid.n, grid.tau, pr.brownian_seed); });
        const FieldSnapshotSeries field = stage(p, "forward", [&] {
            return kernel_forward ? coarse_kernel->apply(w.path) : solve_forward(spec, grid, w.path);
        });
        const CauchyData data = stage(p, "cauchy-data", [&] {
            const auto raw = extract_cauchy(field, options.gamma_boundary);
            NoiseSpec noise = options.noise;
            noise.seed = pr.noise_seed;
            return add_noise(lateral_rows(raw, options.observation_stride, options.include_initial), noise);
        });
        const CollocationSystem sys = stage(p, "assemble", [&] { return assemble(data, sources, dim); });
        pr.rows = static_cast<std::size_t>(sys.A.rows());
        w.solver = stage(p, "svd", [&] { return std::make_unique<TikhonovSolver>(sys); });
        if (options.fixed_gamma) {
            pr.gamma = *options.fixed_gamma;
        } else {
            pr.lcurve = stage(p, "lcurve", [&] {
                const auto& sv = w.solver->singular_values();
                return lcurve_select(*w.solver, options.gamma_grid.empty() ? default_gammas(sv(0)) : options.gamma_grid);
            });
            pr.gamma = pr.lcurve->gamma;
            pr.degenerate = pr.lcurve->degenerate;
            pr.monotone = pr.lcurve->sweep.monotone;
        }
    });

    std::vector<double> chosen;
    for (const auto& pr : result.per_path) chosen.push_back(pr.gamma);
    std::sort(chosen.begin(), chosen.end());
    result.gamma_median = chosen[(chosen.size() - 1) / 2];
    if (options.shared_gamma && !options.fixed_gamma) {
        for (auto& pr : result.per_path) pr.gamma = result.gamma_median;
    }

    const ErrorWindow x_window{options.t_window_from, grid.T, {}};
    const Region interior = result.interior;
    const ErrorWindow t_window{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                               [interior](const Point& p) { return interior.contains(p); }};

    // Phase 2: reconstruction and reference on the refined nodes at the coarse time levels.
    parallel_for(options.paths, options.threads, [&](std::size_t p) {
        PathResult& pr = result.per_path[p];
        PathWork& w = work[p];
        const FieldSnapshotSeries reference = stage(p, "reference", [&] {
            const auto fine_path = refine_path(w.path, time_ratio, derive_seed(options.base_seed, Stream::bridge, p));
            const auto full = kernel_forward ? fine_kernel->apply(fine_path) : solve_forward(spec, fine, fine_path);
            return subsample_times(full, time_ratio);
        });
        pr.reconstruction = stage(p, "evaluate", [&] {
            const Eigen::VectorXd lambda = w.solver->solve(pr.gamma);
            KernelExpansion exp{dim, sources, std::vector<double>(lambda.data(), lambda.data() + lambda.size())};
            FieldSnapshotSeries rec;
            rec.grid = reference.grid;
            rec.nodes = reference.nodes;
            rec.times = reference.times;
            rec.values = evaluate_on_nodes(exp, rec.nodes, rec.times);
            return rec;
        });
        pr.reference = reference;
        pr.error_x = relative_error(pr.reconstruction, pr.reference, Axis::space, x_window);
        pr.error_t = relative_error(pr.reconstruction, pr.reference, Axis::time, t_window);
        w.solver.reset();
    });

    result.mean_reconstruction = result.per_path[0].reconstruction;
    result.mean_reference = result.per_path[0].reference;
    for (std::size_t p = 1; p < options.paths; ++p) {
        const auto& pr = result.per_path[p];
        for (std::size_t i = 0; i < pr.reconstruction.values.size(); ++i) {
            result.mean_reconstruction.values[i] += pr.reconstruction.values[i];
            result.mean_reference.values[i] += pr.reference.values[i];
        }
    }
    const auto count = static_cast<double>(options.paths);
    for (auto& v : result.mean_reconstruction.values) v /= count;
    for (auto& v : result.mean_reference.values) v /= count;

    result.mean_error_x = relative_error(result.mean_reconstruction, result.mean_reference, Axis::space, x_window);
    result.mean_error_t = relative_error(result.mean_reconstruction, result.mean_reference, Axis::time, t_window);
    result.mean_E = result.mean_error_x.mean([interior](const Point& p) { return interior.contains(p); });
    return result;
}

std::string to_string(ForwardMethod method) {
    return method == ForwardMethod::finite_difference ? "finite-difference" : "kernel";
}

ForwardMethod forward_method_from_string(const std::string& s) {
    if (s == "finite-difference" || s == "fd") return ForwardMethod::finite_difference;
    if (s == "kernel") return ForwardMethod::kernel;
    throw std::invalid_argument("unknown forward method '" + s + "'");
}

}  // namespace spc
