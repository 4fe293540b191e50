#include "spcauchy/kernel_forward.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spcauchy/collocation.hpp"
#include "spcauchy/tikhonov.hpp"

namespace spc {

KernelForward::KernelForward(const ProblemSpec& spec, const GridSpec& grid, const KernelForwardOptions& options)
    : spec_(spec) {
    if (!spec.initial || !spec.dirichlet) throw std::invalid_argument("kernel forward: missing initial or boundary data");
    if (spec.domain.dim() != grid.dim()) throw std::invalid_argument("kernel forward: grid/domain dimension mismatch");
    if (options.boundary_time_stride < 1) throw std::invalid_argument("kernel forward: stride must be positive");

    field_.grid = grid;
    field_.nodes = make_nodes(grid, spec.domain);
    const std::size_t nn = field_.node_count();
    field_.times.resize(grid.n + 1);
    for (std::size_t k = 0; k <= grid.n; ++k) field_.times[k] = grid.time(k);

    CauchyData fit;
    fit.dim = grid.dim();
    std::size_t initial_rows = 0;
    std::size_t boundary_rows = 0;
    for (std::size_t j = 0; j < nn; ++j) {
        const Point& x = field_.nodes.points[j];
        fit.rows.push_back({x, 0.0, spec.initial(x), 0, j, ObservationRole::inward});
        ++initial_rows;
    }
    for (std::size_t k = 1; k <= grid.n; k += options.boundary_time_stride) {
        for (std::size_t j = 0; j < nn; ++j) {
            if (!field_.nodes.on_boundary[j]) continue;
            const Point& x = field_.nodes.points[j];
            fit.rows.push_back({x, field_.times[k], spec.dirichlet(field_.times[k], x), k, j, ObservationRole::boundary});
            ++boundary_rows;
        }
    }

    const auto sources = place_sources(options.sources, spec.domain.bounding_box(), grid.dim());
    const CollocationSystem sys = assemble(fit, sources, grid.dim());
    const TikhonovSolver solver(sys);
    const auto counts = " (" + std::to_string(initial_rows) + " initial rows, " + std::to_string(boundary_rows) +
                        " boundary rows, " + std::to_string(sources.size()) + " sources)";
    const auto& sigma = solver.singular_values();
    if (sigma.size() == 0 || !(sigma(0) > 0.0)) throw std::runtime_error("kernel forward: zero collocation matrix" + counts);

    const Eigen::VectorXd lambda = solver.solve(options.gamma);
    const double bnorm = sys.b.norm();
    fit_residual_ = bnorm > 0.0 ? (sys.A * lambda - sys.b).norm() / bnorm : (sys.A * lambda).norm();
    if (!(fit_residual_ <= options.fit_tolerance)) {
        throw std::runtime_error("kernel forward: fit residual " + std::to_string(fit_residual_) +
                                 " exceeds tolerance" + counts);
    }

    expansion_.dim = grid.dim();
    expansion_.sources = sources;
    expansion_.coefficients.assign(lambda.data(), lambda.data() + lambda.size());
    field_.values = evaluate_on_nodes(expansion_, field_.nodes, field_.times);
}

FieldSnapshotSeries KernelForward::apply(const BrownianPath& path) const {
    const GridSpec& grid = field_.grid;
    if (path.steps() != grid.n) throw std::invalid_argument("kernel forward: path length differs from n");
    const double a3 = spec_.noise_coefficient();
    FieldSnapshotSeries out = field_;
    const std::size_t nn = out.node_count();
    double factor = 1.0;
    for (std::size_t k = 0; k <= grid.n; ++k) {
        if (k > 0) factor *= 1.0 + a3 * path.increments[k - 1];
        for (std::size_t j = 0; j < nn; ++j) {
            const Point& x = out.nodes.points[j];
            if (k == 0) {
                out.at(0, j) = spec_.initial(x);
            } else if (out.nodes.on_boundary[j]) {
                out.at(k, j) = spec_.dirichlet(out.times[k], x);
            } else {
                out.at(k, j) *= factor;
            }
        }
    }
    return out;
}

FieldSnapshotSeries solve_forward_mfs(const ProblemSpec& spec, const GridSpec& grid, const BrownianPath& path,
                                      const SourceConfig& sources, double gamma) {
    KernelForwardOptions opt;
    opt.sources = sources;
    opt.gamma = gamma;
    return KernelForward(spec, grid, opt).apply(path);
}

}  // namespace spc
