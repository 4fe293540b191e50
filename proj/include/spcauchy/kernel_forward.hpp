#pragma once

#include <cstddef>

#include "spcauchy/brownian.hpp"
#include "spcauchy/field.hpp"
#include "spcauchy/kernel.hpp"
#include "spcauchy/problem.hpp"

namespace spc {

struct KernelForwardOptions {
    SourceConfig sources{3.5, -0.1, 256};
    double gamma = 1e-10;
    std::size_t boundary_time_stride = 1;
    /// Largest accepted |A lambda - b| / |b| of the fit.
    double fit_tolerance = 0.1;
};

/// Forward solver that fits a heat-kernel expansion to the initial data at t = 0 and the
/// Dirichlet data on the whole boundary, then evaluates it on the grid nodes. The fit is
/// deterministic and computed once; `apply` multiplies interior values at level k by
/// prod_{i<k} (1 + a3 dW_i), an Euler-Maruyama factor for the multiplicative noise.
/// Row 0 is f and boundary nodes of later rows are g1, as for the finite-difference solver.
class KernelForward {
public:
    /// Throws std::runtime_error naming the collocation counts when the fit is rank
    /// deficient or misses the data by more than `fit_tolerance`.
    KernelForward(const ProblemSpec& spec, const GridSpec& grid, const KernelForwardOptions& options);

    [[nodiscard]] FieldSnapshotSeries apply(const BrownianPath& path) const;
    [[nodiscard]] const FieldSnapshotSeries& deterministic() const { return field_; }
    [[nodiscard]] const KernelExpansion& expansion() const { return expansion_; }
    [[nodiscard]] double fit_residual() const { return fit_residual_; }

private:
    ProblemSpec spec_;
    FieldSnapshotSeries field_;
    KernelExpansion expansion_;
    double fit_residual_ = 0.0;
};

FieldSnapshotSeries solve_forward_mfs(const ProblemSpec& spec, const GridSpec& grid, const BrownianPath& path,
                                      const SourceConfig& sources, double gamma = 1e-10);

}  // namespace spc
