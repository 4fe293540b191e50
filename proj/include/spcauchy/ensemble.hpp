#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spcauchy/cauchy_data.hpp"
#include "spcauchy/forward_fd.hpp"
#include "spcauchy/kernel.hpp"
#include "spcauchy/kernel_forward.hpp"
#include "spcauchy/metrics.hpp"
#include "spcauchy/tikhonov.hpp"

namespace spc {

enum class ForwardMethod { finite_difference, kernel };

struct EnsembleOptions {
    SourceConfig sources;
    /// `seed` is ignored: path p uses derive_seed(base_seed, Stream::noise, p).
    NoiseSpec noise;
    std::size_t paths = 10;
    std::uint64_t base_seed = 0;
    GammaSpec gamma_boundary = GammaSpec::edge(0, true);

    std::optional<double> fixed_gamma;
    /// Empty = default_gammas() of the collocation matrix.
    std::vector<double> gamma_grid;
    /// One gamma for every path: the median of the per-path L-curve choices.
    bool shared_gamma = false;

    std::size_t observation_stride = 1;
    bool include_initial = false;

    /// Reference fields use `refinement` x the spatial and refinement^2 x the temporal resolution.
    std::size_t refinement = 2;
    /// G' = [interior_lo, interior_hi] * domain and t >= t_window_from for summary errors.
    double interior_lo = 0.1;
    double interior_hi = 0.9;
    double t_window_from = 0.1;

    ForwardMethod forward = ForwardMethod::finite_difference;
    KernelForwardOptions kernel_forward;

    /// 0 = hardware concurrency.
    std::size_t threads = 0;
};

struct PathResult {
    std::size_t index = 0;
    std::uint64_t brownian_seed = 0;
    std::uint64_t noise_seed = 0;
    double gamma = 0.0;
    bool degenerate = false;
    bool monotone = true;
    std::size_t rows = 0;
    std::optional<LCurveSelection> lcurve;
    FieldSnapshotSeries reconstruction;
    FieldSnapshotSeries reference;
    ErrorProfile error_x;
    ErrorProfile error_t;
};

struct EnsembleResult {
    std::size_t paths = 0;
    std::vector<PathResult> per_path;
    FieldSnapshotSeries mean_reconstruction;
    FieldSnapshotSeries mean_reference;
    /// Profiles of the ensemble means: E(x) normed over t >= t_window_from, E(t) over G'.
    ErrorProfile mean_error_x;
    ErrorProfile mean_error_t;
    /// Average of mean_error_x over nodes in G'.
    double mean_E = 0.0;
    double gamma_median = 0.0;
    Region interior;
};

/// A pipeline failure annotated with the path and the stage.
class StageError : public std::runtime_error {
public:
    StageError(std::size_t path, std::string stage, const std::string& what);
    [[nodiscard]] std::size_t path() const { return path_; }
    [[nodiscard]] const std::string& stage() const { return stage_; }

private:
    std::size_t path_;
    std::string stage_;
};

/// Per path: forward solve, Cauchy data on Gamma, noise, collocation, Tikhonov with
/// L-curve (or fixed) gamma, and evaluation of the expansion next to a reference solved
/// on the refined grid along the same Brownian path. Results do not depend on the
/// thread count; means are summed in path order.
EnsembleResult run_ensemble(const ProblemSpec& spec, const GridSpec& grid, const EnsembleOptions& options);

std::string to_string(ForwardMethod method);
ForwardMethod forward_method_from_string(const std::string& s);

}  // namespace spc
