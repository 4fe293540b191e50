#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace spc {

/// Increments dW_k = W(t_{k+1}) - W(t_k) of one standard Wiener path on a uniform time grid.
struct BrownianPath {
    std::vector<double> increments;
    std::uint64_t seed = 0;
    double tau = 0.0;

    [[nodiscard]] std::size_t steps() const { return increments.size(); }
    /// W(t_k) for k = 0..n, with W(0) = 0.
    [[nodiscard]] std::vector<double> cumulative() const;
};

/// n i.i.d. Normal(0, tau) increments, a pure function of (n, tau, seed).
BrownianPath sample_brownian(std::size_t n, double tau, std::uint64_t seed);

/// The all-zero path, used for deterministic solves.
BrownianPath zero_path(std::size_t n, double tau);

/// Splits every increment into `factor` sub-increments by Brownian-bridge sampling.
/// The sub-increments of step k sum to increments[k] (up to rounding), so the
/// refined path is the same sample path observed on a finer grid.
BrownianPath refine_path(const BrownianPath& path, std::size_t factor, std::uint64_t bridge_seed);

}  // namespace spc
