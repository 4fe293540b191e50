#include "spcauchy/brownian.hpp"

#include <cmath>
#include <stdexcept>

#include "spcauchy/random.hpp"

namespace spc {

std::vector<double> BrownianPath::cumulative() const {
    std::vector<double> w(increments.size() + 1, 0.0);
    for (std::size_t k = 0; k < increments.size(); ++k) w[k + 1] = w[k] + increments[k];
    return w;
}

BrownianPath sample_brownian(std::size_t n, double tau, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_brownian: n must be at least 1");
    if (!(tau > 0.0)) throw std::invalid_argument("sample_brownian: tau must be positive");
    BrownianPath p;
    p.seed = seed;
    p.tau = tau;
    p.increments.resize(n);
    Rng rng(seed);
    const double sd = std::sqrt(tau);
    for (auto& dw : p.increments) dw = sd * rng.normal();
    return p;
}

BrownianPath zero_path(std::size_t n, double tau) {
    BrownianPath p;
    p.tau = tau;
    p.increments.assign(n, 0.0);
    return p;
}

BrownianPath refine_path(const BrownianPath& path, std::size_t factor, std::uint64_t bridge_seed) {
    if (factor < 1) throw std::invalid_argument("refine_path: factor must be positive");
    BrownianPath out;
    out.seed = path.seed;
    out.tau = path.tau / static_cast<double>(factor);
    out.increments.reserve(path.steps() * factor);
    Rng rng(bridge_seed);
    for (double dw : path.increments) {
        double remaining = dw;
        for (std::size_t i = 0; i < factor; ++i) {
            const std::size_t left = factor - i;
            if (left == 1) {
                out.increments.push_back(remaining);
                break;
            }
            // Bridge over `left` sub-steps: the next sub-step has mean remaining/left
            // and variance tau_s * (left-1)/left.
            const double frac = 1.0 / static_cast<double>(left);
            const double var = out.tau * (1.0 - frac);
            const double step = remaining * frac + std::sqrt(var) * rng.normal();
            out.increments.push_back(step);
            remaining -= step;
        }
    }
    return out;
}

}  // namespace spc
