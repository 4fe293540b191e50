#include <cmath>
#include <stdexcept>

#include "spcauchy/cauchy_data.hpp"
#include "spcauchy/random.hpp"

namespace spc {

CauchyData add_noise(const CauchyData& data, const NoiseSpec& spec) {
    if (!(spec.delta >= 0.0 && spec.delta <= 1.0)) {
        throw std::invalid_argument("add_noise: delta must lie in [0, 1]");
    }
    CauchyData out = data;
    if (spec.delta == 0.0) return out;
    Rng rng(spec.seed);
    for (auto& row : out.rows) {
        if (!std::isfinite(row.value)) throw std::invalid_argument("add_noise: non-finite datum");
        row.value *= 1.0 + spec.delta * rng.uniform_pm1();
    }
    return out;
}

std::string to_string(NoiseModel) { return "multiplicative-uniform"; }

NoiseModel noise_model_from_string(const std::string& s) {
    if (s == "multiplicative-uniform") return NoiseModel::multiplicative_uniform;
    throw std::invalid_argument("unknown noise model '" + s + "'");
}

}  // namespace spc
