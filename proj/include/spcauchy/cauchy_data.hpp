#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spcauchy/geometry.hpp"

namespace spc {

enum class ObservationRole : std::uint8_t {
    boundary,  // node on the accessible sub-boundary
    inward,    // node one grid line inside, the surrogate for flux data
};

struct Observation {
    Point location{0.0, 0.0};
    double time = 0.0;
    double value = 0.0;
    std::size_t time_index = 0;
    std::size_t node = 0;
    ObservationRole role = ObservationRole::boundary;
};

/// Lateral observations on (0,T) x Gamma, one entry per (time level, node).
struct CauchyData {
    std::size_t dim = 1;
    std::vector<Observation> rows;

    [[nodiscard]] std::size_t size() const { return rows.size(); }
    [[nodiscard]] bool empty() const { return rows.empty(); }
};

enum class NoiseModel { multiplicative_uniform };

struct NoiseSpec {
    double delta = 0.0;
    NoiseModel model = NoiseModel::multiplicative_uniform;
    std::uint64_t seed = 0;
};

/// v -> v * (1 + delta * u), u ~ Uniform[-1, 1] i.i.d. in row order.
/// Locations, times and roles are untouched; delta = 0 returns the input unchanged.
CauchyData add_noise(const CauchyData& data, const NoiseSpec& spec);

std::string to_string(NoiseModel model);
NoiseModel noise_model_from_string(const std::string& s);

}  // namespace spc
