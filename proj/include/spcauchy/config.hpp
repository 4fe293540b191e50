#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spcauchy/ensemble.hpp"
#include "spcauchy/problem_config.hpp"

namespace spc {

struct SweepAxis {
    std::string parameter;  // paths, delta, R, DT or N
    std::vector<double> values;
};

struct GammaGrid {
    double lo = 1e-12;
    double hi = 1.0;
    std::size_t count = 40;
};

/// Everything needed to reproduce one experiment.
struct ExperimentConfig {
    std::string example = "custom";
    ProblemConfig problem;
    std::size_t m = 15;
    std::size_t n = 450;
    SourceConfig sources;
    double delta = 0.0;
    NoiseModel noise_model = NoiseModel::multiplicative_uniform;
    std::optional<double> fixed_gamma;  // empty = L-curve
    std::optional<GammaGrid> gamma_grid;  // empty = default_gammas()
    bool shared_gamma = false;
    std::size_t paths = 10;
    std::string boundary = "x=1";
    std::size_t observation_stride = 1;
    bool include_initial = false;
    std::size_t refinement = 2;
    double interior_lo = 0.1;
    double interior_hi = 0.9;
    double t_window_from = 0.1;
    ForwardMethod forward = ForwardMethod::finite_difference;
    KernelForwardOptions kernel_forward;
    std::uint64_t seed = 2024;
    std::string output_dir = "out";
    std::vector<SweepAxis> sweeps;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    [[nodiscard]] EnsembleOptions ensemble_options() const;
};

/// Resolved configuration of a built-in example with every default filled in.
ExperimentConfig example_config(const std::string& id);

nlohmann::ordered_json to_json(const ExperimentConfig& config);
/// Missing keys keep their defaults; unknown keys and ill-typed values are errors.
ExperimentConfig config_from_json(const nlohmann::json& j);

/// Loads a config file, or the "config" member of a run manifest.
ExperimentConfig load_config(const std::string& path);

}  // namespace spc
