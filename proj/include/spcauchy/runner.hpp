#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spcauchy/config.hpp"

namespace spc {

/// One combination of the swept parameters.
struct SweepPoint {
    double delta = 0.0;
    std::size_t paths = 0;
    double R = 0.0;
    double DT = 0.0;
    std::size_t N = 0;
    std::string suffix;  // "" for a single point, "_p000", "_p001", ... otherwise
};

struct SummaryRow {
    SweepPoint point;
    double gamma_selected = 0.0;  // median over paths
    double mean_E = 0.0;
    std::size_t degenerate_paths = 0;
};

struct Artifact {
    std::string name;
    std::string content;
};

struct RunReport {
    std::vector<SummaryRow> rows;
    std::vector<Artifact> artifacts;  // in write order, manifest last
};

/// Cartesian product of the configured sweeps, the last sweep varying fastest.
std::vector<SweepPoint> expand_sweeps(const ExperimentConfig& config);

/// Config with the point's parameters substituted.
ExperimentConfig at_point(const ExperimentConfig& config, const SweepPoint& point);

/// Runs every sweep point and renders the artifacts in memory.
RunReport execute(const ExperimentConfig& config, std::size_t threads = 0);

/// Writes artifacts into `dir`, creating it if needed.
void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts);

/// execute + write_artifacts into config.output_dir.
RunReport run_experiment(const ExperimentConfig& config, std::size_t threads = 0);

/// Git blob object id: SHA-1 of "blob <size>\0" followed by the bytes.
std::string git_blob_sha1(const std::string& content);

std::string version_string();

}  // namespace spc
