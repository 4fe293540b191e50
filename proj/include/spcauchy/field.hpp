#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "spcauchy/grid.hpp"

namespace spc {

/// Solution values on a set of spatial nodes at a sequence of times.
/// Storage is row-major by time level: values[k * nodes.size() + j].
struct FieldSnapshotSeries {
    GridSpec grid;
    NodeSet nodes;
    std::vector<double> times;
    std::vector<double> values;

    [[nodiscard]] std::size_t node_count() const { return nodes.size(); }
    [[nodiscard]] std::size_t time_count() const { return times.size(); }
    [[nodiscard]] double at(std::size_t k, std::size_t j) const { return values[k * nodes.size() + j]; }
    double& at(std::size_t k, std::size_t j) { return values[k * nodes.size() + j]; }
    [[nodiscard]] std::span<const double> row(std::size_t k) const {
        return {values.data() + k * nodes.size(), nodes.size()};
    }
};

/// Keeps every `stride`-th time level (always including level 0).
FieldSnapshotSeries subsample_times(const FieldSnapshotSeries& field, std::size_t stride);

/// Debug dump: columns k, j (and j1 in 2D), value.
void write_field_csv(std::ostream& os, const FieldSnapshotSeries& field);

}  // namespace spc
