#include "spcauchy/field.hpp"

#include <cstdio>
#include <stdexcept>

namespace spc {

FieldSnapshotSeries subsample_times(const FieldSnapshotSeries& field, std::size_t stride) {
    if (stride < 1) throw std::invalid_argument("subsample_times: stride must be positive");
    FieldSnapshotSeries out;
    out.grid = field.grid;
    out.nodes = field.nodes;
    for (std::size_t k = 0; k < field.time_count(); k += stride) {
        out.times.push_back(field.times[k]);
        const auto r = field.row(k);
        out.values.insert(out.values.end(), r.begin(), r.end());
    }
    return out;
}

void write_field_csv(std::ostream& os, const FieldSnapshotSeries& field) {
    const bool box2d = field.nodes.shape == Shape::box && field.nodes.dim == 2;
    const std::size_t p = field.nodes.m + 1;
    os << (box2d ? "k,j0,j1,value\n" : "k,j,value\n");
    char buf[64];
    for (std::size_t k = 0; k < field.time_count(); ++k) {
        for (std::size_t j = 0; j < field.node_count(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", field.at(k, j));
            if (box2d) {
                os << k << ',' << j % p << ',' << j / p << ',' << buf << '\n';
            } else {
                os << k << ',' << j << ',' << buf << '\n';
            }
        }
    }
}

}  // namespace spc
