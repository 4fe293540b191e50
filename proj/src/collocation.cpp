#include "spcauchy/collocation.hpp"

#include <stdexcept>

namespace spc {

CollocationSystem assemble(const CauchyData& data, std::span<const SourcePoint> sources, std::size_t dim) {
    if (data.empty()) throw std::invalid_argument("assemble: no observations");
    if (sources.empty()) throw std::invalid_argument("assemble: no source points");
    CollocationSystem sys;
    const auto rows = static_cast<Eigen::Index>(data.size());
    const auto cols = static_cast<Eigen::Index>(sources.size());
    sys.A.resize(rows, cols);
    sys.b.resize(rows);
    sys.row_meta.reserve(data.size());
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Observation& o = data.rows[static_cast<std::size_t>(i)];
        for (Eigen::Index l = 0; l < cols; ++l) {
            const SourcePoint& s = sources[static_cast<std::size_t>(l)];
            sys.A(i, l) = heat_kernel(o.location, o.time, s.xi, s.tau, dim);
        }
        sys.b(i) = o.value;
        sys.row_meta.push_back({o.location, o.time, o.time_index, o.node, o.role});
    }
    return sys;
}

CauchyData lateral_rows(const CauchyData& data, std::size_t stride, bool include_initial) {
    if (stride < 1) throw std::invalid_argument("lateral_rows: stride must be positive");
    CauchyData out;
    out.dim = data.dim;
    for (const auto& r : data.rows) {
        if (!include_initial && r.time_index == 0) continue;
        if (r.time_index % stride != 0) continue;
        out.rows.push_back(r);
    }
    return out;
}

}  // namespace spc
