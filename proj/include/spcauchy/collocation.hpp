#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "spcauchy/cauchy_data.hpp"
#include "spcauchy/kernel.hpp"

namespace spc {

struct RowTag {
    Point location{0.0, 0.0};
    double time = 0.0;
    std::size_t time_index = 0;
    std::size_t node = 0;
    ObservationRole role = ObservationRole::boundary;
};

/// Linear system A lambda = b with A[i][l] = heat_kernel(x_i, t_i, xi_l, tau_l).
struct CollocationSystem {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    std::vector<RowTag> row_meta;
};

/// Throws std::invalid_argument on empty data/sources and std::domain_error when an
/// observation is not strictly later than every source.
CollocationSystem assemble(const CauchyData& data, std::span<const SourcePoint> sources, std::size_t dim);

/// Rows with 0 < t (the lateral part) and time_index % stride == 0, unless `include_initial`.
CauchyData lateral_rows(const CauchyData& data, std::size_t stride = 1, bool include_initial = false);

}  // namespace spc
