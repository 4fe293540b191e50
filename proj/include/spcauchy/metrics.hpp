#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "spcauchy/field.hpp"

namespace spc {

enum class Axis { space, time };

/// Sub-region of a domain: the box lower + [lo, hi] * width per axis, further limited
/// to radius (hi - lo) * R around the center for discs.
struct Region {
    Domain domain;
    double lo = 0.0;
    double hi = 1.0;

    [[nodiscard]] bool contains(const Point& p) const;
};

/// Integration windows for the axis that is normed over.
struct ErrorWindow {
    double t_from = -std::numeric_limits<double>::infinity();
    double t_to = std::numeric_limits<double>::infinity();
    std::function<bool(const Point&)> space;  // empty = every node
};

/// E per coordinate along `axis`: the discrete L2 norm of (recon - reference) over the
/// other axis divided by that of the reference. Space profiles are indexed by node,
/// time profiles by time level with the time stored in coordinates[k][0].
struct ErrorProfile {
    Axis axis = Axis::space;
    std::vector<Point> coordinates;
    std::vector<double> errors;
    std::vector<std::uint8_t> flagged;  // reference slice of zero norm; error not defined

    /// Mean of the unflagged errors whose coordinate satisfies `keep` (NaN if none).
    [[nodiscard]] double mean(const std::function<bool(const Point&)>& keep = {}) const;
};

/// Trapezoid weights in time; the field's node weights in space.
/// Throws std::invalid_argument if the two fields do not share nodes and times.
ErrorProfile relative_error(const FieldSnapshotSeries& recon, const FieldSnapshotSeries& reference, Axis axis,
                            const ErrorWindow& window = {});

/// Space profiles: axis,coordinate,E (1D) or axis,x1,x2,E (2D). Time profiles: axis,coordinate,E.
/// Flagged entries are written as "nan".
void write_profile_csv(std::ostream& os, const ErrorProfile& profile, std::size_t dim);

std::string to_string(Axis axis);

}  // namespace spc
