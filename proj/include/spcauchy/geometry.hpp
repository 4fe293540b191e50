#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spc {

/// Spatial point. Only the first `dim` coordinates are meaningful; the rest are zero.
using Point = std::array<double, 2>;

/// Axis-aligned box in one or two dimensions.
struct Box {
    std::size_t dim = 1;
    Point lower{0.0, 0.0};
    Point upper{1.0, 0.0};

    [[nodiscard]] double width(std::size_t axis) const { return upper[axis] - lower[axis]; }
    [[nodiscard]] Point center() const;
    [[nodiscard]] bool degenerate() const;
    [[nodiscard]] Box expanded(double margin) const;
};

enum class Shape { box, disc };

/// Spatial domain G: a box (1D interval or 2D rectangle) or a 2D disc.
struct Domain {
    Shape shape = Shape::box;
    Box box;                 // the box itself, or the bounding box of the disc
    Point center{0.0, 0.0};  // disc only
    double radius = 0.0;     // disc only
    std::size_t n_theta = 48;  // angular nodes of a polar grid (disc only)

    static Domain interval(double lo, double hi);
    static Domain rectangle(Point lower, Point upper);
    static Domain disc(Point center, double radius, std::size_t n_theta = 48);

    [[nodiscard]] std::size_t dim() const { return box.dim; }
    [[nodiscard]] const Box& bounding_box() const { return box; }
};

double squared_distance(const Point& a, const Point& b, std::size_t dim);

std::string to_string(Shape shape);
Shape shape_from_string(const std::string& s);

}  // namespace spc
