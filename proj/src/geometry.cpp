#include "spcauchy/geometry.hpp"

#include <stdexcept>

namespace spc {

Point Box::center() const {
    Point c{0.0, 0.0};
    for (std::size_t a = 0; a < dim; ++a) c[a] = 0.5 * (lower[a] + upper[a]);
    return c;
}

bool Box::degenerate() const {
    if (dim < 1 || dim > 2) return true;
    for (std::size_t a = 0; a < dim; ++a) {
        if (!(upper[a] > lower[a])) return true;
    }
    return false;
}

Box Box::expanded(double margin) const {
    Box b = *this;
    for (std::size_t a = 0; a < dim; ++a) {
        b.lower[a] -= margin;
        b.upper[a] += margin;
    }
    return b;
}

Domain Domain::interval(double lo, double hi) {
    Domain d;
    d.shape = Shape::box;
    d.box = Box{1, {lo, 0.0}, {hi, 0.0}};
    return d;
}

Domain Domain::rectangle(Point lower, Point upper) {
    Domain d;
    d.shape = Shape::box;
    d.box = Box{2, lower, upper};
    return d;
}

Domain Domain::disc(Point center, double radius, std::size_t n_theta) {
    if (!(radius > 0.0)) throw std::invalid_argument("disc radius must be positive");
    if (n_theta < 3) throw std::invalid_argument("disc needs at least 3 angular nodes");
    Domain d;
    d.shape = Shape::disc;
    d.center = center;
    d.radius = radius;
    d.n_theta = n_theta;
    d.box = Box{2, {center[0] - radius, center[1] - radius}, {center[0] + radius, center[1] + radius}};
    return d;
}

double squared_distance(const Point& a, const Point& b, std::size_t dim) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

std::string to_string(Shape shape) { return shape == Shape::box ? "box" : "disc"; }

Shape shape_from_string(const std::string& s) {
    if (s == "box") return Shape::box;
    if (s == "disc") return Shape::disc;
    throw std::invalid_argument("unknown domain shape '" + s + "'");
}

}  // namespace spc
