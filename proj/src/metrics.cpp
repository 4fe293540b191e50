#include "spcauchy/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace spc {

bool Region::contains(const Point& p) const {
    const Box& b = domain.box;
    for (std::size_t a = 0; a < b.dim; ++a) {
        const double from = b.lower[a] + lo * b.width(a);
        const double to = b.lower[a] + hi * b.width(a);
        if (p[a] < from - 1e-12 || p[a] > to + 1e-12) return false;
    }
    if (domain.shape == Shape::disc) {
        const double r = (hi - lo) * domain.radius;
        const double d2 = squared_distance(p, domain.center, 2);
        if (d2 > r * r * (1.0 + 1e-12)) return false;
    }
    return true;
}

double ErrorProfile::mean(const std::function<bool(const Point&)>& keep) const {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (flagged[i]) continue;
        if (keep && !keep(coordinates[i])) continue;
        sum += errors[i];
        ++count;
    }
    return count == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / static_cast<double>(count);
}

namespace {

void finish(ErrorProfile& prof, const std::vector<double>& num, const std::vector<double>& den) {
    double max_den = 0.0;
    for (double d : den) max_den = std::max(max_den, d);
    const double floor = max_den * 1e-24;  // slice norm below 1e-12 of the largest
    prof.errors.resize(num.size());
    prof.flagged.resize(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (den[i] <= floor || den[i] == 0.0) {
            prof.flagged[i] = 1;
            prof.errors[i] = std::numeric_limits<double>::quiet_NaN();
        } else {
            prof.flagged[i] = 0;
            prof.errors[i] = std::sqrt(num[i] / den[i]);
        }
    }
}

}  // namespace

ErrorProfile relative_error(const FieldSnapshotSeries& recon, const FieldSnapshotSeries& reference, Axis axis,
                            const ErrorWindow& window) {
    if (recon.node_count() != reference.node_count() || recon.times != reference.times ||
        recon.values.size() != reference.values.size()) {
        throw std::invalid_argument("relative_error: fields are not on the same grid");
    }
    const std::size_t nn = reference.node_count();
    const std::size_t nt = reference.time_count();

    std::vector<std::size_t> levels;
    std::vector<double> level_times;
    for (std::size_t k = 0; k < nt; ++k) {
        const double t = reference.times[k];
        if (t >= window.t_from - 1e-12 && t <= window.t_to + 1e-12) {
            levels.push_back(k);
            level_times.push_back(t);
        }
    }
    const auto wt = trapezoid_weights(level_times);

    ErrorProfile prof;
    prof.axis = axis;
    if (axis == Axis::space) {
        std::vector<double> num(nn, 0.0), den(nn, 0.0);
        for (std::size_t q = 0; q < levels.size(); ++q) {
            const std::size_t k = levels[q];
            for (std::size_t j = 0; j < nn; ++j) {
                const double r = reference.at(k, j);
                const double d = recon.at(k, j) - r;
                num[j] += wt[q] * d * d;
                den[j] += wt[q] * r * r;
            }
        }
        prof.coordinates = reference.nodes.points;
        finish(prof, num, den);
        return prof;
    }

    std::vector<double> num(nt, 0.0), den(nt, 0.0);
    for (std::size_t k = 0; k < nt; ++k) {
        for (std::size_t j = 0; j < nn; ++j) {
            if (window.space && !window.space(reference.nodes.points[j])) continue;
            const double w = reference.nodes.weights[j];
            const double r = reference.at(k, j);
            const double d = recon.at(k, j) - r;
            num[k] += w * d * d;
            den[k] += w * r * r;
        }
        prof.coordinates.push_back({reference.times[k], 0.0});
    }
    finish(prof, num, den);
    return prof;
}

void write_profile_csv(std::ostream& os, const ErrorProfile& profile, std::size_t dim) {
    const bool two = profile.axis == Axis::space && dim == 2;
    os << (two ? "axis,x1,x2,E\n" : "axis,coordinate,E\n");
    char buf[128];
    const std::string ax = to_string(profile.axis);
    for (std::size_t i = 0; i < profile.errors.size(); ++i) {
        const auto& c = profile.coordinates[i];
        if (two) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,", c[0], c[1]);
        } else {
            std::snprintf(buf, sizeof buf, "%.17g,", c[0]);
        }
        os << ax << ',' << buf;
        if (profile.flagged[i]) {
            os << "nan\n";
        } else {
            std::snprintf(buf, sizeof buf, "%.17g\n", profile.errors[i]);
            os << buf;
        }
    }
}

std::string to_string(Axis axis) { return axis == Axis::space ? "space" : "time"; }

}  // namespace spc
