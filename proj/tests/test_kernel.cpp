#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spcauchy/grid.hpp"
#include "spcauchy/kernel.hpp"
#include "spcauchy/random.hpp"

using namespace spc;

namespace {

constexpr double pi = std::numbers::pi;

// Independent closed form of the Gaussian kernel.
double gaussian(double r2, double s, std::size_t d) {
    return std::pow(4.0 * pi * s, -0.5 * static_cast<double>(d)) * std::exp(-r2 / (4.0 * s));
}

}  // namespace

TEST_CASE("heat kernel at the source location after unit time") {
    CHECK(heat_kernel({0.3, 0.0}, 0.5, {0.3, 0.0}, -0.5, 1) == doctest::Approx(0.2820947918).epsilon(1e-10));
    CHECK(heat_kernel({0.3, -0.2}, 1.0, {0.3, -0.2}, 0.0, 2) == doctest::Approx(0.0795774715).epsilon(1e-10));
}

TEST_CASE("heat kernel matches the closed form off the source") {
    CHECK(heat_kernel({1.0, 0.0}, 0.3, {-0.5, 0.0}, -0.1, 1) == doctest::Approx(gaussian(2.25, 0.4, 1)).epsilon(1e-14));
    CHECK(heat_kernel({1.0, 2.0}, 0.3, {-0.5, 1.0}, -0.1, 2) == doctest::Approx(gaussian(3.25, 0.4, 2)).epsilon(1e-14));
}

TEST_CASE("heat kernel decays monotonically with distance") {
    double prev = heat_kernel({0.0, 0.0}, 1.0, {0.0, 0.0}, 0.0, 1);
    for (int i = 1; i <= 60; ++i) {
        const double v = heat_kernel({0.25 * i, 0.0}, 1.0, {0.0, 0.0}, 0.0, 1);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 1e-20);
}

TEST_CASE("heat kernel rejects evaluation at or below the source time") {
    CHECK_THROWS_AS(heat_kernel({0.0, 0.0}, 0.0, {0.0, 0.0}, 0.0, 1), std::domain_error);
    CHECK_THROWS_AS(heat_kernel({0.0, 0.0}, -0.2, {0.0, 0.0}, -0.1, 2), std::domain_error);
}

TEST_CASE("heat kernel solves the heat equation: central-difference residual is second order") {
    Rng rng(17);
    for (std::size_t dim : {std::size_t{1}, std::size_t{2}}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Point x{rng.uniform_pm1(), dim == 2 ? rng.uniform_pm1() : 0.0};
            const double t = 0.2 + 0.8 * rng.uniform01();
            const Point xi{0.0, 0.0};
            const double tau = -0.1;
            auto residual = [&](double eps) {
                auto phi = [&](Point p, double s) { return heat_kernel(p, s, xi, tau, dim); };
                const double dt = (phi(x, t + eps) - phi(x, t - eps)) / (2.0 * eps);
                double lap = 0.0;
                for (std::size_t a = 0; a < dim; ++a) {
                    Point up = x, dn = x;
                    up[a] += eps;
                    dn[a] -= eps;
                    lap += (phi(up, t) - 2.0 * phi(x, t) + phi(dn, t)) / (eps * eps);
                }
                return std::abs(dt - lap);
            };
            const double r1 = residual(1e-2), r2 = residual(5e-3);
            CHECK(r1 / r2 >= 3.5);
        }
    }
}

TEST_CASE("five sources on [0,1] with R = 3.5 span [-R, R + 1]") {
    const auto s = place_sources(SourceConfig{3.5, -0.1, 5}, Box{1, {0.0, 0.0}, {1.0, 0.0}}, 1);
    REQUIRE(s.size() == 5);
    const double expected[] = {-3.5, -1.5, 0.5, 2.5, 4.5};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(s[i].xi[0] == doctest::Approx(expected[i]));
        CHECK(s[i].tau == -0.1);
    }
}

TEST_CASE("a single source sits at the box center") {
    const auto s1 = place_sources(SourceConfig{3.5, -0.2, 1}, Box{1, {0.0, 0.0}, {1.0, 0.0}}, 1);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].xi[0] == doctest::Approx(0.5));
    CHECK(s1[0].tau == -0.2);
    const auto s2 = place_sources(SourceConfig{2.0, -0.1, 1}, Box{2, {-1.0, 0.0}, {1.0, 4.0}}, 2);
    CHECK(s2[0].xi[0] == doctest::Approx(0.0));
    CHECK(s2[0].xi[1] == doctest::Approx(2.0));
}

TEST_CASE("2D sources form a k x k grid over the expanded box, first axis fastest") {
    const auto s = place_sources(SourceConfig{1.0, -0.1, 16}, Box{2, {-1.0, -1.0}, {1.0, 1.0}}, 2);
    REQUIRE(s.size() == 16);
    const double axis[] = {-2.0, -2.0 / 3.0, 2.0 / 3.0, 2.0};
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(s[i + 4 * j].xi[0] == doctest::Approx(axis[i]));
            CHECK(s[i + 4 * j].xi[1] == doctest::Approx(axis[j]));
        }
    }
}

TEST_CASE("source configuration is validated") {
    const Box unit{1, {0.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(place_sources(SourceConfig{3.5, 0.0, 5}, unit, 1), std::invalid_argument);
    CHECK_THROWS_AS(place_sources(SourceConfig{3.5, 0.1, 5}, unit, 1), std::invalid_argument);
    CHECK_THROWS_AS(place_sources(SourceConfig{3.5, -0.1, 0}, unit, 1), std::invalid_argument);
    CHECK_THROWS_AS(place_sources(SourceConfig{-1.0, -0.1, 5}, unit, 1), std::invalid_argument);
    CHECK_THROWS_AS(place_sources(SourceConfig{3.5, -0.1, 15}, Box{2, {0.0, 0.0}, {1.0, 1.0}}, 2), std::invalid_argument);
    CHECK(place_sources(SourceConfig{3.5, -0.1, 7}, unit, 1) == place_sources(SourceConfig{3.5, -0.1, 7}, unit, 1));
}

TEST_CASE("zero coefficients evaluate to zero") {
    KernelExpansion e;
    e.dim = 1;
    e.sources = place_sources(SourceConfig{3.5, -0.1, 10}, Box{1, {0.0, 0.0}, {1.0, 0.0}}, 1);
    e.coefficients.assign(10, 0.0);
    const std::vector<SpaceTimePoint> pts{{{0.1, 0.0}, 0.0}, {{0.9, 0.0}, 1.0}};
    for (double v : evaluate_expansion(e, pts)) CHECK(v == 0.0);
}

TEST_CASE("single unit source reproduces the kernel") {
    KernelExpansion e;
    e.dim = 2;
    e.sources = {SourcePoint{{0.2, -0.3}, -0.1}};
    e.coefficients = {1.0};
    const std::vector<SpaceTimePoint> pts{{{0.0, 0.0}, 0.0}, {{1.0, 1.0}, 0.5}, {{-0.5, 0.7}, 1.0}};
    const auto v = evaluate_expansion(e, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(v[i] == heat_kernel(pts[i].x, pts[i].t, e.sources[0].xi, e.sources[0].tau, 2));
    }
}

TEST_CASE("two-source expansion is the superposition of single-source columns") {
    const std::vector<SourcePoint> src{SourcePoint{{-1.0, 0.0}, -0.1}, SourcePoint{{2.0, 0.0}, -0.3}};
    const double a = 1.75, b = -0.4;
    std::vector<SpaceTimePoint> pts;
    for (int i = 0; i <= 10; ++i) pts.push_back({{0.1 * i, 0.0}, 0.05 * i});
    KernelExpansion e1{1, {src[0]}, {1.0}}, e2{1, {src[1]}, {1.0}}, e{1, src, {a, b}};
    const auto c1 = evaluate_expansion(e1, pts), c2 = evaluate_expansion(e2, pts), v = evaluate_expansion(e, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(v[i] == doctest::Approx(a * c1[i] + b * c2[i]).epsilon(1e-15));
    CHECK(e.max_source_time() == -0.1);
}

TEST_CASE("expansion rejects evaluation at or below the source layer") {
    KernelExpansion e{1, {SourcePoint{{0.0, 0.0}, -0.1}}, {1.0}};
    const std::vector<SpaceTimePoint> pts{{{0.0, 0.0}, -0.1}};
    CHECK_THROWS_AS(evaluate_expansion(e, pts), std::domain_error);
}

TEST_CASE("node evaluation agrees with direct evaluation on box and disc nodes") {
    Rng rng(3);
    for (int shape = 0; shape < 3; ++shape) {
        Domain domain = shape == 0   ? Domain::interval(0.0, 1.0)
                        : shape == 1 ? Domain::rectangle({-1.0, -1.0}, {1.0, 1.0})
                                     : Domain::disc({0.0, 0.0}, 1.0, 12);
        const std::size_t dim = domain.dim();
        const GridSpec grid = make_grid(6, 100, domain.box);
        const NodeSet nodes = make_nodes(grid, domain);
        KernelExpansion e;
        e.dim = dim;
        e.sources = place_sources(SourceConfig{2.0, -0.1, dim == 1 ? 9u : 25u}, domain.box, dim);
        for (std::size_t l = 0; l < e.sources.size(); ++l) e.coefficients.push_back(rng.uniform_pm1());
        const std::vector<double> times{0.0, 0.37, 1.0};
        const auto fast = evaluate_on_nodes(e, nodes, times);
        std::vector<SpaceTimePoint> pts;
        for (double t : times) {
            for (const auto& x : nodes.points) pts.push_back({x, t});
        }
        const auto direct = evaluate_expansion(e, pts);
        REQUIRE(fast.size() == direct.size());
        double scale = 0.0, diff = 0.0;
        for (std::size_t i = 0; i < fast.size(); ++i) {
            scale = std::max(scale, std::abs(direct[i]));
            diff = std::max(diff, std::abs(fast[i] - direct[i]));
        }
        CHECK(diff <= 1e-13 * scale);
    }
}

TEST_CASE("mixed source times fall back to direct evaluation") {
    const Domain domain = Domain::interval(0.0, 1.0);
    const GridSpec grid = make_grid(4, 32, domain.box);
    const NodeSet nodes = make_nodes(grid, domain);
    KernelExpansion e{1, {SourcePoint{{-1.0, 0.0}, -0.1}, SourcePoint{{2.0, 0.0}, -0.3}}, {1.0, 2.0}};
    const std::vector<double> times{0.5};
    const auto v = evaluate_on_nodes(e, nodes, times);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double expected = gaussian(std::pow(nodes.points[j][0] + 1.0, 2), 0.6, 1) +
                                2.0 * gaussian(std::pow(nodes.points[j][0] - 2.0, 2), 0.8, 1);
        CHECK(v[j] == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("source layout names round-trip") {
    CHECK(source_layout_from_string(to_string(SourceLayout::uniform_grid)) == SourceLayout::uniform_grid);
    CHECK_THROWS_AS(source_layout_from_string("random"), std::invalid_argument);
}
