#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heatbie/errors.hpp"
#include "heatbie/inverse.hpp"
#include "heatbie/potentials.hpp"
#include "heatbie/synthetic.hpp"
#include "support/test_support.hpp"

using namespace heatbie;
using namespace heatbie::testing;
using doctest::Approx;

TEST_SUITE("synthetic") {

TEST_CASE("point source validation") {
    const auto c = BoundaryCurve::circle(1.0);
    CHECK_NOTHROW(PointSource({2.0, 0.0}, c));
    CHECK_NOTHROW(PointSource({0.0, -1.5}, c));
    CHECK_THROWS_AS(PointSource({0.0, 0.0}, c), SourceInsideDomain);
    CHECK_THROWS_AS(PointSource({1.3, 0.0}, c), SourceInsideDomain);
}

TEST_CASE("point source trace and flux values") {
    // Grid whose first node is γ(0) = (1,0) at t = 1.
    const auto grid = unit_circle_grid(4, 10, 10.0);
    const PointSource src({2.0, 0.0}, grid->curve());
    const auto g = point_source_trace(src, grid);
    const auto phi = point_source_flux(src, grid);
    // Node i = 3 is ζ = 1 ≡ 0.
    CHECK(g(3, 0) == Approx(0.0619749971548264830964).epsilon(1e-14));   // e^{-1/4}/(4π)
    CHECK(phi(3, 0) == Approx(0.0309874985774132415482).epsilon(1e-14)); // e^{-1/4}/(8π)
    // Node ζ = 0.25 at (0,1): γ − x0 = (−2, 1), ν = (0, 1).
    const Vec2 d{-2.0, 1.0};
    CHECK(phi(0, 2) == Approx(-d.y / (2 * 3.0) * heat_kernel(d, 3.0)).epsilon(1e-12));
    CHECK(src.flux({0.0, 1.0}, {1.0, 0.0}, -1.0) == 0.0);
    CHECK(src.temperature({1.0, 0.0}, 0.0) == 0.0);
}

TEST_CASE("trace is a pointwise evaluation bounded by the source distance") {
    const auto grid = unit_circle_grid(16, 1000, 10.0);
    const PointSource src({2.0, 0.0}, grid->curve());
    const auto g = point_source_trace(src, grid);
    const double dist = grid->curve().distance(src.location());
    for (std::size_t j = 0; grid->time(j) <= 0.01 + 1e-15; ++j) {
        const double t = grid->time(j);
        const double bound = std::exp(-dist * dist / (4 * t)) / (4 * std::numbers::pi * t);
        for (std::size_t i = 0; i < 16; ++i) {
            CHECK(g(i, j) <= bound * (1 + 1e-12));
            CHECK(g(i, j) == src.temperature(grid->point(i), t));
        }
    }
}

TEST_CASE("source must be valid for the grid's curve") {
    const PointSource src({2.0, 0.0}, BoundaryCurve::circle(1.0));
    const auto big = make_grid(BoundaryCurve::circle(1.8), 8, 4, 1.0);
    CHECK_THROWS_AS(point_source_trace(src, big), SourceInsideDomain);
    CHECK_THROWS_AS(point_source_flux(src, big), SourceInsideDomain);
}

TEST_CASE("paper example Dirichlet data") {
    const auto grid = unit_circle_grid(8, 3, std::numbers::pi);  // t = π/3, 2π/3, π
    const auto g = paper_example_dirichlet(grid);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(g(i, 0) == Approx(-2.0).epsilon(1e-14));
        CHECK(g(i, 1) == Approx(2.0).epsilon(1e-14));
    }
    // t → 0 limit via a fine time grid; radius 0.5 gives 2|x| = 1.
    const auto half = make_grid(BoundaryCurve::circle(0.5), 4, 1, 1e-12);
    CHECK(paper_example_dirichlet(half)(2, 0) == Approx(1.0).epsilon(1e-12));
    const auto unit = unit_circle_grid(4, 1, 1e-12);
    CHECK(paper_example_dirichlet(unit)(1, 0) == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("second-kind solve") {
    const auto grid = unit_circle_grid(8, 8);
    CHECK(solve_second_kind(BoundaryField(grid)).max_abs() == 0.0);

    const auto phi = random_field(grid, 11);
    const auto density = solve_second_kind(phi);
    const auto s_phi = single_layer_apply(phi);
    // First level has no history.
    for (std::size_t i = 0; i < 8; ++i) CHECK(density(i, 0) == 2.0 * s_phi(i, 0));

    // Residual of the assembled discrete system, evaluated matrix-free.
    const auto residual = 0.5 * density + double_layer_apply(density) - s_phi;
    CHECK(residual.max_abs() <= 1e-10);
}

TEST_CASE("second-kind solve is causal and linear") {
    const auto grid = unit_circle_grid(6, 7);
    const auto phi = random_field(grid, 12);
    const auto full = solve_second_kind(phi);
    for (std::size_t j = 0; j < 7; ++j) {
        auto truncated = phi;
        for (std::size_t l = j + 1; l < 7; ++l)
            for (std::size_t k = 0; k < 6; ++k) truncated(k, l) = 0.0;
        const auto part = solve_second_kind(truncated);
        for (std::size_t l = 0; l <= j; ++l)
            for (std::size_t k = 0; k < 6; ++k) CHECK(part(k, l) == full(k, l));
    }
    const auto other = random_field(grid, 13);
    const auto lhs = solve_second_kind(2.0 * phi - 0.5 * other);
    const auto rhs = 2.0 * full - 0.5 * solve_second_kind(other);
    CHECK(relative_max_diff(lhs, rhs) <= 1e-12);
}

TEST_CASE("Dirichlet Cauchy residual of point-source data decreases under refinement") {
    // The max norm of r₁ is pinned by the first time level, where the
    // retarded sums are empty and r₁ = −g/2 exactly; the refinement trend is
    // therefore measured in the curve-weighted L² norm.
    double previous = 0.0;
    bool first = true;
    for (std::size_t n : {16u, 32u, 64u}) {
        const auto grid = unit_circle_grid(n, n);
        const PointSource src({2.0, 0.0}, grid->curve());
        const auto g = point_source_trace(src, grid);
        const auto phi = point_source_flux(src, grid);
        const auto fields = cauchy_residual_fields(phi, g, g, phi);
        for (std::size_t i = 0; i < n; ++i) CHECK(fields.dirichlet(i, 0) == Approx(-0.5 * g(i, 0)).epsilon(1e-14));
        const double r1 = weighted_l2_norm(fields.dirichlet);
        MESSAGE("N=N'=" << n << " |r1|_L2=" << r1 << " |r1|_max=" << fields.dirichlet.max_abs()
                        << " |r2|_max=" << fields.neumann.max_abs());
        if (!first) CHECK(r1 <= 1.2 * previous);
        if (!first) CHECK(r1 < previous);
        previous = r1;
        first = false;
    }
}

}
