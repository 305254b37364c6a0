#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heatbie/errors.hpp"
#include "heatbie/inverse.hpp"
#include "heatbie/synthetic.hpp"
#include "support/test_support.hpp"

using namespace heatbie;
using namespace heatbie::testing;
using doctest::Approx;

namespace {

constexpr KernelContext corrected{KernelMode::corrected};
constexpr KernelContext literal{KernelMode::paper_literal};

// Full grid of n nodes and the arc grid covering its first m nodes.
struct MatchedGrids {
    GridPtr full;
    GridPtr arc;
};

MatchedGrids matched(std::size_t n, std::size_t m, std::size_t n_time, double final_time) {
    const auto c = BoundaryCurve::circle(1.0);
    return {make_grid(c, n, n_time, final_time, 1.0),
            make_grid(c, m, n_time, final_time, static_cast<double>(m) / static_cast<double>(n))};
}

}  // namespace

TEST_SUITE("inverse") {

TEST_CASE("zero data gives zero flux") {
    const auto grid = unit_circle_grid(6, 5);
    for (auto ctx : {corrected, literal}) CHECK(reconstruct_flux_full(BoundaryField(grid), ctx).flux.max_abs() == 0.0);
    const auto arc = unit_circle_grid(6, 5, 10.0, 0.01);
    for (auto ctx : {corrected, literal}) CHECK(reconstruct_flux_partial(BoundaryField(arc), ctx).flux.max_abs() == 0.0);
}

TEST_CASE("corrected reconstruction applies the hypersingular operator to the data") {
    const auto grid = unit_circle_grid(7, 6);
    const auto g = random_field(grid, 21);
    const auto flux = reconstruct_flux_full(g, corrected).flux;
    CHECK(relative_max_diff(flux, hypersingular_apply(g, corrected)) <= 1e-12);
}

TEST_CASE("paper-literal reconstruction matches the published scheme") {
    SUBCASE("single impulse on a 4x2 grid") {
        const auto grid = unit_circle_grid(4, 2);
        const auto g = impulse(grid, 1, 0, 0.75);
        const auto flux = reconstruct_flux_full(g, literal).flux;
        const auto oracle = literal_flux_scheme(1.0, 4, 2, 10.0, 1.0, g.values());
        for (std::size_t n = 0; n < oracle.size(); ++n)
            CHECK(flux.values()[n] == Approx(oracle[n]).epsilon(1e-12));
    }
    SUBCASE("random data, N = N' = 8") {
        const auto grid = unit_circle_grid(8, 8);
        const auto g = random_field(grid, 22);
        const BoundaryField oracle(grid, literal_flux_scheme(1.0, 8, 8, 10.0, 1.0, g.values()));
        CHECK(relative_max_diff(reconstruct_flux_full(g, literal).flux, oracle) <= 1e-12);
    }
    SUBCASE("partial arc, random data") {
        const auto arc = make_grid(BoundaryCurve::circle(1.0), 6, 8, 10.0, 0.01);
        const auto g = random_field(arc, 23);
        const BoundaryField oracle(arc, literal_flux_scheme(1.0, 6, 8, 10.0, 0.01, g.values()));
        CHECK(relative_max_diff(reconstruct_flux_partial(g, literal).flux, oracle) <= 1e-12);
    }
}

TEST_CASE("partial reconstruction equals restricted full reconstruction") {
    for (auto ctx : {corrected, literal}) {
        const auto grids = matched(40, 4, 10, 10.0);
        const auto g_arc = random_field(grids.arc, 24);
        BoundaryField g_full(grids.full);
        for (std::size_t j = 0; j < 10; ++j)
            for (std::size_t i = 0; i < 4; ++i) g_full(i, j) = g_arc(i, j);
        const auto full = reconstruct_flux_full(g_full, ctx).flux;
        const auto part = reconstruct_flux_partial(g_arc, ctx).flux;
        double diff = 0.0, scale = 0.0;
        for (std::size_t j = 0; j < 10; ++j) {
            for (std::size_t i = 0; i < 4; ++i) {
                diff = std::max(diff, std::abs(full(i, j) - part(i, j)));
                scale = std::max(scale, std::abs(full(i, j)));
            }
        }
        CHECK(diff <= 1e-12 * scale);
    }
}

TEST_CASE("paper partial configuration runs with finite output") {
    const auto arc = make_grid(BoundaryCurve::circle(1.0), 50, 100, 10.0, 0.01);
    const auto g = paper_example_dirichlet(arc);
    for (auto ctx : {corrected, literal}) {
        const auto result = reconstruct_flux_partial(g, ctx);
        CHECK(result.flux.size() == 5000);
        CHECK(result.flux.all_finite());
    }
}

TEST_CASE("full/partial variants reject the wrong grid") {
    const auto full = unit_circle_grid(4, 2);
    const auto arc = unit_circle_grid(4, 2, 10.0, 0.5);
    CHECK_THROWS_AS(reconstruct_flux_full(BoundaryField(arc)), InvalidParameter);
    CHECK_THROWS_AS(reconstruct_flux_partial(BoundaryField(full)), InvalidParameter);
    const auto other = unit_circle_grid(5, 2);
    const BoundaryField ref(other);
    CHECK_THROWS_AS(reconstruct_flux_full(BoundaryField(full), corrected, &ref), GridMismatch);
}

TEST_CASE("linearity, causality and rotational equivariance of the reconstruction") {
    const auto grid = unit_circle_grid(8, 6);
    const auto a = random_field(grid, 25), b = random_field(grid, 26);
    for (auto ctx : {corrected, literal}) {
        const auto fa = reconstruct_flux_full(a, ctx).flux;
        const auto fb = reconstruct_flux_full(b, ctx).flux;
        CHECK(relative_max_diff(reconstruct_flux_full(3.0 * a - b, ctx).flux, 3.0 * fa - fb) <= 1e-12);

        for (std::size_t j = 0; j < 6; ++j) {
            auto p = a;
            for (std::size_t l = j; l < 6; ++l)
                for (std::size_t k = 0; k < 8; ++k) p(k, l) = -7.0;
            const auto fp = reconstruct_flux_full(p, ctx).flux;
            for (std::size_t i = 0; i < 8; ++i) CHECK(fp(i, j) == fa(i, j));
        }

        for (std::size_t m : {1u, 5u})
            CHECK(relative_max_diff(reconstruct_flux_full(shift_space(a, m), ctx).flux, shift_space(fa, m)) <= 1e-12);
    }
}

TEST_CASE("error metrics") {
    const auto grid = unit_circle_grid(4, 2);
    const auto ref = random_field(grid, 27);
    const auto same = error_metrics(ref, ref);
    CHECK(same.l2_error == 0.0);
    CHECK(same.max_error == 0.0);
    CHECK(same.relative_l2 == 0.0);

    BoundaryField shifted = ref;
    for (double& v : shifted.values()) v += 1.0;
    const auto m = error_metrics(shifted, ref);
    CHECK(m.max_error == Approx(1.0).epsilon(1e-15));
    CHECK(m.l2_error == Approx(7.92665459521202202669).epsilon(1e-14));  // sqrt(4·2·0.25·5·2π)
    CHECK(m.relative_l2 == Approx(m.l2_error / weighted_l2_norm(ref)).epsilon(1e-15));

    CHECK_THROWS_AS(error_metrics(ref, BoundaryField(grid)), ZeroReference);
    CHECK_THROWS_AS(error_metrics(ref, random_field(unit_circle_grid(5, 2), 1)), GridMismatch);
}

TEST_CASE("reconstruction result carries metrics only with a reference") {
    const auto grid = unit_circle_grid(8, 8);
    const PointSource src({2.0, 0.0}, grid->curve());
    const auto g = point_source_trace(src, grid);
    const auto phi = point_source_flux(src, grid);
    CHECK_FALSE(reconstruct_flux_full(g).metrics.has_value());
    const auto with = reconstruct_flux_full(g, corrected, &phi);
    REQUIRE(with.metrics.has_value());
    CHECK(std::isfinite(with.metrics->relative_l2));
    CHECK(with.mode == KernelMode::corrected);
}

TEST_CASE("field reconstruction") {
    const auto grid = unit_circle_grid(6, 4);
    const std::vector<SpaceTimePoint> targets{{{0.0, 0.0}, 5.0}, {grid->point(2), 7.5}};
    const auto zero = reconstruct_field(BoundaryField(grid), BoundaryField(grid), targets);
    CHECK(zero[0].value == 0.0);
    CHECK(zero[1].value == 0.0);
    CHECK_FALSE(zero[0].on_boundary);
    CHECK(zero[1].on_boundary);

    const auto one = reconstruct_field(impulse(grid, 4, 1, 2.0), BoundaryField(grid), targets);
    const double expected = grid->cell_weight() * grid->speed(4) * 2.0 *
                            heat_kernel(Vec2{0.0, 0.0} - grid->point(4), 5.0 - grid->time(1));
    CHECK(one[0].value == Approx(expected).epsilon(1e-14));

    CHECK_THROWS_AS(reconstruct_field(BoundaryField(grid), BoundaryField(grid), {{{1.5, 0.0}, 5.0}}), OutsideDomain);
}

TEST_CASE("field from oracle Cauchy data converges at the centre") {
    const double exact = 0.0130305046413710814730;
    double previous = 1.0;
    for (auto [n, m] : {std::pair{16, 32}, {32, 64}, {64, 128}}) {
        const auto grid = unit_circle_grid(n, m);
        const PointSource src({2.0, 0.0}, grid->curve());
        const auto u = reconstruct_field(point_source_flux(src, grid), point_source_trace(src, grid), {{{0.0, 0.0}, 5.0}});
        const double err = std::abs(u[0].value - exact);
        CHECK(err < previous);
        previous = err;
    }
}

}
