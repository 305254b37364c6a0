#include <benchmark/benchmark.h>

#include "heatbie/inverse.hpp"
#include "heatbie/potentials.hpp"
#include "heatbie/synthetic.hpp"

using namespace heatbie;

namespace {

GridPtr circle_grid(std::size_t n, std::size_t m) { return make_grid(BoundaryCurve::circle(1.0), n, m, 10.0, 1.0); }

void BM_hypersingular_kernel(benchmark::State& state) {
    const KernelContext ctx{static_cast<KernelMode>(state.range(0))};
    const Vec2 d{0.3, -0.7}, nx{0.6, 0.8}, ny{-0.8, 0.6};
    double tau = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hypersingular_kernel(d, tau, nx, ny, ctx));
        tau += 1e-9;
    }
}
BENCHMARK(BM_hypersingular_kernel)->Arg(0)->Arg(1);

void BM_single_layer_matrix_free(benchmark::State& state) {
    const auto grid = circle_grid(state.range(0), state.range(0));
    const BoundaryField phi(grid, std::vector<double>(grid->size(), 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(single_layer_apply(phi));
}
BENCHMARK(BM_single_layer_matrix_free)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_single_layer_blocks(benchmark::State& state) {
    const auto grid = circle_grid(state.range(0), state.range(0));
    const TimeBlockOperator op(grid, LayerOperator::single_layer);
    const BoundaryField phi(grid, std::vector<double>(grid->size(), 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(op.apply(phi));
}
BENCHMARK(BM_single_layer_blocks)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_reconstruct_full(benchmark::State& state) {
    const auto grid = circle_grid(50, 100);
    const auto g = paper_example_dirichlet(grid);
    const KernelContext ctx{static_cast<KernelMode>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct_flux_full(g, ctx));
}
BENCHMARK(BM_reconstruct_full)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_second_kind_solve(benchmark::State& state) {
    const auto grid = circle_grid(state.range(0), state.range(0));
    const BoundaryField phi(grid, std::vector<double>(grid->size(), 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_second_kind(phi));
}
BENCHMARK(BM_second_kind_solve)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
