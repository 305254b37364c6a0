#include "heatbie/inverse.hpp"

#include <algorithm>
#include <cmath>

#include "heatbie/errors.hpp"

namespace heatbie {

double weighted_l2_norm(const BoundaryField& field) {
    const SpaceTimeGrid& grid = field.grid();
    double sum = 0.0;
    for (std::size_t j = 0; j < grid.n_time(); ++j)
        for (std::size_t i = 0; i < grid.n_space(); ++i) sum += grid.speed(i) * field(i, j) * field(i, j);
    return std::sqrt(grid.cell_weight() * sum);
}

ErrorMetrics error_metrics(const BoundaryField& candidate, const BoundaryField& reference) {
    require_same_grid(candidate, reference);
    const BoundaryField diff = candidate - reference;
    const double ref_norm = weighted_l2_norm(reference);
    if (!(ref_norm > 0.0)) throw ZeroReference("reference field has zero norm");
    ErrorMetrics m;
    m.l2_error = weighted_l2_norm(diff);
    m.max_error = diff.max_abs();
    m.relative_l2 = m.l2_error / ref_norm;
    return m;
}

namespace {

Vec2 unit_tangent(const SpaceTimeGrid& grid, std::size_t i) { return grid.tangent(i) / grid.speed(i); }

// −Σ_{k,l} h·h′·K(γ_i − γ_k, t_j − t_l, a_i, b_k)·g(k,l)·|γ′_k| where (a, b) are
// the normals (corrected) or the unit tangents (paper-literal).
BoundaryField hypersingular_quadrature(const BoundaryField& g, KernelContext ctx) {
    const SpaceTimeGrid& grid = g.grid();
    const std::size_t n = grid.n_space();
    const bool literal = ctx.mode == KernelMode::paper_literal;
    std::vector<Vec2> directions(n);
    for (std::size_t i = 0; i < n; ++i) directions[i] = literal ? unit_tangent(grid, i) : grid.normal(i);

    BoundaryField flux(g.grid_ptr());
    const double w = grid.cell_weight();
    for (std::size_t j = 0; j < grid.n_time(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t l = 0; l < j; ++l) {
                const double tau = grid.time(j) - grid.time(l);
                for (std::size_t k = 0; k < n; ++k) {
                    const double gk = g(k, l);
                    if (gk == 0.0) continue;
                    sum += hypersingular_kernel(grid.point(i) - grid.point(k), tau, directions[i],
                                                directions[k], ctx) *
                           gk * grid.speed(k);
                }
            }
            flux(i, j) = 0.0 - w * sum;  // no negative zeros in output
        }
    }
    return flux;
}

ReconstructionResult finish(BoundaryField flux, KernelContext ctx, const BoundaryField* reference) {
    ReconstructionResult result{std::move(flux), ctx.mode, std::nullopt};
    if (reference) result.metrics = error_metrics(result.flux, *reference);
    return result;
}

}  // namespace

ReconstructionResult reconstruct_flux_full(const BoundaryField& g, KernelContext ctx,
                                           const BoundaryField* reference) {
    if (g.grid().is_partial())
        throw InvalidParameter("reconstruct_flux_full needs a full-boundary grid (zeta_max = 1)");
    if (reference) require_same_grid(g, *reference);
    return finish(hypersingular_quadrature(g, ctx), ctx, reference);
}

ReconstructionResult reconstruct_flux_partial(const BoundaryField& g_on_arc, KernelContext ctx,
                                              const BoundaryField* reference) {
    if (!g_on_arc.grid().is_partial())
        throw InvalidParameter("reconstruct_flux_partial needs an arc grid (zeta_max < 1)");
    if (reference) require_same_grid(g_on_arc, *reference);
    return finish(hypersingular_quadrature(g_on_arc, ctx), ctx, reference);
}

InteriorSamples reconstruct_field(const BoundaryField& flux, const BoundaryField& g,
                                  const std::vector<SpaceTimePoint>& targets, KernelContext ctx) {
    return detail::evaluate_representation(flux, g, targets, ctx, true);
}

}  // namespace heatbie
