#include "heatbie/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heatbie/errors.hpp"

namespace heatbie {

const char* to_string(LayerOperator op) noexcept {
    switch (op) {
        case LayerOperator::single_layer: return "single_layer";
        case LayerOperator::double_layer: return "double_layer";
        case LayerOperator::adjoint_double_layer: return "adjoint_double_layer";
        case LayerOperator::hypersingular: return "hypersingular";
    }
    return "unknown";
}

double layer_kernel(LayerOperator op, const SpaceTimeGrid& grid, std::size_t i, std::size_t k,
                    double tau, KernelContext ctx) {
    const Vec2 d = grid.point(i) - grid.point(k);
    switch (op) {
        case LayerOperator::single_layer:
            return heat_kernel(d, tau);
        case LayerOperator::double_layer:
            return normal_derivative_y(d, tau, grid.normal(k), ctx);
        case LayerOperator::adjoint_double_layer:
            return normal_derivative_x(d, tau, grid.normal(i), ctx);
        case LayerOperator::hypersingular:
            return -hypersingular_kernel(d, tau, grid.normal(i), grid.normal(k), ctx);
    }
    return 0.0;
}

BoundaryField apply(LayerOperator op, const BoundaryField& density, KernelContext ctx) {
    const SpaceTimeGrid& grid = density.grid();
    const std::size_t n = grid.n_space();
    const double w = grid.cell_weight();
    BoundaryField out(density.grid_ptr());
    for (std::size_t j = 0; j < grid.n_time(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t l = 0; l < j; ++l) {
                const double tau = grid.time(j) - grid.time(l);
                for (std::size_t k = 0; k < n; ++k)
                    sum += layer_kernel(op, grid, i, k, tau, ctx) * density(k, l) * grid.speed(k);
            }
            out(i, j) = w * sum;
        }
    }
    return out;
}

BoundaryField apply(LayerOperator op, const SpaceTimeGrid& grid, const BoundaryField& density,
                    KernelContext ctx) {
    require_on_grid(density, grid);
    return apply(op, density, ctx);
}

BoundaryField single_layer_apply(const BoundaryField& q, KernelContext ctx) {
    return apply(LayerOperator::single_layer, q, ctx);
}

BoundaryField double_layer_apply(const BoundaryField& density, KernelContext ctx) {
    return apply(LayerOperator::double_layer, density, ctx);
}

BoundaryField adjoint_double_layer_apply(const BoundaryField& q, KernelContext ctx) {
    return apply(LayerOperator::adjoint_double_layer, q, ctx);
}

BoundaryField hypersingular_apply(const BoundaryField& density, KernelContext ctx) {
    return apply(LayerOperator::hypersingular, density, ctx);
}

TimeBlockOperator::TimeBlockOperator(GridPtr grid, LayerOperator op, KernelContext ctx)
    : grid_(std::move(grid)), op_(op) {
    if (!grid_) throw InvalidParameter("TimeBlockOperator requires a grid");
    const std::size_t n = grid_->n_space();
    const double w = grid_->cell_weight();
    blocks_.assign(grid_->n_time(), std::vector<double>(n * n, 0.0));
    for (std::size_t lag = 1; lag < blocks_.size(); ++lag) {
        const double tau = static_cast<double>(lag) * grid_->time_step();
        auto& block = blocks_[lag];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                block[i * n + k] = w * layer_kernel(op_, *grid_, i, k, tau, ctx) * grid_->speed(k);
    }
}

void TimeBlockOperator::accumulate(std::size_t lag, std::span<const double> in,
                                   std::span<double> out) const {
    const std::size_t n = grid_->n_space();
    const auto& block = blocks_[lag];
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        const double* row = block.data() + i * n;
        for (std::size_t k = 0; k < n; ++k) sum += row[k] * in[k];
        out[i] += sum;
    }
}

BoundaryField TimeBlockOperator::apply(const BoundaryField& density) const {
    require_on_grid(density, *grid_);
    BoundaryField out(grid_);
    for (std::size_t j = 0; j < grid_->n_time(); ++j)
        for (std::size_t l = 0; l < j; ++l)
            accumulate(j - l, density.time_level(l), out.time_level(j));
    return out;
}

namespace detail {

InteriorSamples evaluate_representation(const BoundaryField& single_density,
                                        const BoundaryField& double_density,
                                        const std::vector<SpaceTimePoint>& targets,
                                        KernelContext ctx, bool allow_boundary_nodes) {
    require_same_grid(single_density, double_density);
    const SpaceTimeGrid& grid = single_density.grid();
    const std::size_t n = grid.n_space();
    const double w = grid.cell_weight();
    const double node_tol = 1e-12 * std::max(1.0, norm(grid.point(0)));

    InteriorSamples samples;
    samples.reserve(targets.size());
    for (const auto& target : targets) {
        if (!(target.time > 0.0 && target.time <= grid.final_time()) || !std::isfinite(target.time))
            throw InvalidParameter("target time must lie in (0, T]");
        bool on_boundary = false;
        if (allow_boundary_nodes) {
            for (std::size_t k = 0; k < n && !on_boundary; ++k)
                on_boundary = norm(target.point - grid.point(k)) <= node_tol;
        }
        if (!on_boundary && !grid.curve().contains(target.point))
            throw OutsideDomain("target (" + std::to_string(target.point.x) + ", " +
                                std::to_string(target.point.y) + ") is not inside the curve");

        double sum = 0.0;
        for (std::size_t l = 0; l < grid.n_time(); ++l) {
            const double tau = target.time - grid.time(l);
            if (!(tau > 0.0)) break;
            for (std::size_t k = 0; k < n; ++k) {
                const Vec2 d = target.point - grid.point(k);
                sum += grid.speed(k) *
                       (heat_kernel(d, tau) * single_density(k, l) -
                        normal_derivative_y(d, tau, grid.normal(k), ctx) * double_density(k, l));
            }
        }
        samples.push_back({target.point, target.time, w * sum, on_boundary});
    }
    return samples;
}

}  // namespace detail

InteriorSamples evaluate_interior(const BoundaryField& q, const BoundaryField& phi_density,
                                  const std::vector<SpaceTimePoint>& targets, KernelContext ctx) {
    return detail::evaluate_representation(q, phi_density, targets, ctx, false);
}

CauchyResidualFields cauchy_residual_fields(const BoundaryField& q, const BoundaryField& phi_density,
                                            const BoundaryField& g, const BoundaryField& phi,
                                            KernelContext ctx) {
    require_same_grid(q, phi_density);
    require_same_grid(q, g);
    require_same_grid(q, phi);
    BoundaryField r1 = single_layer_apply(q, ctx) + 0.5 * phi_density -
                       double_layer_apply(phi_density, ctx) - g;
    BoundaryField r2 = 0.5 * q + adjoint_double_layer_apply(q, ctx) +
                       hypersingular_apply(phi_density, ctx) - phi;
    return {std::move(r1), std::move(r2)};
}

CauchyResiduals cauchy_residuals(const BoundaryField& q, const BoundaryField& phi_density,
                                 const BoundaryField& g, const BoundaryField& phi,
                                 KernelContext ctx) {
    const auto fields = cauchy_residual_fields(q, phi_density, g, phi, ctx);
    return {fields.dirichlet.max_abs(), fields.neumann.max_abs()};
}

}  // namespace heatbie
