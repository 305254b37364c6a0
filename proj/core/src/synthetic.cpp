#include "heatbie/synthetic.hpp"

#include <cmath>
#include <string>

#include "heatbie/errors.hpp"
#include "heatbie/potentials.hpp"

namespace heatbie {

PointSource::PointSource(Vec2 x0, const BoundaryCurve& curve) : x0_(x0) {
    if (!std::isfinite(x0.x) || !std::isfinite(x0.y))
        throw InvalidParameter("point source location must be finite");
    if (curve.contains(x0)) throw SourceInsideDomain("point source lies inside the domain");
    const double dist = curve.distance(x0);
    if (dist < min_margin)
        throw SourceInsideDomain("point source is " + std::to_string(dist) +
                                 " from the boundary (minimum 0.5)");
}

double PointSource::temperature(Vec2 x, double t) const noexcept { return heat_kernel(x - x0_, t); }

double PointSource::flux(Vec2 x, Vec2 normal, double t) const noexcept {
    return dot(normal, heat_kernel_gradient(x - x0_, t));
}

namespace {

void require_source_fits(const PointSource& source, const SpaceTimeGrid& grid) {
    // Re-validates against this grid's curve, which may differ from the one
    // the source was built for.
    PointSource(source.location(), grid.curve());
}

}  // namespace

BoundaryField point_source_trace(const PointSource& source, const GridPtr& grid) {
    require_source_fits(source, *grid);
    BoundaryField g(grid);
    for (std::size_t j = 0; j < grid->n_time(); ++j)
        for (std::size_t i = 0; i < grid->n_space(); ++i)
            g(i, j) = source.temperature(grid->point(i), grid->time(j));
    return g;
}

BoundaryField point_source_flux(const PointSource& source, const GridPtr& grid) {
    require_source_fits(source, *grid);
    BoundaryField phi(grid);
    for (std::size_t j = 0; j < grid->n_time(); ++j)
        for (std::size_t i = 0; i < grid->n_space(); ++i)
            phi(i, j) = source.flux(grid->point(i), grid->normal(i), grid->time(j));
    return phi;
}

BoundaryField paper_example_dirichlet(const GridPtr& grid) {
    BoundaryField g(grid);
    for (std::size_t j = 0; j < grid->n_time(); ++j) {
        const double c = std::cos(3.0 * grid->time(j));
        for (std::size_t i = 0; i < grid->n_space(); ++i) g(i, j) = 2.0 * norm(grid->point(i)) * c;
    }
    return g;
}

BoundaryField solve_second_kind(const BoundaryField& phi, KernelContext ctx) {
    const GridPtr& grid = phi.grid_ptr();
    const TimeBlockOperator single(grid, LayerOperator::single_layer, ctx);
    const TimeBlockOperator dbl(grid, LayerOperator::double_layer, ctx);

    BoundaryField density = single.apply(phi);
    for (std::size_t j = 0; j < grid->n_time(); ++j) {
        auto level = density.time_level(j);
        for (double& v : level) v = -v;
        for (std::size_t l = 0; l < j; ++l) dbl.accumulate(j - l, density.time_level(l), level);
        for (double& v : level) v *= -2.0;
    }
    return density;
}

}  // namespace heatbie
