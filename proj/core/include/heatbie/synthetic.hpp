#pragma once

#include "heatbie/boundary_field.hpp"
#include "heatbie/geometry.hpp"
#include "heatbie/kernels.hpp"

namespace heatbie {

/// Exact solution u(x,t) = G(x − x0, t) generated by a unit heat impulse at
/// t = 0 located outside the domain. It solves the heat equation in Ω with
/// zero initial temperature there, so its boundary trace and flux form
/// consistent Cauchy data.
class PointSource {
public:
    static constexpr double min_margin = 0.5;

    /// Throws SourceInsideDomain if x0 is inside `curve` or closer than
    /// min_margin to it.
    PointSource(Vec2 x0, const BoundaryCurve& curve);

    Vec2 location() const noexcept { return x0_; }

    double temperature(Vec2 x, double t) const noexcept;
    /// ∂u/∂ν at x for the given unit normal.
    double flux(Vec2 x, Vec2 normal, double t) const noexcept;

private:
    Vec2 x0_;
};

/// g(i,j) = G(γ(ζ_i) − x0, t_j).
BoundaryField point_source_trace(const PointSource& source, const GridPtr& grid);
/// φ(i,j) = ν(ζ_i)·∇G(γ(ζ_i) − x0, t_j).
BoundaryField point_source_flux(const PointSource& source, const GridPtr& grid);

/// Dirichlet data g(x,t) = 2|x| cos(3t) sampled on the grid.
BoundaryField paper_example_dirichlet(const GridPtr& grid);

/// Solves the discrete second-kind equation (½I + D) ϕ = S φ by forward
/// substitution over time levels:
///   ϕ_j = 2·[(Sφ)_j − Σ_{l<j} D_{j−l} ϕ_l].
/// The diagonal block of D vanishes by causality, so no linear solve is needed.
BoundaryField solve_second_kind(const BoundaryField& phi, KernelContext ctx = {});

}  // namespace heatbie
