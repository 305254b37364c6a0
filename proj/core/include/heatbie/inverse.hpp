#pragma once

#include <optional>
#include <vector>

#include "heatbie/boundary_field.hpp"
#include "heatbie/kernels.hpp"
#include "heatbie/potentials.hpp"

namespace heatbie {

struct ErrorMetrics {
    double l2_error = 0.0;     // sqrt(Σ h·h′·|γ′_i|·(c − r)²)
    double max_error = 0.0;
    double relative_l2 = 0.0;  // l2_error / weighted l2 norm of the reference
};

/// Throws GridMismatch on different grids, ZeroReference if the reference
/// has zero weighted norm.
ErrorMetrics error_metrics(const BoundaryField& candidate, const BoundaryField& reference);

/// Curve-weighted discrete L² norm.
double weighted_l2_norm(const BoundaryField& field);

struct ReconstructionResult {
    BoundaryField flux;
    KernelMode mode = KernelMode::corrected;
    std::optional<ErrorMetrics> metrics;

    const SpaceTimeGrid& grid() const noexcept { return flux.grid(); }
};

/// Heat flux on the whole boundary by explicit hypersingular quadrature of
/// the Dirichlet data:
///   φ(i,j) = −Σ_{k,l} h·h′·K(γ_i − γ_k, t_j − t_l, ν_i, ν_k)·g(k,l)·|γ′_k|.
/// In paper-literal mode the unit tangents γ′/|γ′| replace the normals and the
/// published constants are used, which reproduces the printed scheme
///   (h h′/4) Σ g/τ² · γ̂′_i·[−γ′_k + 2(γ′_k·(γ_k − γ_i))(γ_i − γ_k)/τ] e^{−|γ_i−γ_k|²/τ}.
/// Throws InvalidParameter when given a partial-arc grid.
ReconstructionResult reconstruct_flux_full(const BoundaryField& g, KernelContext ctx = {},
                                           const BoundaryField* reference = nullptr);

/// Same quadrature restricted to the measured arc Γ = γ([0, ζ*]) with g
/// extended by zero off Γ; output lives on Γ's nodes. Throws InvalidParameter
/// for a full-boundary grid.
ReconstructionResult reconstruct_flux_partial(const BoundaryField& g_on_arc, KernelContext ctx = {},
                                              const BoundaryField* reference = nullptr);

/// Temperature from Cauchy data by the representation u = S φ − D g.
/// Targets may be interior points or boundary nodes (flagged on_boundary);
/// anything else throws OutsideDomain.
InteriorSamples reconstruct_field(const BoundaryField& flux, const BoundaryField& g,
                                  const std::vector<SpaceTimePoint>& targets,
                                  KernelContext ctx = {});

}  // namespace heatbie
