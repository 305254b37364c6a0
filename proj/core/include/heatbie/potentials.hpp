#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "heatbie/boundary_field.hpp"
#include "heatbie/geometry.hpp"
#include "heatbie/kernels.hpp"

namespace heatbie {

/// The four retarded boundary heat operators.
enum class LayerOperator {
    single_layer,          // S: kernel G
    double_layer,          // D: ∂G/∂ν(y)
    adjoint_double_layer,  // D′: ∂G/∂ν(x)
    hypersingular,         // H: −∂²G/∂ν(x)∂ν(y)
};

const char* to_string(LayerOperator op) noexcept;

/// Kernel of `op` between target node i and source node k at time lag τ,
/// including the leading minus sign of H. No quadrature weight or Jacobian.
double layer_kernel(LayerOperator op, const SpaceTimeGrid& grid, std::size_t i, std::size_t k,
                    double tau, KernelContext ctx);

/// Matrix-free rectangle-rule quadrature
///   out(i,j) = Σ_k Σ_{l<j} h·h′·kernel(γ_i − γ_k, t_j − t_l)·density(k,l)·|γ′_k|.
/// Terms with t_j − t_l ≤ 0 vanish through the kernels' causality.
BoundaryField apply(LayerOperator op, const BoundaryField& density, KernelContext ctx = {});
/// As above, after checking that `density` lives on `grid` (GridMismatch otherwise).
BoundaryField apply(LayerOperator op, const SpaceTimeGrid& grid, const BoundaryField& density,
                    KernelContext ctx = {});

BoundaryField single_layer_apply(const BoundaryField& q, KernelContext ctx = {});
BoundaryField double_layer_apply(const BoundaryField& density, KernelContext ctx = {});
BoundaryField adjoint_double_layer_apply(const BoundaryField& q, KernelContext ctx = {});
BoundaryField hypersingular_apply(const BoundaryField& density, KernelContext ctx = {});

/// Assembled form of a layer operator. The kernel depends on t_j − t_l only,
/// so the space-time matrix is block lower-triangular Toeplitz in time and is
/// stored as one n_space × n_space block per lag m = j − l (m = 0..N′−1).
/// Block 0 is identically zero by causality.
class TimeBlockOperator {
public:
    TimeBlockOperator(GridPtr grid, LayerOperator op, KernelContext ctx = {});

    const SpaceTimeGrid& grid() const noexcept { return *grid_; }
    LayerOperator op() const noexcept { return op_; }
    std::size_t n_lags() const noexcept { return blocks_.size(); }

    /// Entry (i, k) of the block at lag m, row-major.
    double entry(std::size_t lag, std::size_t i, std::size_t k) const {
        return blocks_[lag][i * grid_->n_space() + k];
    }

    BoundaryField apply(const BoundaryField& density) const;
    /// out += Σ_k block(lag)(i,k)·in[k] for one time level.
    void accumulate(std::size_t lag, std::span<const double> in, std::span<double> out) const;

private:
    GridPtr grid_;
    LayerOperator op_;
    std::vector<std::vector<double>> blocks_;
};

struct SpaceTimePoint {
    Vec2 point;
    double time = 0.0;
};

struct InteriorSample {
    Vec2 point;
    double time = 0.0;
    double value = 0.0;
    /// Target coincided with a boundary node; layer potentials jump there.
    bool on_boundary = false;
};

using InteriorSamples = std::vector<InteriorSample>;

/// u(x,t) = S q − D φ_density evaluated off the boundary with the grid's
/// rectangle rule. Targets must lie strictly inside the curve with times in
/// (0, T]; throws OutsideDomain or InvalidParameter otherwise.
InteriorSamples evaluate_interior(const BoundaryField& q, const BoundaryField& phi_density,
                                  const std::vector<SpaceTimePoint>& targets,
                                  KernelContext ctx = {});

/// Residual fields of the discrete Cauchy-data identities
///   r₁ = S q + (½I − D) φ_density − g
///   r₂ = (½I + D′) q + H φ_density − φ.
struct CauchyResidualFields {
    BoundaryField dirichlet;
    BoundaryField neumann;
};

struct CauchyResiduals {
    double dirichlet = 0.0;  // ‖r₁‖_max
    double neumann = 0.0;    // ‖r₂‖_max
};

CauchyResidualFields cauchy_residual_fields(const BoundaryField& q, const BoundaryField& phi_density,
                                            const BoundaryField& g, const BoundaryField& phi,
                                            KernelContext ctx = {});
CauchyResiduals cauchy_residuals(const BoundaryField& q, const BoundaryField& phi_density,
                                 const BoundaryField& g, const BoundaryField& phi,
                                 KernelContext ctx = {});

namespace detail {
/// Shared by evaluate_interior and reconstruct_field.
InteriorSamples evaluate_representation(const BoundaryField& single_density,
                                        const BoundaryField& double_density,
                                        const std::vector<SpaceTimePoint>& targets,
                                        KernelContext ctx, bool allow_boundary_nodes);
}  // namespace detail

}  // namespace heatbie
