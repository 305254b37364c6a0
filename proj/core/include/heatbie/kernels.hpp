#pragma once

#include "heatbie/geometry.hpp"

namespace heatbie {

/// Corrected: analytic derivatives of the 2D heat kernel.
/// PaperLiteral: the published first/second normal-derivative displays,
/// whose constants (no 4π, exponent −|d|²/τ) differ from the analytic ones.
enum class KernelMode { corrected, paper_literal };

struct KernelContext {
    KernelMode mode = KernelMode::corrected;
};

const char* to_string(KernelMode mode) noexcept;
/// Accepts "corrected" and "paper"; throws InvalidParameter otherwise.
KernelMode parse_kernel_mode(const char* text);

// All kernels take d = x − y and τ = t − s and vanish identically for τ ≤ 0.

/// G(d, τ) = exp(−|d|²/4τ) / (4πτ).
double heat_kernel(Vec2 d, double tau) noexcept;

/// ∇_d G = −d/(2τ) · G.
Vec2 heat_kernel_gradient(Vec2 d, double tau) noexcept;

/// Derivative of G(x − y, τ) with respect to y along nu_y.
double normal_derivative_y(Vec2 d, double tau, Vec2 nu_y, KernelContext ctx = {}) noexcept;

/// Derivative of G(x − y, τ) with respect to x along nu_x.
double normal_derivative_x(Vec2 d, double tau, Vec2 nu_x, KernelContext ctx = {}) noexcept;

/// Mixed second derivative ∂²G/∂ν(x)∂ν(y).
///
/// Corrected: G·[ν_x·ν_y/(2τ) − (ν_x·d)(ν_y·d)/(4τ²)].
/// PaperLiteral: −1/(4τ²)·ν_x·[(y−x)×(∇×ν_y) + (ν_y·∇)(y−x) + ((y−x)·∇)ν_y
///                             + 2(ν_y·(y−x))(x−y)/τ]·exp(−|d|²/τ)
/// with ν_y held constant, so the curl and ((y−x)·∇)ν_y terms are zero and
/// (ν_y·∇)(y−x) = −ν_y.
double hypersingular_kernel(Vec2 d, double tau, Vec2 nu_x, Vec2 nu_y,
                            KernelContext ctx = {}) noexcept;

}  // namespace heatbie
