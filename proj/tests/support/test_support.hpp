#pragma once

// Test-only helpers: seeded random fields and independent reference
// implementations that do not go through the library's quadrature code.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "heatbie/boundary_field.hpp"
#include "heatbie/geometry.hpp"

namespace heatbie::testing {

inline BoundaryField random_field(const GridPtr& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    BoundaryField f(grid);
    for (double& v : f.values()) v = dist(rng);
    return f;
}

inline BoundaryField impulse(const GridPtr& grid, std::size_t k, std::size_t l, double value = 1.0) {
    BoundaryField f(grid);
    f(k, l) = value;
    return f;
}

inline GridPtr unit_circle_grid(std::size_t n, std::size_t n_time, double final_time = 10.0,
                                double zeta_max = 1.0) {
    return make_grid(BoundaryCurve::circle(1.0), n, n_time, final_time, zeta_max);
}

/// Max |a − b| / max(max|b|, tiny).
inline double relative_max_diff(const BoundaryField& a, const BoundaryField& b) {
    double diff = 0.0, scale = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        diff = std::max(diff, std::abs(a.values()[n] - b.values()[n]));
        scale = std::max(scale, std::abs(b.values()[n]));
    }
    return diff / std::max(scale, 1e-300);
}

/// Cyclic shift by m in the space index: out(i, j) = f((i − m) mod N, j).
inline BoundaryField shift_space(const BoundaryField& f, std::size_t m) {
    BoundaryField out(f.grid_ptr());
    const std::size_t n = f.n_space();
    for (std::size_t j = 0; j < f.n_time(); ++j)
        for (std::size_t i = 0; i < n; ++i) out((i + m) % n, j) = f(i, j);
    return out;
}

/// Literal double-loop transcription of the published flux scheme on the
/// circle γ(ζ) = R(cos 2πζ, sin 2πζ) with nodes ζ_k = k·r, t_l = l·r′ (1-based):
///   φ(ζ_i,t_j) = (r r′/4) Σ_k Σ_l g(k,l)/(t_j − t_l)² · γ′_i/|γ′_i| ·
///                [−γ′_k + 2(γ′_k·(γ_k − γ_i))(γ_i − γ_k)/(t_j − t_l)] ·
///                exp(−|γ_i − γ_k|²/(t_j − t_l)),
/// skipping t_j − t_l ≤ 0. `g` is indexed g[(l−1)·N + (k−1)].
inline std::vector<double> literal_flux_scheme(double radius, std::size_t n_space, std::size_t n_time,
                                               double final_time, double zeta_max,
                                               const std::vector<double>& g) {
    const double pi = std::numbers::pi;
    const double r = zeta_max / static_cast<double>(n_space);
    const double rp = final_time / static_cast<double>(n_time);
    auto gam = [&](std::size_t k, double out[2]) {
        const double z = static_cast<double>(k) * r;
        out[0] = radius * std::cos(2 * pi * z);
        out[1] = radius * std::sin(2 * pi * z);
    };
    auto dgam = [&](std::size_t k, double out[2]) {
        const double z = static_cast<double>(k) * r;
        out[0] = -2 * pi * radius * std::sin(2 * pi * z);
        out[1] = 2 * pi * radius * std::cos(2 * pi * z);
    };
    std::vector<double> phi(n_space * n_time, 0.0);
    for (std::size_t i = 1; i <= n_space; ++i) {
        double gi[2], dgi[2];
        gam(i, gi);
        dgam(i, dgi);
        const double len_i = std::sqrt(dgi[0] * dgi[0] + dgi[1] * dgi[1]);
        for (std::size_t j = 1; j <= n_time; ++j) {
            const double tj = static_cast<double>(j) * rp;
            double total = 0.0;
            for (std::size_t k = 1; k <= n_space; ++k) {
                double gk[2], dgk[2];
                gam(k, gk);
                dgam(k, dgk);
                for (std::size_t l = 1; l <= n_time; ++l) {
                    const double tl = static_cast<double>(l) * rp;
                    const double s = tj - tl;
                    if (s <= 0) continue;
                    const double dot_k = dgk[0] * (gk[0] - gi[0]) + dgk[1] * (gk[1] - gi[1]);
                    const double bx = -dgk[0] + 2 * dot_k * (gi[0] - gk[0]) / s;
                    const double by = -dgk[1] + 2 * dot_k * (gi[1] - gk[1]) / s;
                    const double dist2 = (gi[0] - gk[0]) * (gi[0] - gk[0]) + (gi[1] - gk[1]) * (gi[1] - gk[1]);
                    total += g[(l - 1) * n_space + (k - 1)] / (s * s) *
                             ((dgi[0] / len_i) * bx + (dgi[1] / len_i) * by) * std::exp(-dist2 / s);
                }
            }
            phi[(j - 1) * n_space + (i - 1)] = r * rp / 4.0 * total;
        }
    }
    return phi;
}

}  // namespace heatbie::testing
