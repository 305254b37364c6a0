#include "heatbie/kernels.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "heatbie/errors.hpp"

namespace heatbie {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

// Gaussian factor shared by the published first and second derivative displays.
double paper_gaussian(Vec2 d, double tau) { return std::exp(-norm2(d) / tau); }

}  // namespace

const char* to_string(KernelMode mode) noexcept {
    return mode == KernelMode::corrected ? "corrected" : "paper";
}

KernelMode parse_kernel_mode(const char* text) {
    if (std::strcmp(text, "corrected") == 0) return KernelMode::corrected;
    if (std::strcmp(text, "paper") == 0) return KernelMode::paper_literal;
    throw InvalidParameter(std::string("unknown kernel mode '") + text +
                           "' (expected corrected|paper)");
}

double heat_kernel(Vec2 d, double tau) noexcept {
    if (!(tau > 0.0)) return 0.0;
    return std::exp(-norm2(d) / (4.0 * tau)) / (four_pi * tau);
}

Vec2 heat_kernel_gradient(Vec2 d, double tau) noexcept {
    if (!(tau > 0.0)) return {};
    return (-heat_kernel(d, tau) / (2.0 * tau)) * d;
}

double normal_derivative_y(Vec2 d, double tau, Vec2 nu_y, KernelContext ctx) noexcept {
    if (!(tau > 0.0)) return 0.0;
    if (ctx.mode == KernelMode::paper_literal)
        return dot(nu_y, d) / (4.0 * tau * tau) * paper_gaussian(d, tau);
    return dot(nu_y, d) / (2.0 * tau) * heat_kernel(d, tau);
}

double normal_derivative_x(Vec2 d, double tau, Vec2 nu_x, KernelContext ctx) noexcept {
    if (!(tau > 0.0)) return 0.0;
    if (ctx.mode == KernelMode::paper_literal)
        return -dot(nu_x, d) / (4.0 * tau * tau) * paper_gaussian(d, tau);
    return -dot(nu_x, d) / (2.0 * tau) * heat_kernel(d, tau);
}

double hypersingular_kernel(Vec2 d, double tau, Vec2 nu_x, Vec2 nu_y, KernelContext ctx) noexcept {
    if (!(tau > 0.0)) return 0.0;
    const double nx_d = dot(nu_x, d);
    const double ny_d = dot(nu_y, d);
    if (ctx.mode == KernelMode::paper_literal) {
        const Vec2 y_minus_x = -d;
        const Vec2 curl_term{};                  // (y−x) × (∇×ν_y), ν_y constant
        const Vec2 convective = -nu_y;           // (ν_y·∇)(y−x)
        const Vec2 transport{};                  // ((y−x)·∇)ν_y, ν_y constant
        const Vec2 bracket = curl_term + convective + transport +
                             (2.0 * dot(nu_y, y_minus_x) / tau) * d;
        return -dot(nu_x, bracket) / (4.0 * tau * tau) * paper_gaussian(d, tau);
    }
    return heat_kernel(d, tau) * (dot(nu_x, nu_y) / (2.0 * tau) - nx_d * ny_d / (4.0 * tau * tau));
}

}  // namespace heatbie
