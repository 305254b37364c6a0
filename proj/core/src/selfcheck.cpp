#include "heatbie/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "heatbie/kernels.hpp"

namespace heatbie {

bool SelfCheckReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const SelfCheckResult* SelfCheckReport::find(const std::string& name) const noexcept {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

constexpr std::size_t fd_samples = 50;

struct Sampler {
    std::mt19937_64 rng;

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

    Vec2 in_disk(double radius) {
        const double r = radius * std::sqrt(uniform(0.0, 1.0));
        const double a = uniform(0.0, 2.0 * std::numbers::pi);
        return {r * std::cos(a), r * std::sin(a)};
    }

    Vec2 unit() {
        const double a = uniform(0.0, 2.0 * std::numbers::pi);
        return {std::cos(a), std::sin(a)};
    }
};

// Error relative to max(|exact|, floor); the floor is a small fraction of the
// derivative's natural magnitude and only matters near sign changes.
double scaled_relative(double err, double exact, double floor) { return err / std::max(std::abs(exact), floor); }

SelfCheckResult make(std::string name, double worst, double tol, std::size_t n) {
    return {std::move(name), worst <= tol, worst, tol, n};
}

SelfCheckResult check_gradient(Sampler& s) {
    const double eps = 1e-5;
    double worst = 0.0;
    for (std::size_t n = 0; n < fd_samples; ++n) {
        const Vec2 d = s.in_disk(2.0);
        const double tau = s.uniform(0.2, 3.0);
        const Vec2 exact = heat_kernel_gradient(d, tau);
        const Vec2 fd{(heat_kernel(d + Vec2{eps, 0}, tau) - heat_kernel(d - Vec2{eps, 0}, tau)) / (2 * eps),
                      (heat_kernel(d + Vec2{0, eps}, tau) - heat_kernel(d - Vec2{0, eps}, tau)) / (2 * eps)};
        const double floor = 1e-3 * heat_kernel(d, tau) / std::sqrt(tau);
        worst = std::max(worst, norm(fd - exact) / std::max(norm(exact), floor));
    }
    return make("gradient_fd", worst, 1e-6, fd_samples);
}

SelfCheckResult check_normal_derivatives(Sampler& s) {
    const double eps = 1e-5;
    double worst = 0.0;
    for (std::size_t n = 0; n < fd_samples; ++n) {
        const Vec2 d = s.in_disk(2.0);
        const double tau = s.uniform(0.2, 3.0);
        const Vec2 nu = s.unit();
        const double floor = 1e-3 * heat_kernel(d, tau) / std::sqrt(tau);
        // y ↦ G(x − y): moving y by +εν moves d by −εν.
        const double fd_y = (heat_kernel(d - eps * nu, tau) - heat_kernel(d + eps * nu, tau)) / (2 * eps);
        const double fd_x = -fd_y;
        const double ny = normal_derivative_y(d, tau, nu);
        const double nx = normal_derivative_x(d, tau, nu);
        worst = std::max({worst, scaled_relative(std::abs(fd_y - ny), ny, floor),
                          scaled_relative(std::abs(fd_x - nx), nx, floor)});
    }
    return make("normal_derivative_fd", worst, 1e-6, 2 * fd_samples);
}

SelfCheckResult check_hypersingular(Sampler& s) {
    const double eps = 1e-4;
    double worst = 0.0;
    for (std::size_t n = 0; n < fd_samples; ++n) {
        const Vec2 d = s.in_disk(2.0);
        const double tau = s.uniform(0.2, 3.0);
        const Vec2 nx = s.unit();
        const Vec2 ny = s.unit();
        auto f = [&](double a, double b) { return heat_kernel(d + a * nx - b * ny, tau); };
        const double fd = (f(eps, eps) - f(eps, -eps) - f(-eps, eps) + f(-eps, -eps)) / (4 * eps * eps);
        const double exact = hypersingular_kernel(d, tau, nx, ny);
        const double floor = 1e-3 * heat_kernel(d, tau) / tau;
        worst = std::max(worst, scaled_relative(std::abs(fd - exact), exact, floor));
    }
    return make("hypersingular_fd", worst, 1e-4, fd_samples);
}

SelfCheckResult check_heat_equation(Sampler& s) {
    // Fourth-order central stencils; the second-order ones carry O(step²)
    // truncation of a few 1e-6 at τ = 0.3.
    const double step = 1e-3;
    auto central2 = [&](auto&& f) {
        return (-f(2.0) + 16.0 * f(1.0) - 30.0 * f(0.0) + 16.0 * f(-1.0) - f(-2.0)) / (12.0 * step * step);
    };
    double worst = 0.0;
    std::size_t count = 0;
    for (const double tau : {0.3, 1.0, 3.0}) {
        for (std::size_t n = 0; n < fd_samples; ++n, ++count) {
            const Vec2 d = s.in_disk(2.0);
            auto gt = [&](double m) { return heat_kernel(d, tau + m * step); };
            const double dt = (-gt(2.0) + 8.0 * gt(1.0) - 8.0 * gt(-1.0) + gt(-2.0)) / (12.0 * step);
            const double lap = central2([&](double m) { return heat_kernel(d + Vec2{m * step, 0}, tau); }) +
                               central2([&](double m) { return heat_kernel(d + Vec2{0, m * step}, tau); });
            worst = std::max(worst, std::abs(dt - lap));
        }
    }
    return make("heat_equation_residual", worst, 1e-6, count);
}

SelfCheckResult check_causality(Sampler& s) {
    constexpr std::size_t samples = 1000;
    std::size_t violations = 0;
    for (std::size_t n = 0; n < samples; ++n) {
        const Vec2 d = s.in_disk(3.0);
        const double tau = n % 10 == 0 ? 0.0 : s.uniform(-5.0, 0.0);
        const Vec2 a = s.unit(), b = s.unit();
        for (const KernelMode mode : {KernelMode::corrected, KernelMode::paper_literal}) {
            const KernelContext ctx{mode};
            const Vec2 grad = heat_kernel_gradient(d, tau);
            if (heat_kernel(d, tau) != 0.0 || grad.x != 0.0 || grad.y != 0.0 ||
                normal_derivative_y(d, tau, b, ctx) != 0.0 || normal_derivative_x(d, tau, a, ctx) != 0.0 ||
                hypersingular_kernel(d, tau, a, b, ctx) != 0.0)
                ++violations;
        }
    }
    return make("causality", static_cast<double>(violations), 0.0, samples);
}

SelfCheckResult check_mass() {
    constexpr std::size_t cells = 2000;
    double worst = 0.0;
    for (const double tau : {0.5, 1.0}) {
        const double half = 20.0 * std::sqrt(tau);
        const double dx = 2.0 * half / cells;
        double sum = 0.0;
        for (std::size_t a = 0; a < cells; ++a) {
            const double x = -half + (static_cast<double>(a) + 0.5) * dx;
            double row = 0.0;
            for (std::size_t b = 0; b < cells; ++b)
                row += heat_kernel({x, -half + (static_cast<double>(b) + 0.5) * dx}, tau);
            sum += row;
        }
        worst = std::max(worst, std::abs(sum * dx * dx - 1.0));
    }
    return make("mass_conservation", worst, 1e-6, 2);
}

SelfCheckResult check_symmetry(Sampler& s) {
    double worst = 0.0;
    for (std::size_t n = 0; n < fd_samples; ++n) {
        const Vec2 d = s.in_disk(2.0);
        const double tau = s.uniform(0.05, 3.0);
        const Vec2 a = s.unit(), b = s.unit();
        for (const KernelMode mode : {KernelMode::corrected, KernelMode::paper_literal}) {
            const KernelContext ctx{mode};
            const double k1 = hypersingular_kernel(d, tau, a, b, ctx);
            const double k2 = hypersingular_kernel(-d, tau, b, a, ctx);
            worst = std::max(worst, std::abs(k1 - k2) / std::max(std::abs(k1), 1e-300));
        }
    }
    return make("hypersingular_symmetry", worst, 1e-12, 2 * fd_samples);
}

}  // namespace

SelfCheckReport kernel_selfcheck(std::uint64_t seed) {
    Sampler s{std::mt19937_64(seed)};
    SelfCheckReport report;
    report.checks.push_back(check_gradient(s));
    report.checks.push_back(check_normal_derivatives(s));
    report.checks.push_back(check_hypersingular(s));
    report.checks.push_back(check_heat_equation(s));
    report.checks.push_back(check_causality(s));
    report.checks.push_back(check_mass());
    report.checks.push_back(check_symmetry(s));
    return report;
}

}  // namespace heatbie
