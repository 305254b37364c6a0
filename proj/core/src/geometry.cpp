#include "heatbie/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "heatbie/errors.hpp"

namespace heatbie {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double degenerate_speed = 1e-12;

double reduce_period(double zeta) { return zeta - std::floor(zeta); }

double eval_series(const TrigSeries& s, double zeta) {
    double value = s.cos_coeffs.empty() ? 0.0 : s.cos_coeffs[0];
    const std::size_t order = std::max(s.cos_coeffs.size(), s.sin_coeffs.size());
    for (std::size_t m = 1; m < order; ++m) {
        const double arg = two_pi * static_cast<double>(m) * zeta;
        if (m < s.cos_coeffs.size()) value += s.cos_coeffs[m] * std::cos(arg);
        if (m < s.sin_coeffs.size()) value += s.sin_coeffs[m] * std::sin(arg);
    }
    return value;
}

double eval_series_derivative(const TrigSeries& s, double zeta) {
    double value = 0.0;
    const std::size_t order = std::max(s.cos_coeffs.size(), s.sin_coeffs.size());
    for (std::size_t m = 1; m < order; ++m) {
        const double freq = two_pi * static_cast<double>(m);
        const double arg = freq * zeta;
        if (m < s.cos_coeffs.size()) value -= freq * s.cos_coeffs[m] * std::sin(arg);
        if (m < s.sin_coeffs.size()) value += freq * s.sin_coeffs[m] * std::cos(arg);
    }
    return value;
}

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double c) { return std::isfinite(c); });
}

}  // namespace

BoundaryCurve BoundaryCurve::circle(double radius, Vec2 center) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidParameter("circle radius must be positive and finite");
    if (!std::isfinite(center.x) || !std::isfinite(center.y))
        throw InvalidParameter("circle center must be finite");
    BoundaryCurve c;
    c.kind_ = Kind::circle;
    c.radius_ = radius;
    c.center_ = center;
    c.x_ = {{center.x, radius}, {}};
    c.y_ = {{center.y}, {0.0, radius}};
    return c;
}

BoundaryCurve BoundaryCurve::trig_polynomial(TrigSeries x, TrigSeries y) {
    for (const auto* s : {&x, &y}) {
        if (!all_finite(s->cos_coeffs) || !all_finite(s->sin_coeffs))
            throw InvalidParameter("trigonometric curve coefficients must be finite");
    }
    BoundaryCurve c;
    c.kind_ = Kind::trig_polynomial;
    c.radius_ = 0.0;
    c.x_ = std::move(x);
    c.y_ = std::move(y);
    return c;
}

Vec2 BoundaryCurve::point(double zeta) const {
    const double z = reduce_period(zeta);
    if (kind_ == Kind::circle) {
        const double a = two_pi * z;
        return {center_.x + radius_ * std::cos(a), center_.y + radius_ * std::sin(a)};
    }
    return {eval_series(x_, z), eval_series(y_, z)};
}

Vec2 BoundaryCurve::tangent(double zeta) const {
    const double z = reduce_period(zeta);
    if (kind_ == Kind::circle) {
        const double a = two_pi * z;
        return {-two_pi * radius_ * std::sin(a), two_pi * radius_ * std::cos(a)};
    }
    return {eval_series_derivative(x_, z), eval_series_derivative(y_, z)};
}

Vec2 BoundaryCurve::normal(double zeta) const {
    const Vec2 t = tangent(zeta);
    const double s = norm(t);
    if (!(s >= degenerate_speed))
        throw DegenerateTangent("|γ′(ζ)| below 1e-12 at ζ = " + std::to_string(zeta));
    return Vec2{t.y, -t.x} / s;
}

double BoundaryCurve::signed_area(std::size_t samples) const {
    // ½∮ (x dy − y dx), exact for trigonometric polynomials of modest order.
    double sum = 0.0;
    for (std::size_t n = 0; n < samples; ++n) {
        const double z = static_cast<double>(n) / static_cast<double>(samples);
        sum += cross(point(z), tangent(z));
    }
    return 0.5 * sum / static_cast<double>(samples);
}

bool BoundaryCurve::contains(Vec2 p, std::size_t samples) const {
    // Winding number by summing signed angles of consecutive polygon vertices.
    double winding = 0.0;
    Vec2 prev = point(0.0) - p;
    for (std::size_t n = 1; n <= samples; ++n) {
        const Vec2 cur = point(static_cast<double>(n) / static_cast<double>(samples)) - p;
        winding += std::atan2(cross(prev, cur), dot(prev, cur));
        prev = cur;
    }
    return std::abs(winding) > std::numbers::pi;
}

double BoundaryCurve::distance(Vec2 p, std::size_t samples) const {
    std::size_t best = 0;
    double best_d2 = norm2(point(0.0) - p);
    const double step = 1.0 / static_cast<double>(samples);
    for (std::size_t n = 1; n < samples; ++n) {
        const double d2 = norm2(point(static_cast<double>(n) * step) - p);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = n;
        }
    }
    double lo = (static_cast<double>(best) - 1.0) * step;
    double hi = (static_cast<double>(best) + 1.0) * step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto f = [&](double z) { return norm2(point(z) - p); };
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = f(a), fb = f(b);
    for (int it = 0; it < 80; ++it) {
        if (fa < fb) {
            hi = b; b = a; fb = fa;
            a = hi - inv_phi * (hi - lo); fa = f(a);
        } else {
            lo = a; a = b; fa = fb;
            b = lo + inv_phi * (hi - lo); fb = f(b);
        }
    }
    return std::sqrt(std::min({best_d2, fa, fb}));
}

Vec2 curve_point(const BoundaryCurve& curve, double zeta) { return curve.point(zeta); }
Vec2 curve_tangent(const BoundaryCurve& curve, double zeta) { return curve.tangent(zeta); }
Vec2 outward_normal(const BoundaryCurve& curve, double zeta) { return curve.normal(zeta); }

SpaceTimeGrid::SpaceTimeGrid(BoundaryCurve curve, std::size_t n_space, std::size_t n_time,
                             double final_time, double zeta_max)
    : curve_(std::move(curve)),
      n_space_(n_space),
      n_time_(n_time),
      final_time_(final_time),
      zeta_max_(zeta_max) {
    if (n_space_ < 1) throw InvalidParameter("N must be at least 1");
    if (n_time_ < 1) throw InvalidParameter("N' must be at least 1");
    if (!(final_time_ > 0.0) || !std::isfinite(final_time_))
        throw InvalidParameter("T must be positive and finite");
    if (!(zeta_max_ > 0.0 && zeta_max_ <= 1.0))
        throw InvalidParameter("zeta_max must lie in (0, 1]");

    const std::size_t area_samples = std::max<std::size_t>(n_space_, 64);
    if (!(curve_.signed_area(area_samples) > 0.0))
        throw InvalidParameter("curve must be counterclockwise (positive signed area)");

    space_step_ = zeta_max_ / static_cast<double>(n_space_);
    time_step_ = final_time_ / static_cast<double>(n_time_);

    zeta_.resize(n_space_);
    point_.resize(n_space_);
    tangent_.resize(n_space_);
    normal_.resize(n_space_);
    speed_.resize(n_space_);
    for (std::size_t i = 0; i < n_space_; ++i) {
        // Last node pinned to zeta_max exactly.
        const double z = (i + 1 == n_space_) ? zeta_max_ : static_cast<double>(i + 1) * space_step_;
        zeta_[i] = z;
        point_[i] = curve_.point(z);
        tangent_[i] = curve_.tangent(z);
        speed_[i] = norm(tangent_[i]);
        normal_[i] = curve_.normal(z);
    }
    time_.resize(n_time_);
    for (std::size_t j = 0; j < n_time_; ++j)
        time_[j] = (j + 1 == n_time_) ? final_time_ : static_cast<double>(j + 1) * time_step_;
}

bool SpaceTimeGrid::same_discretization(const SpaceTimeGrid& other) const {
    if (this == &other) return true;
    return n_space_ == other.n_space_ && n_time_ == other.n_time_ &&
           final_time_ == other.final_time_ && zeta_max_ == other.zeta_max_ &&
           curve_ == other.curve_;
}

GridPtr make_grid(const BoundaryCurve& curve, std::size_t n_space, std::size_t n_time,
                  double final_time, double zeta_max) {
    return std::make_shared<const SpaceTimeGrid>(curve, n_space, n_time, final_time, zeta_max);
}

}  // namespace heatbie
