#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <vector>

namespace heatbie {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return a += b; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return a -= b; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
    friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Fourier coefficients of one coordinate of a trigonometric polynomial curve:
/// c(ζ) = cos_coeffs[0] + Σ_{m≥1} cos_coeffs[m] cos(2πmζ) + sin_coeffs[m] sin(2πmζ).
/// sin_coeffs[0] is ignored.
struct TrigSeries {
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    friend bool operator==(const TrigSeries&, const TrigSeries&) = default;
};

/// Closed, 1-periodic, analytic boundary parameterization ζ ↦ γ(ζ).
///
/// Two families are supported: circles (evaluated with a single cos/sin pair)
/// and general trigonometric polynomials. Orientation is counterclockwise for
/// the outward normal to point out of the enclosed domain.
class BoundaryCurve {
public:
    enum class Kind { circle, trig_polynomial };

    static BoundaryCurve circle(double radius, Vec2 center = {});
    static BoundaryCurve trig_polynomial(TrigSeries x, TrigSeries y);

    Kind kind() const noexcept { return kind_; }
    double radius() const noexcept { return radius_; }
    Vec2 center() const noexcept { return center_; }
    const TrigSeries& x_series() const noexcept { return x_; }
    const TrigSeries& y_series() const noexcept { return y_; }

    Vec2 point(double zeta) const;
    Vec2 tangent(double zeta) const;
    /// (γ′₂, −γ′₁)/|γ′|; throws DegenerateTangent when |γ′| < 1e-12.
    Vec2 normal(double zeta) const;
    double speed(double zeta) const { return norm(tangent(zeta)); }

    /// Signed enclosed area by the periodic trapezoid rule on `samples` nodes.
    double signed_area(std::size_t samples) const;
    /// Winding-number inside test against a polygon with `samples` vertices.
    bool contains(Vec2 p, std::size_t samples = 2048) const;
    /// Distance from p to the curve, sampled then refined by golden-section search.
    double distance(Vec2 p, std::size_t samples = 2048) const;

    friend bool operator==(const BoundaryCurve&, const BoundaryCurve&) = default;

private:
    BoundaryCurve() = default;

    Kind kind_ = Kind::circle;
    double radius_ = 1.0;
    Vec2 center_{};
    TrigSeries x_;
    TrigSeries y_;
};

Vec2 curve_point(const BoundaryCurve& curve, double zeta);
Vec2 curve_tangent(const BoundaryCurve& curve, double zeta);
Vec2 outward_normal(const BoundaryCurve& curve, double zeta);

/// Uniform space-time nodes ζ_i = i·h (i = 1..N) on (0, zeta_max] and
/// t_j = j·h′ (j = 1..N′) on (0, T], with boundary geometry cached per node.
/// Indices are zero-based in code: node i here is node i+1 in the usual notation.
class SpaceTimeGrid {
public:
    SpaceTimeGrid(BoundaryCurve curve, std::size_t n_space, std::size_t n_time,
                  double final_time, double zeta_max = 1.0);

    const BoundaryCurve& curve() const noexcept { return curve_; }
    std::size_t n_space() const noexcept { return n_space_; }
    std::size_t n_time() const noexcept { return n_time_; }
    std::size_t size() const noexcept { return n_space_ * n_time_; }
    double final_time() const noexcept { return final_time_; }
    double zeta_max() const noexcept { return zeta_max_; }
    bool is_partial() const noexcept { return zeta_max_ < 1.0; }

    double space_step() const noexcept { return space_step_; }
    double time_step() const noexcept { return time_step_; }
    /// h·h′, the product weight of the rectangle rule.
    double cell_weight() const noexcept { return space_step_ * time_step_; }

    double zeta(std::size_t i) const { return zeta_[i]; }
    double time(std::size_t j) const { return time_[j]; }
    Vec2 point(std::size_t i) const { return point_[i]; }
    Vec2 tangent(std::size_t i) const { return tangent_[i]; }
    Vec2 normal(std::size_t i) const { return normal_[i]; }
    double speed(std::size_t i) const { return speed_[i]; }

    const std::vector<double>& zetas() const noexcept { return zeta_; }
    const std::vector<double>& times() const noexcept { return time_; }

    /// Same curve, counts, final time and arc.
    bool same_discretization(const SpaceTimeGrid& other) const;

private:
    BoundaryCurve curve_;
    std::size_t n_space_;
    std::size_t n_time_;
    double final_time_;
    double zeta_max_;
    double space_step_;
    double time_step_;
    std::vector<double> zeta_;
    std::vector<double> time_;
    std::vector<Vec2> point_;
    std::vector<Vec2> tangent_;
    std::vector<Vec2> normal_;
    std::vector<double> speed_;
};

using GridPtr = std::shared_ptr<const SpaceTimeGrid>;

/// Validates N ≥ 1, N′ ≥ 1, T > 0, 0 < zeta_max ≤ 1 and counterclockwise
/// orientation; throws InvalidParameter otherwise.
GridPtr make_grid(const BoundaryCurve& curve, std::size_t n_space, std::size_t n_time,
                  double final_time, double zeta_max = 1.0);

}  // namespace heatbie
