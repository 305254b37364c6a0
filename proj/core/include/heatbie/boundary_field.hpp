#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "heatbie/geometry.hpp"

namespace heatbie {

/// Real values on the nodes of a SpaceTimeGrid: boundary temperature, flux,
/// or a layer density. Storage is time-major so that each time level is a
/// contiguous span of n_space values.
class BoundaryField {
public:
    /// Zero field on `grid`.
    explicit BoundaryField(GridPtr grid);
    /// Takes ownership of time-major values; throws InvalidParameter on a
    /// size mismatch or non-finite entries.
    BoundaryField(GridPtr grid, std::vector<double> values);

    const SpaceTimeGrid& grid() const noexcept { return *grid_; }
    const GridPtr& grid_ptr() const noexcept { return grid_; }
    std::size_t n_space() const noexcept { return grid_->n_space(); }
    std::size_t n_time() const noexcept { return grid_->n_time(); }
    std::size_t size() const noexcept { return values_.size(); }

    double& operator()(std::size_t i, std::size_t j) { return values_[j * n_space() + i]; }
    double operator()(std::size_t i, std::size_t j) const { return values_[j * n_space() + i]; }

    std::span<double> time_level(std::size_t j) {
        return {values_.data() + j * n_space(), n_space()};
    }
    std::span<const double> time_level(std::size_t j) const {
        return {values_.data() + j * n_space(), n_space()};
    }

    const std::vector<double>& values() const noexcept { return values_; }
    std::vector<double>& values() noexcept { return values_; }

    bool all_finite() const noexcept;
    double max_abs() const noexcept;

    BoundaryField& operator+=(const BoundaryField& other);
    BoundaryField& operator-=(const BoundaryField& other);
    BoundaryField& operator*=(double s) noexcept;
    friend BoundaryField operator+(BoundaryField a, const BoundaryField& b) { return a += b; }
    friend BoundaryField operator-(BoundaryField a, const BoundaryField& b) { return a -= b; }
    friend BoundaryField operator*(double s, BoundaryField a) { return a *= s; }

private:
    GridPtr grid_;
    std::vector<double> values_;
};

/// Throws GridMismatch unless both fields share one discretization.
void require_same_grid(const BoundaryField& a, const BoundaryField& b);
void require_on_grid(const BoundaryField& field, const SpaceTimeGrid& grid);

}  // namespace heatbie
