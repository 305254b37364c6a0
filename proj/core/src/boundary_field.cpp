#include "heatbie/boundary_field.hpp"

#include <algorithm>
#include <cmath>

#include "heatbie/errors.hpp"

namespace heatbie {

BoundaryField::BoundaryField(GridPtr grid) : grid_(std::move(grid)) {
    if (!grid_) throw InvalidParameter("BoundaryField requires a grid");
    values_.assign(grid_->size(), 0.0);
}

BoundaryField::BoundaryField(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_) throw InvalidParameter("BoundaryField requires a grid");
    if (values_.size() != grid_->size())
        throw InvalidParameter("BoundaryField: value count does not match the grid");
    if (!all_finite()) throw InvalidParameter("BoundaryField: non-finite entry");
}

bool BoundaryField::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double BoundaryField::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

BoundaryField& BoundaryField::operator+=(const BoundaryField& other) {
    require_same_grid(*this, other);
    for (std::size_t n = 0; n < values_.size(); ++n) values_[n] += other.values_[n];
    return *this;
}

BoundaryField& BoundaryField::operator-=(const BoundaryField& other) {
    require_same_grid(*this, other);
    for (std::size_t n = 0; n < values_.size(); ++n) values_[n] -= other.values_[n];
    return *this;
}

BoundaryField& BoundaryField::operator*=(double s) noexcept {
    for (double& v : values_) v *= s;
    return *this;
}

void require_same_grid(const BoundaryField& a, const BoundaryField& b) {
    if (!a.grid().same_discretization(b.grid()))
        throw GridMismatch("fields are defined on different grids");
}

void require_on_grid(const BoundaryField& field, const SpaceTimeGrid& grid) {
    if (!field.grid().same_discretization(grid))
        throw GridMismatch("field is not defined on the expected grid");
}

}  // namespace heatbie
