#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace heatbie {

struct SelfCheckResult {
    std::string name;
    bool passed = false;
    double worst_error = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0;
};

struct SelfCheckReport {
    std::vector<SelfCheckResult> checks;

    bool all_passed() const noexcept;
    const SelfCheckResult* find(const std::string& name) const noexcept;
};

/// Runs the kernel invariants (finite-difference derivatives, heat-equation
/// residual, causality, mass conservation, x↔y symmetry) at fixed seeds.
/// Failures are reported, never thrown.
SelfCheckReport kernel_selfcheck(std::uint64_t seed = 0x5eed'2d7eULL);

}  // namespace heatbie
