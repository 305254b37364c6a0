#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heatbie/geometry.hpp"
#include "heatbie/kernels.hpp"
#include "heatbie/potentials.hpp"

namespace heatbie {

struct CurveSpec {
    enum class Kind { circle, trig };
    Kind kind = Kind::circle;
    double radius = 1.0;
    Vec2 center{};
    TrigSeries x;
    TrigSeries y;

    BoundaryCurve build() const;
    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Source of the Dirichlet data g.
struct DataSpec {
    enum class Kind { point_source, paper_example, zero };
    Kind kind = Kind::point_source;
    Vec2 x0{2.0, 0.0};  // point_source only

    friend bool operator==(const DataSpec&, const DataSpec&) = default;
};

/// Analytic reference for error metrics; the only generator is the exterior
/// point source.
struct ReferenceSpec {
    Vec2 x0{2.0, 0.0};

    friend bool operator==(const ReferenceSpec&, const ReferenceSpec&) = default;
};

struct OutputSpec {
    std::string flux;
    std::string field;
    std::string report;

    friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

/// Which flux feeds the interior field reconstruction.
enum class FieldFlux { reconstructed, reference };

struct ExperimentConfig {
    CurveSpec curve;
    std::size_t n_space = 50;
    std::size_t n_time = 100;
    double final_time = 10.0;
    double zeta_max = 1.0;
    KernelMode kernel_mode = KernelMode::corrected;
    DataSpec data;
    std::optional<ReferenceSpec> reference;
    OutputSpec output;
    std::vector<SpaceTimePoint> targets;
    FieldFlux field_flux = FieldFlux::reconstructed;

    /// Throws ConfigError on any violated precondition.
    void validate() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&);
};

/// Parses a JSON document. Unknown keys anywhere are rejected with ConfigError.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string& path);
/// Pretty-printed JSON that parse_config maps back to an equal config.
std::string serialize_config(const ExperimentConfig& config);

}  // namespace heatbie
