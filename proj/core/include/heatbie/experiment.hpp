#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heatbie/boundary_field.hpp"
#include "heatbie/config.hpp"
#include "heatbie/inverse.hpp"

namespace heatbie {

/// Grid, Dirichlet data and (when a reference is configured) the analytic flux.
struct DirectData {
    GridPtr grid;
    BoundaryField g;
    std::optional<BoundaryField> reference_flux;
};

DirectData generate_direct_data(const ExperimentConfig& config);

struct ExperimentReport {
    ExperimentConfig config;
    double wall_time_s = 0.0;  // reconstruction only, IO excluded
    std::optional<ErrorMetrics> metrics;
    std::vector<std::string> files;
};

/// Everything produced by one run, before anything is written.
struct ExperimentOutcome {
    DirectData data;
    ReconstructionResult reconstruction;
    InteriorSamples field;
    std::optional<std::vector<double>> field_reference;
    double wall_time_s = 0.0;
};

/// Data generation, flux reconstruction (full or partial per zeta_max),
/// optional interior field and metrics. No IO.
ExperimentOutcome compute_experiment(const ExperimentConfig& config);

/// compute_experiment plus CSV/JSON output to the paths in config.output.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::string report_to_json(const ExperimentReport& report);

struct ConvergenceRow {
    std::size_t n_space = 0;
    std::size_t n_time = 0;
    ErrorMetrics metrics;
    double wall_time_s = 0.0;
};

struct GridLevel {
    std::size_t n_space = 0;
    std::size_t n_time = 0;
};

/// Parses "16x32,32x64,..."; throws ConfigError on malformed input.
std::vector<GridLevel> parse_levels(const std::string& text);

/// One reconstruction per level with the base config's other settings.
/// Throws ConfigError when the base config has no reference.
std::vector<ConvergenceRow> convergence_study(const ExperimentConfig& base,
                                              const std::vector<GridLevel>& levels);

}  // namespace heatbie
