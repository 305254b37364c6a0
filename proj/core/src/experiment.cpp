#include "heatbie/experiment.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "heatbie/csv.hpp"
#include "heatbie/errors.hpp"
#include "heatbie/synthetic.hpp"

namespace heatbie {

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point start) {
    return std::chrono::duration<double>(clock::now() - start).count();
}

}  // namespace

DirectData generate_direct_data(const ExperimentConfig& config) {
    config.validate();
    const BoundaryCurve curve = config.curve.build();
    GridPtr grid = make_grid(curve, config.n_space, config.n_time, config.final_time, config.zeta_max);

    BoundaryField g(grid);
    switch (config.data.kind) {
        case DataSpec::Kind::point_source:
            g = point_source_trace(PointSource(config.data.x0, curve), grid);
            break;
        case DataSpec::Kind::paper_example:
            g = paper_example_dirichlet(grid);
            break;
        case DataSpec::Kind::zero:
            break;
    }
    std::optional<BoundaryField> reference;
    if (config.reference) reference = point_source_flux(PointSource(config.reference->x0, curve), grid);
    return {std::move(grid), std::move(g), std::move(reference)};
}

ExperimentOutcome compute_experiment(const ExperimentConfig& config) {
    DirectData data = generate_direct_data(config);
    const KernelContext ctx{config.kernel_mode};
    const BoundaryField* reference = data.reference_flux ? &*data.reference_flux : nullptr;

    const auto start = clock::now();
    ReconstructionResult recon = data.grid->is_partial()
                                     ? reconstruct_flux_partial(data.g, ctx, reference)
                                     : reconstruct_flux_full(data.g, ctx, reference);
    const double wall = seconds_since(start);

    InteriorSamples field;
    std::optional<std::vector<double>> field_reference;
    if (!config.targets.empty()) {
        const BoundaryField& flux =
            config.field_flux == FieldFlux::reference ? *data.reference_flux : recon.flux;
        field = reconstruct_field(flux, data.g, config.targets, ctx);
        if (config.reference) {
            const PointSource source(config.reference->x0, data.grid->curve());
            std::vector<double> values;
            for (const auto& s : field) values.push_back(source.temperature(s.point, s.time));
            field_reference = std::move(values);
        }
    }
    return {std::move(data), std::move(recon), std::move(field), std::move(field_reference), wall};
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    const ExperimentOutcome outcome = compute_experiment(config);
    ExperimentReport report{config, outcome.wall_time_s, outcome.reconstruction.metrics, {}};

    if (!config.output.flux.empty()) {
        const BoundaryField* ref =
            outcome.data.reference_flux ? &*outcome.data.reference_flux : nullptr;
        write_file(config.output.flux,
                   [&](std::ostream& out) { write_flux_csv(out, outcome.reconstruction.flux, ref); });
        report.files.push_back(config.output.flux);
    }
    if (!config.output.field.empty() && !config.targets.empty()) {
        const auto* ref = outcome.field_reference ? &*outcome.field_reference : nullptr;
        write_file(config.output.field,
                   [&](std::ostream& out) { write_field_csv(out, outcome.field, ref); });
        report.files.push_back(config.output.field);
    }
    if (!config.output.report.empty()) {
        report.files.push_back(config.output.report);
        const std::string text = report_to_json(report);
        write_file(config.output.report, [&](std::ostream& out) { out << text; });
    }
    for (const auto& f : report.files)
        if (!std::filesystem::exists(f)) throw IoError("output file '" + f + "' missing after write");
    return report;
}

std::string report_to_json(const ExperimentReport& report) {
    using nlohmann::json;
    json j;
    j["config"] = json::parse(serialize_config(report.config));
    j["wall_time_s"] = report.wall_time_s;
    if (report.metrics) {
        j["metrics"] = {{"l2_error", report.metrics->l2_error},
                        {"max_error", report.metrics->max_error},
                        {"relative_l2", report.metrics->relative_l2}};
    } else {
        j["metrics"] = nullptr;
    }
    j["files"] = report.files;
    return j.dump(2) + "\n";
}

std::vector<GridLevel> parse_levels(const std::string& text) {
    std::vector<GridLevel> levels;
    if (text.empty()) return levels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto x = item.find('x');
        if (x == std::string::npos || x == 0 || x + 1 == item.size())
            throw ConfigError("level '" + item + "' is not of the form NxM");
        try {
            std::size_t used_n = 0, used_m = 0;
            const std::string ns = item.substr(0, x), ms = item.substr(x + 1);
            const long long n = std::stoll(ns, &used_n);
            const long long m = std::stoll(ms, &used_m);
            if (used_n != ns.size() || used_m != ms.size() || n < 1 || m < 1) throw std::invalid_argument("");
            levels.push_back({static_cast<std::size_t>(n), static_cast<std::size_t>(m)});
        } catch (const std::logic_error&) {
            throw ConfigError("level '" + item + "' is not of the form NxM with positive integers");
        }
    }
    return levels;
}

std::vector<ConvergenceRow> convergence_study(const ExperimentConfig& base,
                                              const std::vector<GridLevel>& levels) {
    if (!base.reference) throw ConfigError("convergence study needs a reference spec");
    std::vector<ConvergenceRow> rows;
    for (const auto& level : levels) {
        ExperimentConfig c = base;
        c.n_space = level.n_space;
        c.n_time = level.n_time;
        c.targets.clear();
        c.output = {};
        const ExperimentOutcome outcome = compute_experiment(c);
        rows.push_back({level.n_space, level.n_time, *outcome.reconstruction.metrics, outcome.wall_time_s});
    }
    return rows;
}

}  // namespace heatbie
