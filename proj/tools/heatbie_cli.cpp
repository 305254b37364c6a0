// heatbie: command line driver for the boundary-integral inverse heat solver.
//
//   heatbie kernel-check
//   heatbie direct      --config <path> --out <path>
//   heatbie inverse     --config <path> --out <path>
//   heatbie field       --config <path> --out <path>
//   heatbie convergence --config <path> --levels 16x32,32x64 --out <path>
//
// Global: --mode corrected|paper overrides kernel_mode from the config.
// Exit codes: 0 success, 1 validation/IO error, 2 kernel-check failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "heatbie/config.hpp"
#include "heatbie/csv.hpp"
#include "heatbie/errors.hpp"
#include "heatbie/experiment.hpp"
#include "heatbie/selfcheck.hpp"

namespace {

constexpr int exit_validation = 1;
constexpr int exit_check_failed = 2;

heatbie::ExperimentConfig load(const std::string& path, const std::optional<std::string>& mode) {
    heatbie::ExperimentConfig config = heatbie::load_config(path);
    if (mode) config.kernel_mode = heatbie::parse_kernel_mode(mode->c_str());
    return config;
}

int kernel_check() {
    const heatbie::SelfCheckReport report = heatbie::kernel_selfcheck();
    for (const auto& c : report.checks) {
        std::printf("%-24s %s  worst=%.3e  tol=%.1e  samples=%zu\n", c.name.c_str(),
                    c.passed ? "PASS" : "FAIL", c.worst_error, c.tolerance, c.samples);
    }
    std::printf("%s\n", report.all_passed() ? "all kernel checks passed" : "kernel checks FAILED");
    return report.all_passed() ? 0 : exit_check_failed;
}

int direct(const heatbie::ExperimentConfig& config, const std::string& out_path) {
    const heatbie::DirectData data = heatbie::generate_direct_data(config);
    const heatbie::BoundaryField* flux = data.reference_flux ? &*data.reference_flux : nullptr;
    heatbie::write_file(out_path, [&](std::ostream& out) { heatbie::write_direct_csv(out, data.g, flux); });
    std::cout << "wrote " << out_path << " (" << data.g.size() << " rows)\n";
    return 0;
}

int inverse(heatbie::ExperimentConfig config, const std::string& out_path) {
    config.output.flux = out_path;
    config.output.field.clear();
    config.targets.clear();
    std::cout << heatbie::report_to_json(heatbie::run_experiment(config));
    return 0;
}

int field(heatbie::ExperimentConfig config, const std::string& out_path) {
    if (config.targets.empty()) throw heatbie::ConfigError("field: config has no targets");
    config.output.field = out_path;
    config.output.flux.clear();
    std::cout << heatbie::report_to_json(heatbie::run_experiment(config));
    return 0;
}

int convergence(const heatbie::ExperimentConfig& config, const std::string& levels,
                const std::string& out_path) {
    const auto rows = heatbie::convergence_study(config, heatbie::parse_levels(levels));
    heatbie::write_file(out_path, [&](std::ostream& out) { heatbie::write_convergence_csv(out, rows); });
    heatbie::write_convergence_csv(std::cout, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-integral inverse heat conduction toolkit"};
    app.require_subcommand(1);

    std::optional<std::string> mode;
    app.add_option("--mode", mode, "Kernel mode override")
        ->check(CLI::IsMember({"corrected", "paper"}));

    std::string config_path, out_path, levels;
    app.add_subcommand("kernel-check", "Run the kernel self-check suite");
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Experiment JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "Output CSV")->required();
    };
    add_io(app.add_subcommand("direct", "Generate Dirichlet data and the reference flux"));
    add_io(app.add_subcommand("inverse", "Reconstruct the boundary flux"));
    add_io(app.add_subcommand("field", "Reconstruct the interior temperature"));
    auto* conv = app.add_subcommand("convergence", "Refinement study against the analytic flux");
    add_io(conv);
    conv->add_option("--levels", levels, "Comma-separated NxN' levels")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_validation;
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "kernel-check") return kernel_check();
        const heatbie::ExperimentConfig config = load(config_path, mode);
        if (cmd == "direct") return direct(config, out_path);
        if (cmd == "inverse") return inverse(config, out_path);
        if (cmd == "field") return field(config, out_path);
        return convergence(config, levels, out_path);
    } catch (const heatbie::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
}
