// Command-line driver: single runs, sweeps, snapshots and config linting.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superarrival/classical.hpp"
#include "superarrival/config.hpp"
#include "superarrival/csv.hpp"
#include "superarrival/errors.hpp"
#include "superarrival/observables.hpp"
#include "superarrival/sweep.hpp"
#include "superarrival/tdse.hpp"

namespace fs = std::filesystem;
using namespace superarrival;

namespace {

template <typename Writer, typename Value>
std::string render(Writer writer, const Value& value) {
    std::ostringstream out;
    writer(out, value);
    return out.str();
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

ExperimentConfig with_mode(ExperimentConfig config, RampMode mode) {
    config.barrier.mode = mode;
    return config;
}

int cmd_run(const std::string& config_path, const std::string& mode, bool classical, const fs::path& out_dir,
            const std::optional<std::uint64_t>& seed) {
    ExperimentConfig config = load_config(config_path);
    if (seed) config.rng_seed = *seed;
    print_warnings(validate(config));

    std::vector<std::pair<std::string, ExperimentConfig>> runs;
    if (mode == "static" || mode == "both") runs.emplace_back("static", with_mode(config, RampMode::Static));
    if (mode == "perturbed" || mode == "both") runs.emplace_back("perturbed", with_mode(config, RampMode::LinearRamp));

    std::vector<ReflectionSeries> quantum;
    for (const auto& [name, cfg] : runs) {
        EvolveResult result = evolve(cfg);
        print_warnings(result.warnings);
        write_file(out_dir / ("quantum_" + name + ".csv"), render(write_series_csv, result.series));
        quantum.push_back(std::move(result.series));
        if (classical) {
            const ClassicalRun cl = classical_reflection_series(cfg, cfg.classical.n_particles);
            write_file(out_dir / ("classical_" + name + ".csv"), render(write_series_csv, cl.series));
        }
    }
    write_file(out_dir / "plot_series.py", series_plot_script());

    if (quantum.size() == 2) {
        const double v_g = derived_quantities(config.packet).group_velocity;
        try {
            const SuperarrivalReport r = analyze(quantum[0], quantum[1], config.barrier.t_p,
                                                 config.deviation_threshold, config.detector_x,
                                                 config.barrier.center, v_g);
            std::cout << "t_d=" << format_number(r.t_d) << " t_c=" << format_number(r.t_c)
                      << " delta_t=" << format_number(r.delta_t) << " eta=" << format_number(r.eta)
                      << " v_e=" << format_number(r.v_e) << " v_e/v_g=" << format_number(r.ratio) << '\n';
        } catch (const Error& err) {
            std::cout << "no superarrival window: " << err.what() << '\n';
        }
    }
    return 0;
}

int cmd_sweep(const std::string& plan_path, const fs::path& out_dir, std::size_t workers,
              const std::optional<std::uint64_t>& seed) {
    SweepPlan plan = load_plan(plan_path);
    if (workers > 0) plan.workers = workers;
    if (seed) plan.base.rng_seed = *seed;
    const auto rows = run_sweep(plan);
    write_file(out_dir / "report.csv", render(write_report_csv, rows));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        char prefix[32];
        std::snprintf(prefix, sizeof prefix, "point_%03zu", i);
        if (!rows[i].static_series.times.empty()) {
            write_file(out_dir / "series" / (std::string(prefix) + "_static.csv"),
                       render(write_series_csv, rows[i].static_series));
        }
        if (!rows[i].perturbed_series.times.empty()) {
            write_file(out_dir / "series" / (std::string(prefix) + "_perturbed.csv"),
                       render(write_series_csv, rows[i].perturbed_series));
        }
    }
    write_file(out_dir / "plot_report.py", report_plot_script());
    std::size_t failed = 0;
    for (const auto& row : rows) failed += row.status != "ok";
    std::cout << rows.size() << " points, " << failed << " without a superarrival window\n";
    return 0;
}

int cmd_snapshots(const std::string& config_path, const std::vector<double>& times, const std::string& mode,
                  const fs::path& out_dir) {
    ExperimentConfig config = load_config(config_path);
    if (mode == "static") config.barrier.mode = RampMode::Static;
    print_warnings(validate(config));
    const EvolveResult result = evolve(config, times);
    for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
        char name[48];
        std::snprintf(name, sizeof name, "snapshot_%02zu.csv", i);
        write_file(out_dir / name, render(write_snapshot_csv, result.snapshots[i]));
    }
    return 0;
}

int cmd_validate(const std::string& config_path) {
    const ExperimentConfig config = load_config(config_path);
    const auto warnings = validate(config);
    print_warnings(warnings);
    std::cout << "config ok (" << config.n_steps() << " steps, dx=" << format_number(config.grid.dx) << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wave-packet reflection from a barrier switched off mid-scattering"};
    app.require_subcommand(1);

    std::string config_path;
    std::string mode = "both";
    bool classical = false;
    std::string out_dir = ".";
    std::size_t workers = 0;
    std::optional<std::uint64_t> seed;
    std::vector<double> times{4e-4, 8e-4, 1.2e-3, 2e-3};

    auto* run = app.add_subcommand("run", "Evolve one configuration and write t,R series");
    run->add_option("config", config_path, "key=value config file")->required();
    run->add_option("--mode", mode, "static|perturbed|both")->check(CLI::IsMember({"static", "perturbed", "both"}));
    run->add_flag("--classical", classical, "Also run the classical ensemble");
    run->add_option("--out-dir", out_dir, "Output directory");
    run->add_option("--seed", seed, "Override the config seed");

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write report.csv");
    sweep->add_option("plan", config_path, "Plan file (config keys plus sweep.*)")->required();
    sweep->add_option("--out-dir", out_dir, "Output directory");
    sweep->add_option("--workers", workers, "Worker threads (overrides sweep.workers)");
    sweep->add_option("--seed", seed, "Override the config seed");

    auto* snaps = app.add_subcommand("snapshots", "Write |psi|^2 profiles at given times");
    snaps->add_option("config", config_path, "key=value config file")->required();
    snaps->add_option("--times", times, "Snapshot times in (0, t_end]")->delimiter(',');
    snaps->add_option("--mode", mode, "static|perturbed")->check(CLI::IsMember({"static", "perturbed", "both"}));
    snaps->add_option("--out-dir", out_dir, "Output directory");

    auto* lint = app.add_subcommand("validate", "Check a config file");
    lint->add_option("config", config_path, "key=value config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(config_path, mode, classical, out_dir, seed);
        if (*sweep) return cmd_sweep(config_path, out_dir, workers, seed);
        if (*snaps) return cmd_snapshots(config_path, times, mode, out_dir);
        if (*lint) return cmd_validate(config_path);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
