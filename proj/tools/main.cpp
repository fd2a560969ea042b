#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "roverloc/errors.hpp"
#include "roverloc/harness.hpp"
#include "roverloc/pipeline.hpp"
#include "roverloc/version.hpp"

namespace {

using namespace roverloc;

struct CommonFlags {
    std::string scenario_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> noise_sigma;
    ga::GaConfig ga_config{};
    newton::NewtonConfig newton_config{};
    std::string out_path;
    std::string format = "table";
    bool no_timings = false;
    int threads = 1;
};

void add_common_flags(CLI::App& cmd, CommonFlags& flags, bool with_solver_flags) {
    cmd.add_option("--scenario", flags.scenario_path, "Scenario JSON file")->required();
    cmd.add_option("--seed", flags.seed, "Root seed (overrides the scenario's)");
    if (with_solver_flags) {
        cmd.add_option("--ga-pop", flags.ga_config.population_size, "GA population size");
        cmd.add_option("--ga-gens", flags.ga_config.generations, "GA generations");
        cmd.add_option("--restarts", flags.ga_config.restarts, "GA restarts per rover (n*n)");
        cmd.add_option("--crossover-rate", flags.ga_config.crossover_rate,
                       "Single-point crossover probability");
        cmd.add_option("--mutation-rate", flags.ga_config.mutation_rate,
                       "Per-bit mutation probability");
        cmd.add_option("--bits", flags.ga_config.bits_per_var, "Genome bits per variable");
        cmd.add_option("--newton-tol", flags.newton_config.step_tolerance_mm,
                       "Newton step-norm tolerance (mm)");
        cmd.add_option("--newton-max-iter", flags.newton_config.max_iterations,
                       "Newton iteration cap");
        cmd.add_option("--noise-sigma", flags.noise_sigma,
                       "Gaussian RSSI noise in dBm (overrides the scenario's)");
        cmd.add_option("--threads", flags.threads, "Worker threads for GA restarts (0 = auto)");
        cmd.add_option("--out", flags.out_path, "Report output path (default: stdout)");
        cmd.add_option("--format", flags.format, "Report format")
            ->check(CLI::IsMember({"csv", "json", "table"}));
        cmd.add_flag("--no-timings", flags.no_timings, "Omit timing fields from reports");
    }
}

harness::Scenario load_with_overrides(const CommonFlags& flags) {
    harness::Scenario scenario = harness::load_scenario(flags.scenario_path);
    if (flags.seed)
        scenario.seed = *flags.seed;
    if (flags.noise_sigma)
        scenario.noise_sigma_dbm = *flags.noise_sigma;
    harness::validate(scenario);
    return scenario;
}

void write_report(const harness::ExperimentReport& report, const CommonFlags& flags) {
    const harness::ReportFormat format = flags.format == "csv"  ? harness::ReportFormat::Csv
                                         : flags.format == "json" ? harness::ReportFormat::Json
                                                                  : harness::ReportFormat::PrettyTable;
    if (flags.out_path.empty()) {
        switch (format) {
        case harness::ReportFormat::Csv:
            std::cout << harness::report_to_csv(report);
            break;
        case harness::ReportFormat::Json:
            std::cout << harness::report_to_json(report).dump(2) << '\n';
            break;
        case harness::ReportFormat::PrettyTable:
            std::cout << harness::report_to_table(report);
            break;
        }
    } else {
        harness::emit_report(report, format, flags.out_path);
    }
}

int run_solve_command(const CommonFlags& flags, const std::string& mode_name) {
    const auto scenario = load_with_overrides(flags);
    const auto mode =
        mode_name == "ga" ? pipeline::Mode::GaOnly : pipeline::Mode::GaNewton;
    harness::RunOptions options;
    options.threads = flags.threads;
    options.include_timings = !flags.no_timings;
    const auto report =
        harness::run_solve(scenario, flags.ga_config, flags.newton_config, mode, options);
    write_report(report, flags);
    return harness::all_converged(report) ? 0 : 2;
}

int run_sweep_command(const CommonFlags& flags, const std::vector<int>& n_list) {
    const auto scenario = load_with_overrides(flags);
    harness::RunOptions options;
    options.threads = flags.threads;
    options.include_timings = !flags.no_timings;
    const auto report = harness::run_experiment2(scenario, n_list, flags.ga_config,
                                                 flags.newton_config, options);
    write_report(report, flags);
    return 0;
}

int run_synth_command(const CommonFlags& flags, const std::string& out_path) {
    const auto scenario = load_with_overrides(flags);
    const auto measured = harness::synthesize_measurements(scenario);
    const std::string payload = harness::measurement_set_to_json(measured).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw ConfigError("cannot write measurement file: " + out_path);
        out << payload;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RSSI-based relative positioning of small rovers: GA seeding plus "
                 "Newton refinement"};
    app.set_version_flag("--version", std::string(roverloc::kToolVersion));
    app.require_subcommand(1);

    CommonFlags solve_flags;
    std::string mode = "ga-newton";
    auto* solve = app.add_subcommand("solve", "Estimate every rover of a scenario");
    add_common_flags(*solve, solve_flags, true);
    solve->add_option("--mode", mode, "Estimation mode")
        ->check(CLI::IsMember({"ga", "ga-newton"}));

    CommonFlags sweep_flags;
    std::vector<int> n_list{2, 4, 8};
    auto* sweep = app.add_subcommand("sweep", "GA-only restart-budget sweep plus a "
                                              "GA+Newton comparison row");
    add_common_flags(*sweep, sweep_flags, true);
    sweep->add_option("--n", n_list, "Restart budgets n (runs n*n restarts each)")
        ->delimiter(',');

    CommonFlags synth_flags;
    std::string synth_out;
    auto* synth = app.add_subcommand("synth", "Dump the synthesized measurement set as JSON");
    add_common_flags(*synth, synth_flags, false);
    synth->add_option("--noise-sigma", synth_flags.noise_sigma,
                      "Gaussian RSSI noise in dBm (overrides the scenario's)");
    synth->add_option("--out", synth_out, "Output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return run_solve_command(solve_flags, mode);
        if (sweep->parsed())
            return run_sweep_command(sweep_flags, n_list);
        if (synth->parsed())
            return run_synth_command(synth_flags, synth_out);
    } catch (const roverloc::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
