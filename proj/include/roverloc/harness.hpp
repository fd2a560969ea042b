#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "roverloc/pipeline.hpp"
#include "roverloc/scenario.hpp"

namespace roverloc::harness {

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);
Scenario scenario_from_json(const nlohmann::json& j, const std::string& context);
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Forward-model RSSI for every pair (0, i): AA and BB at the true bearing,
/// plus Gaussian noise of scenario.noise_sigma_dbm drawn from per-(rover,
/// channel) streams of the scenario seed. Throws std::domain_error if a
/// target sits at the origin.
pipeline::MeasurementSet synthesize_measurements(const Scenario& scenario);

nlohmann::json measurement_set_to_json(const pipeline::MeasurementSet& measured);
pipeline::MeasurementSet measurement_set_from_json(const nlohmann::json& j);

/// One per-rover result row (either the GA-seed table or the Newton table).
struct RoverRow {
    int rover = 0;
    double actual_x_mm = 0.0;
    double actual_y_mm = 0.0;
    double est_x_mm = 0.0;
    double est_y_mm = 0.0;
    double rel_error = 0.0;
    int iterations = 0;
    std::string status;
};

/// One restart-budget sweep row. `label` is the decimal n for GA-only rows
/// and "ga_newton" for the comparison row.
struct SweepRow {
    std::string label;
    double avg_rel_error = 0.0;
    double seconds = 0.0;
};

struct ExperimentReport {
    std::string scenario_name;
    std::string mode; // "ga" or "ga-newton"
    std::uint64_t seed = 0;
    std::string tool_version;
    ga::GaConfig ga_config{};
    newton::NewtonConfig newton_config{};
    double noise_sigma_dbm = 0.0;
    std::vector<RoverRow> ga_rows;
    std::vector<RoverRow> newton_rows; // empty in GA-only mode
    std::optional<double> ga_average;
    std::optional<double> newton_average;
    double total_seconds = 0.0;
    double ga_seconds = 0.0;     // summed over rovers
    double newton_seconds = 0.0; // summed over rovers
    std::vector<SweepRow> sweep;       // restart-budget sweep rows
    bool include_timings = true;
};

struct RunOptions {
    int threads = 1;
    bool include_timings = true;
};

/// Per-rover estimation over the whole scenario in the given mode;
/// the building block behind `solve` and both experiments.
ExperimentReport run_solve(const Scenario& scenario, const ga::GaConfig& ga_config,
                           const newton::NewtonConfig& newton_config, pipeline::Mode mode,
                           const RunOptions& options = {});

/// GA multi-start seeding plus Newton refinement for every rover: the
/// GA-seed table, the Newton table, and both averages.
ExperimentReport run_experiment1(const Scenario& scenario, const ga::GaConfig& ga_config,
                                 const newton::NewtonConfig& newton_config,
                                 const RunOptions& options = {});

/// GA-only estimation with restart budgets n^2 for each n in `n_list`
/// (average relative error and computing time per n), plus one GA+Newton
/// comparison row at the base config's restart budget.
ExperimentReport run_experiment2(const Scenario& scenario, const std::vector<int>& n_list,
                                 const ga::GaConfig& ga_config,
                                 const newton::NewtonConfig& newton_config,
                                 const RunOptions& options = {});

enum class ReportFormat { Csv, Json, PrettyTable };

/// Fixed-point decimal formatting with round-half-even applied to the
/// value's shortest round-trip decimal representation (so 0.0160055 at six
/// places is "0.016006", not the "0.016005" a binary-expansion round would
/// give).
std::string format_fixed(double value, int places);

/// Rover tables serialize as
///   rover,actual_x_mm,actual_y_mm,est_x_mm,est_y_mm,rel_error,iterations,status
/// with six decimal places; sweep reports as n,avg_rel_error[,seconds].
/// The CSV carries the final estimates (the Newton table when present).
std::string report_to_csv(const ExperimentReport& report);
nlohmann::json report_to_json(const ExperimentReport& report);
std::string report_to_table(const ExperimentReport& report);
void emit_report(const ExperimentReport& report, ReportFormat format,
                 const std::filesystem::path& path);

/// Parses a rover-table CSV back into rows (schema-stability check).
std::vector<RoverRow> parse_rover_csv(const std::string& csv);

/// True when every estimate converged (Newton rows all ConvergedStep and
/// no failure rows). Drives the CLI exit code.
bool all_converged(const ExperimentReport& report);

} // namespace roverloc::harness
