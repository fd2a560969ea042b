#include "roverloc/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "roverloc/errors.hpp"
#include "roverloc/rng.hpp"
#include "roverloc/version.hpp"

namespace roverloc::harness {

using nlohmann::json;

namespace {

constexpr std::uint64_t kNoiseStreamTag = 0x6e6f697365ULL; // measurement noise streams

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double require_number(const json& j, const std::string& field, const std::string& context) {
    if (!j.contains(field) || !j[field].is_number())
        throw ConfigError(context + ": missing or non-numeric field '" + field + "'");
    return j[field].get<double>();
}

double optional_number(const json& j, const std::string& field, double fallback,
                       const std::string& context) {
    if (!j.contains(field))
        return fallback;
    if (!j[field].is_number())
        throw ConfigError(context + ": non-numeric field '" + field + "'");
    return j[field].get<double>();
}

} // namespace

// ---------------------------------------------------------------------------
// Scenario I/O

void validate(const Scenario& scenario) {
    std::vector<int> ids;
    for (const auto& rover : scenario.rovers) {
        const auto& p = rover.pose;
        if (!std::isfinite(p.x_mm) || !std::isfinite(p.y_mm) || !std::isfinite(p.heading_rad))
            throw ConfigError("scenario '" + scenario.name + "': rover " +
                              std::to_string(rover.id) + " has non-finite pose fields");
        ids.push_back(rover.id);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw ConfigError("scenario '" + scenario.name + "': duplicate rover ids");

    const RoverSpec* origin = find_rover(scenario, 0);
    if (origin == nullptr || origin->pose.x_mm != 0.0 || origin->pose.y_mm != 0.0)
        throw ConfigError("scenario '" + scenario.name +
                          "': rover 0 must exist and sit at the origin");

    for (const auto& rover : scenario.rovers) {
        if (rover.pose.heading_rad != origin->pose.heading_rad)
            throw ConfigError("scenario '" + scenario.name +
                              "': all rovers must share one heading");
        if (rover.id != 0 && rover.pose.x_mm < 0.0)
            throw ConfigError("scenario '" + scenario.name + "': rover " +
                              std::to_string(rover.id) +
                              " has x < 0; only the first and fourth quadrants are supported");
    }
    if (!std::isfinite(scenario.noise_sigma_dbm) || scenario.noise_sigma_dbm < 0.0)
        throw ConfigError("scenario '" + scenario.name + "': noise_sigma must be >= 0");
}

const RoverSpec* find_rover(const Scenario& scenario, int id) {
    for (const auto& rover : scenario.rovers)
        if (rover.id == id)
            return &rover;
    return nullptr;
}

Scenario scenario_from_json(const json& j, const std::string& context) {
    if (!j.is_object())
        throw ConfigError(context + ": scenario must be a JSON object");
    Scenario s;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw ConfigError(context + ": field 'name' must be a string");
        s.name = j["name"].get<std::string>();
    }
    s.noise_sigma_dbm = optional_number(j, "noise_sigma", 0.0, context);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            throw ConfigError(context + ": field 'seed' must be an integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    if (!j.contains("rovers") || !j["rovers"].is_array() || j["rovers"].empty())
        throw ConfigError(context + ": field 'rovers' must be a non-empty array");
    int index = 0;
    for (const auto& rj : j["rovers"]) {
        const std::string rc = context + ": rovers[" + std::to_string(index++) + "]";
        if (!rj.is_object())
            throw ConfigError(rc + ": must be an object");
        if (!rj.contains("id") || !rj["id"].is_number_integer())
            throw ConfigError(rc + ": missing or non-integer field 'id'");
        RoverSpec rover;
        rover.id = rj["id"].get<int>();
        rover.pose.x_mm = require_number(rj, "x", rc);
        rover.pose.y_mm = require_number(rj, "y", rc);
        rover.pose.heading_rad = model::wrap_angle(optional_number(rj, "heading", 0.0, rc));
        s.rovers.push_back(rover);
    }
    validate(s);
    return s;
}

json scenario_to_json(const Scenario& scenario) {
    json j;
    j["name"] = scenario.name;
    j["noise_sigma"] = scenario.noise_sigma_dbm;
    j["seed"] = scenario.seed;
    j["rovers"] = json::array();
    for (const auto& rover : scenario.rovers) {
        json rj;
        rj["id"] = rover.id;
        rj["x"] = rover.pose.x_mm;
        rj["y"] = rover.pose.y_mm;
        rj["heading"] = rover.pose.heading_rad;
        j["rovers"].push_back(rj);
    }
    return j;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open scenario file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario parse error in " + path.string() + ": " + e.what());
    }
    return scenario_from_json(j, path.string());
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write scenario file: " + path.string());
    out << scenario_to_json(scenario).dump(2) << '\n';
    if (!out)
        throw ConfigError("failed writing scenario file: " + path.string());
}

// ---------------------------------------------------------------------------
// Measurement synthesis

pipeline::MeasurementSet synthesize_measurements(const Scenario& scenario) {
    validate(scenario);
    const RoverSpec* origin = find_rover(scenario, 0);

    std::vector<const RoverSpec*> targets;
    for (const auto& rover : scenario.rovers)
        if (rover.id != 0)
            targets.push_back(&rover);
    std::sort(targets.begin(), targets.end(),
              [](const auto* a, const auto* b) { return a->id < b->id; });

    pipeline::MeasurementSet out;
    out.noise_sigma_dbm = scenario.noise_sigma_dbm;
    const std::uint64_t noise_root = derive_stream(scenario.seed, kNoiseStreamTag);
    for (const auto* rover : targets) {
        if (rover->pose.x_mm == origin->pose.x_mm && rover->pose.y_mm == origin->pose.y_mm)
            throw std::domain_error("synthesize_measurements: target rover " +
                                    std::to_string(rover->id) + " sits at the origin");
        // Centre-to-centre geometry in the origin rover's body frame.
        const auto rel =
            model::relative_position(origin->pose, rover->pose, {0.0, 0.0}, {0.0, 0.0});
        const double phi = model::horizontal_angle(rel);
        const model::Channel channels[] = {model::Channel::AA, model::Channel::BB};
        for (int c = 0; c < 2; ++c) {
            double value = model::rssi_2d(channels[c], rel.x_mm, rel.y_mm, phi);
            if (scenario.noise_sigma_dbm > 0.0) {
                // One stream per (rover, channel): sample order cannot matter.
                Rng rng(derive_stream(noise_root,
                                      static_cast<std::uint64_t>(rover->id) * 4ULL +
                                          static_cast<std::uint64_t>(c)));
                value += rng.normal(scenario.noise_sigma_dbm);
            }
            out.samples.push_back({channels[c], value, {0, rover->id}});
        }
    }
    return out;
}

json measurement_set_to_json(const pipeline::MeasurementSet& measured) {
    json j;
    j["noise_sigma"] = measured.noise_sigma_dbm;
    j["samples"] = json::array();
    for (const auto& s : measured.samples) {
        json sj;
        sj["pair"] = {s.rover_pair.first, s.rover_pair.second};
        sj["channel"] = std::string(model::to_string(s.channel));
        sj["value_dbm"] = s.value_dbm;
        j["samples"].push_back(sj);
    }
    return j;
}

pipeline::MeasurementSet measurement_set_from_json(const json& j) {
    pipeline::MeasurementSet out;
    out.noise_sigma_dbm = optional_number(j, "noise_sigma", 0.0, "measurement set");
    if (!j.contains("samples") || !j["samples"].is_array())
        throw ConfigError("measurement set: field 'samples' must be an array");
    for (const auto& sj : j["samples"]) {
        model::RssiSample s;
        if (!sj.contains("pair") || !sj["pair"].is_array() || sj["pair"].size() != 2)
            throw ConfigError("measurement set: sample field 'pair' must be [from, to]");
        s.rover_pair = {sj["pair"][0].get<int>(), sj["pair"][1].get<int>()};
        s.channel = model::channel_from_string(sj.value("channel", ""));
        s.value_dbm = require_number(sj, "value_dbm", "measurement sample");
        out.samples.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Experiments

namespace {

RoverRow ga_row_of(const pipeline::EstimationResult& r) {
    RoverRow row;
    row.rover = r.rover_index;
    row.actual_x_mm = r.actual.x_mm;
    row.actual_y_mm = r.actual.y_mm;
    if (r.failure) {
        row.est_x_mm = std::numeric_limits<double>::quiet_NaN();
        row.est_y_mm = std::numeric_limits<double>::quiet_NaN();
        row.rel_error = std::numeric_limits<double>::quiet_NaN();
        row.status = "measurement_inconsistent";
    } else {
        row.est_x_mm = r.ga_seed[0];
        row.est_y_mm = r.ga_seed[1];
        row.rel_error = r.ga_relative_error;
        row.status = "ga_only";
    }
    return row;
}

ExperimentReport report_skeleton(const Scenario& scenario, const ga::GaConfig& ga_config,
                                 const newton::NewtonConfig& newton_config,
                                 const RunOptions& options) {
    ExperimentReport report;
    report.scenario_name = scenario.name;
    report.seed = scenario.seed;
    report.tool_version = std::string(kToolVersion);
    report.ga_config = ga_config;
    report.newton_config = newton_config;
    report.noise_sigma_dbm = scenario.noise_sigma_dbm;
    report.include_timings = options.include_timings;
    return report;
}

} // namespace

ExperimentReport run_solve(const Scenario& scenario, const ga::GaConfig& ga_config,
                           const newton::NewtonConfig& newton_config, pipeline::Mode mode,
                           const RunOptions& options) {
    ExperimentReport report = report_skeleton(scenario, ga_config, newton_config, options);
    report.mode = mode == pipeline::Mode::GaNewton ? "ga-newton" : "ga";

    const auto run = pipeline::run_scenario(scenario, ga_config, newton_config, mode,
                                            options.threads);
    for (const auto& r : run.results) {
        report.ga_rows.push_back(ga_row_of(r));
        report.ga_seconds += r.timings.ga_seconds;
        report.newton_seconds += r.timings.newton_seconds;
        if (r.newton_outcome) {
            RoverRow row;
            row.rover = r.rover_index;
            row.actual_x_mm = r.actual.x_mm;
            row.actual_y_mm = r.actual.y_mm;
            row.est_x_mm = r.newton_outcome->solution_mm[0];
            row.est_y_mm = r.newton_outcome->solution_mm[1];
            row.rel_error = *r.newton_relative_error;
            row.iterations = r.newton_outcome->iterations;
            row.status = std::string(newton::to_string(r.newton_outcome->status));
            report.newton_rows.push_back(row);
        }
    }
    report.ga_average = run.summary.mean_ga_relative_error;
    if (run.summary.mean_newton_relative_error)
        report.newton_average = *run.summary.mean_newton_relative_error;
    report.total_seconds = run.summary.total_seconds;
    return report;
}

ExperimentReport run_experiment1(const Scenario& scenario, const ga::GaConfig& ga_config,
                                 const newton::NewtonConfig& newton_config,
                                 const RunOptions& options) {
    return run_solve(scenario, ga_config, newton_config, pipeline::Mode::GaNewton, options);
}

ExperimentReport run_experiment2(const Scenario& scenario, const std::vector<int>& n_list,
                                 const ga::GaConfig& ga_config,
                                 const newton::NewtonConfig& newton_config,
                                 const RunOptions& options) {
    if (n_list.empty())
        throw ConfigError("experiment 2: the list of restart budgets is empty");
    for (int n : n_list)
        if (n < 1)
            throw ConfigError("experiment 2: restart budgets must be >= 1");

    ExperimentReport report = report_skeleton(scenario, ga_config, newton_config, options);
    report.mode = "sweep";

    const auto t0 = std::chrono::steady_clock::now();
    for (int n : n_list) {
        ga::GaConfig cfg = ga_config;
        cfg.restarts = n * n;
        const auto run =
            pipeline::run_scenario(scenario, cfg, newton_config, pipeline::Mode::GaOnly,
                                   options.threads);
        report.sweep.push_back({std::to_string(n), run.summary.mean_ga_relative_error,
                                run.summary.total_seconds});
    }
    const auto run = pipeline::run_scenario(scenario, ga_config, newton_config,
                                            pipeline::Mode::GaNewton, options.threads);
    report.sweep.push_back({"ga_newton",
                            run.summary.mean_newton_relative_error.value_or(
                                std::numeric_limits<double>::quiet_NaN()),
                            run.summary.total_seconds});
    report.total_seconds = seconds_since(t0);
    return report;
}

// ---------------------------------------------------------------------------
// Output

std::string format_fixed(double value, int places) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0.0 ? "inf" : "-inf";

    // Shortest decimal representation that round-trips to `value`.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    std::string s(buf, res.ptr);

    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.erase(0, 1);
    }
    int exp10 = 0;
    if (const auto epos = s.find_first_of("eE"); epos != std::string::npos) {
        exp10 = std::stoi(s.substr(epos + 1));
        s.erase(epos);
    }
    std::string digits;
    int point = 0; // digits before the decimal point
    if (const auto dot = s.find('.'); dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        point = static_cast<int>(dot);
    } else {
        digits = s;
        point = static_cast<int>(s.size());
    }
    // Normalize to value = 0.digits * 10^exp with no leading zeros.
    int exp = point + exp10;
    std::size_t lead = 0;
    while (lead < digits.size() && digits[lead] == '0')
        ++lead;
    digits.erase(0, lead);
    exp -= static_cast<int>(lead);

    // Round half-even to keep = exp + places digits.
    const long keep = static_cast<long>(exp) + places;
    if (digits.empty() || keep < 0) {
        digits.clear();
    } else if (keep == 0) {
        // Kept value is zero (even); round up only strictly above one half.
        const bool up = digits[0] > '5' ||
                        (digits[0] == '5' && digits.find_first_not_of('0', 1) != std::string::npos);
        digits = up ? "1" : "";
        exp = 1 - places;
    } else if (static_cast<std::size_t>(keep) < digits.size()) {
        const std::string dropped = digits.substr(static_cast<std::size_t>(keep));
        digits.erase(static_cast<std::size_t>(keep));
        bool up = dropped[0] > '5';
        if (dropped[0] == '5') {
            if (dropped.find_first_not_of('0', 1) != std::string::npos)
                up = true;
            else
                up = ((digits.back() - '0') % 2) != 0; // exact half: to even
        }
        if (up) {
            auto i = digits.size();
            while (i > 0) {
                --i;
                if (digits[i] != '9') {
                    ++digits[i];
                    break;
                }
                digits[i] = '0';
                if (i == 0) {
                    digits.insert(digits.begin(), '1');
                    ++exp;
                }
            }
        }
    }

    if (digits.empty()) { // rounded to zero; drop the sign
        std::string out = "0";
        if (places > 0)
            out += "." + std::string(static_cast<std::size_t>(places), '0');
        return out;
    }

    const auto digit_at = [&](long idx) {
        return (idx >= 0 && idx < static_cast<long>(digits.size())) ? digits[static_cast<std::size_t>(idx)]
                                                                    : '0';
    };
    std::string out;
    if (negative)
        out += '-';
    if (exp <= 0) {
        out += '0';
    } else {
        for (long i = 0; i < exp; ++i)
            out += digit_at(i);
    }
    if (places > 0) {
        out += '.';
        for (long p = 1; p <= places; ++p)
            out += digit_at(p + exp - 1);
    }
    return out;
}

namespace {

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos)
        return raw;
    std::string quoted = "\"";
    for (const char c : raw) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string rover_rows_to_csv(const std::vector<RoverRow>& rows) {
    std::string out = "rover,actual_x_mm,actual_y_mm,est_x_mm,est_y_mm,rel_error,iterations,status\n";
    for (const auto& row : rows) {
        out += std::to_string(row.rover) + ',' + format_fixed(row.actual_x_mm, 6) + ',' +
               format_fixed(row.actual_y_mm, 6) + ',' + format_fixed(row.est_x_mm, 6) + ',' +
               format_fixed(row.est_y_mm, 6) + ',' + format_fixed(row.rel_error, 6) + ',' +
               std::to_string(row.iterations) + ',' + csv_field(row.status) + '\n';
    }
    return out;
}

json rover_rows_to_json(const std::vector<RoverRow>& rows, bool with_iterations) {
    json arr = json::array();
    for (const auto& row : rows) {
        json rj;
        rj["rover"] = row.rover;
        rj["actual"] = {row.actual_x_mm, row.actual_y_mm};
        rj["estimated"] = {row.est_x_mm, row.est_y_mm};
        rj["rel_error"] = row.rel_error;
        if (with_iterations)
            rj["iterations"] = row.iterations;
        rj["status"] = row.status;
        arr.push_back(rj);
    }
    return arr;
}

} // namespace

std::string report_to_csv(const ExperimentReport& report) {
    if (!report.sweep.empty()) {
        std::string out = report.include_timings ? "n,avg_rel_error,seconds\n"
                                                 : "n,avg_rel_error\n";
        for (const auto& row : report.sweep) {
            out += csv_field(row.label) + ',' + format_fixed(row.avg_rel_error, 6);
            if (report.include_timings)
                out += ',' + format_fixed(row.seconds, 6);
            out += '\n';
        }
        return out;
    }
    return rover_rows_to_csv(report.newton_rows.empty() ? report.ga_rows : report.newton_rows);
}

json report_to_json(const ExperimentReport& report) {
    json j;
    j["scenario"] = report.scenario_name;
    j["mode"] = report.mode;
    j["seed"] = report.seed;
    j["tool_version"] = report.tool_version;

    json ga_cfg;
    ga_cfg["population_size"] = report.ga_config.population_size;
    ga_cfg["generations"] = report.ga_config.generations;
    ga_cfg["crossover_rate"] = report.ga_config.crossover_rate;
    ga_cfg["mutation_rate"] = report.ga_config.mutation_rate;
    ga_cfg["restarts"] = report.ga_config.restarts;
    ga_cfg["bits_per_var"] = report.ga_config.bits_per_var;
    ga_cfg["bounds"] = {{report.ga_config.bounds[0].lo_mm, report.ga_config.bounds[0].hi_mm},
                        {report.ga_config.bounds[1].lo_mm, report.ga_config.bounds[1].hi_mm}};
    json nt_cfg;
    nt_cfg["step_tolerance"] = report.newton_config.step_tolerance_mm;
    nt_cfg["max_iterations"] = report.newton_config.max_iterations;
    nt_cfg["fd_step"] = report.newton_config.fd_step;
    j["config"] = {{"ga", ga_cfg}, {"newton", nt_cfg}, {"noise_sigma", report.noise_sigma_dbm}};

    j["ga_rows"] = rover_rows_to_json(report.ga_rows, false);
    j["newton_rows"] = rover_rows_to_json(report.newton_rows, true);

    json averages;
    averages["ga"] = report.ga_average ? json(*report.ga_average) : json(nullptr);
    averages["newton"] = report.newton_average ? json(*report.newton_average) : json(nullptr);
    j["averages"] = averages;

    if (!report.sweep.empty()) {
        json arr = json::array();
        for (const auto& row : report.sweep) {
            json rj;
            rj["n"] = row.label;
            rj["avg_rel_error"] = row.avg_rel_error;
            if (report.include_timings)
                rj["seconds"] = row.seconds;
            arr.push_back(rj);
        }
        j["sweep"] = arr;
    }
    if (report.include_timings)
        j["timings"] = {{"total_seconds", report.total_seconds},
                        {"ga_seconds", report.ga_seconds},
                        {"newton_seconds", report.newton_seconds}};
    return j;
}

std::string report_to_table(const ExperimentReport& report) {
    std::ostringstream out;
    out << "scenario: " << report.scenario_name << "  mode: " << report.mode
        << "  seed: " << report.seed << '\n';

    const auto print_rows = [&](const std::string& title, const std::vector<RoverRow>& rows,
                                bool iterations) {
        if (rows.empty())
            return;
        out << '\n' << title << '\n';
        out << std::left << std::setw(6) << "rover" << std::setw(26) << "actual (mm)"
            << std::setw(30) << "estimated (mm)" << std::setw(12) << "rel_error";
        if (iterations)
            out << std::setw(8) << "iters";
        out << "status" << '\n';
        for (const auto& row : rows) {
            const std::string actual =
                "(" + format_fixed(row.actual_x_mm, 1) + ", " + format_fixed(row.actual_y_mm, 1) + ")";
            const std::string est =
                "(" + format_fixed(row.est_x_mm, 3) + ", " + format_fixed(row.est_y_mm, 3) + ")";
            out << std::left << std::setw(6) << row.rover << std::setw(26) << actual
                << std::setw(30) << est << std::setw(12) << format_fixed(row.rel_error, 6);
            if (iterations)
                out << std::setw(8) << row.iterations;
            out << row.status << '\n';
        }
    };
    print_rows("GA seeds", report.ga_rows, false);
    print_rows("Newton refinement", report.newton_rows, true);

    if (report.ga_average)
        out << '\n' << "GA average rel_error:     " << format_fixed(*report.ga_average, 6) << '\n';
    if (report.newton_average)
        out << "Newton average rel_error: " << format_fixed(*report.newton_average, 6) << '\n';

    if (!report.sweep.empty()) {
        out << '\n' << std::left << std::setw(12) << "n" << std::setw(16) << "avg_rel_error";
        if (report.include_timings)
            out << "seconds";
        out << '\n';
        for (const auto& row : report.sweep) {
            out << std::left << std::setw(12) << row.label << std::setw(16)
                << format_fixed(row.avg_rel_error, 6);
            if (report.include_timings)
                out << format_fixed(row.seconds, 3);
            out << '\n';
        }
    }
    if (report.include_timings)
        out << '\n' << "total time: " << format_fixed(report.total_seconds, 3) << " s\n";
    return out.str();
}

void emit_report(const ExperimentReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
    std::string payload;
    switch (format) {
    case ReportFormat::Csv:
        payload = report_to_csv(report);
        break;
    case ReportFormat::Json:
        payload = report_to_json(report).dump(2) + '\n';
        break;
    case ReportFormat::PrettyTable:
        payload = report_to_table(report);
        break;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write report file: " + path.string());
    out << payload;
    if (!out)
        throw ConfigError("failed writing report file: " + path.string());
}

std::vector<RoverRow> parse_rover_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) ||
        line != "rover,actual_x_mm,actual_y_mm,est_x_mm,est_y_mm,rel_error,iterations,status")
        throw ConfigError("rover CSV: unexpected header");
    std::vector<RoverRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ','))
            fields.push_back(field);
        if (fields.size() != 8)
            throw ConfigError("rover CSV: expected 8 fields, got " +
                              std::to_string(fields.size()));
        RoverRow row;
        row.rover = std::stoi(fields[0]);
        row.actual_x_mm = std::stod(fields[1]);
        row.actual_y_mm = std::stod(fields[2]);
        row.est_x_mm = std::stod(fields[3]);
        row.est_y_mm = std::stod(fields[4]);
        row.rel_error = std::stod(fields[5]);
        row.iterations = std::stoi(fields[6]);
        row.status = fields[7];
        rows.push_back(row);
    }
    return rows;
}

bool all_converged(const ExperimentReport& report) {
    for (const auto& row : report.ga_rows)
        if (row.status != "ga_only")
            return false;
    for (const auto& row : report.newton_rows)
        if (row.status != "converged_step")
            return false;
    return true;
}

} // namespace roverloc::harness
