#include "tempwave/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tempwave/csv.hpp"
#include "tempwave/effective.hpp"
#include "tempwave/error.hpp"
#include "tempwave/experiments.hpp"
#include "tempwave/oracle.hpp"
#include "tempwave/svg.hpp"

namespace tempwave {
namespace {

namespace fs = std::filesystem;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void config_fail(std::size_t line, const std::string& msg) {
    fail(ErrorKind::config, "line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& value, std::size_t line, const std::string& key) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        config_fail(line, "cannot parse value '" + value + "' for key '" + key + "'");
    }
    if (pos != value.size()) {
        config_fail(line, "trailing characters in value '" + value + "' for key '" + key + "'");
    }
    return v;
}

std::size_t parse_count(const std::string& value, std::size_t line, const std::string& key) {
    const double v = parse_double(value, line, key);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e12) {
        config_fail(line, "key '" + key + "' needs a non-negative integer, got '" + value + "'");
    }
    return static_cast<std::size_t>(v);
}

bool parse_flag(const std::string& value, std::size_t line, const std::string& key) {
    if (value == "0" || value == "false") return false;
    if (value == "1" || value == "true") return true;
    config_fail(line, "key '" + key + "' needs 0/1 or true/false, got '" + value + "'");
}

void require(bool ok, std::size_t line, const std::string& msg) {
    if (!ok) config_fail(line, msg);
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(ErrorKind::config, "cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void save_svg(const std::vector<const FieldTrace*>& traces, const fs::path& path,
              const std::string& title) {
    std::ofstream out = open_out(path);
    write_traces_svg(traces, out, title);
}

fs::path resolved_out_dir(const RunConfig& config) {
    if (!config.out_dir.empty()) return config.out_dir;
    if (const char* env = std::getenv("TEMPWAVE_OUT"); env && *env) return env;
    return "out";
}

std::vector<double> resolved_grid(const RunConfig& config) {
    if (!(config.grid_max() > config.grid_min())) {
        fail(ErrorKind::config, "grid needs t_max > t_min");
    }
    return uniform_grid(config.grid_min(), config.grid_max(), config.samples);
}

int run_profile(const RunConfig& config, const fs::path& traces_dir) {
    const StepProfile profile = build_profile(config.params, config.n_cap);
    std::ofstream out = open_out(traces_dir / "profile.csv");
    write_profile_csv(profile, out, config.grid_min(), config.grid_max(),
                      config.samples);
    std::cout << "profile: N=" << profile.size() << " d=" << format_number(profile.d)
              << (profile.truncated ? " (truncated)" : "") << '\n';
    return 0;
}

int run_oracle(const RunConfig& config, const fs::path& traces_dir) {
    const StepProfile profile = build_profile(config.params, config.n_cap);
    const OracleField field(profile, config.params.kappa);
    const std::vector<double> grid = resolved_grid(config);
    const FieldTrace trace = field.trace(grid);
    const FieldTrace incident = incident_trace(config.params.kappa, grid);
    {
        std::ofstream out = open_out(traces_dir / "oracle.csv");
        write_trace_csv(trace, out);
    }
    save_svg({&incident, &trace}, traces_dir / "oracle.svg", "transfer-matrix field");
    std::cout << "oracle: N=" << profile.size()
              << " |R|=" << format_number(std::abs(field.coeffs().R))
              << " |tau|=" << format_number(std::abs(field.coeffs().tau)) << '\n';
    return 0;
}

int run_foldy_lax(const RunConfig& config, const fs::path& traces_dir) {
    const StepProfile profile = build_profile(config.params, config.n_cap);
    FoldyLaxSystem system = assemble_system(profile, config.params, config.capacity);
    solve_system(system);
    const std::vector<double> grid = resolved_grid(config);
    const FieldTrace trace = reconstruct_trace(system, grid, config.form);
    const FieldTrace incident = incident_trace(config.params.kappa, grid);
    {
        std::ofstream out = open_out(traces_dir / "foldy_lax.csv");
        write_trace_csv(trace, out);
    }
    save_svg({&incident, &trace}, traces_dir / "foldy_lax.svg",
             "interaction-system field");
    if (config.dump_system) {
        std::ofstream ma = open_out(traces_dir / "system_matrix.csv");
        dump_matrix_csv(system, ma);
        std::ofstream ch = open_out(traces_dir / "system_charges.csv");
        dump_charges_csv(system, ch);
    }
    std::cout << "foldy-lax: N=" << system.size()
              << " inv_norm=" << format_number(condition_estimate(system)) << '\n';
    return 0;
}

int run_effective(const RunConfig& config, const fs::path& traces_dir,
                  const fs::path& tables_dir) {
    const EffectiveSolution sol = effective_solution(config.params);
    const RegimeClass regime = classify(config.params, config.resonance_c);
    const std::vector<double> grid = resolved_grid(config);
    const FieldTrace trace = effective_trace(sol, grid);
    const FieldTrace incident = incident_trace(config.params.kappa, grid);
    {
        std::ofstream out = open_out(traces_dir / "effective.csv");
        write_trace_csv(trace, out);
    }
    save_svg({&incident, &trace}, traces_dir / "effective.svg", "effective-slab field");
    {
        std::ofstream out = open_out(tables_dir / "coefficients.csv");
        write_coefficient_report({{sol, regime}}, out);
    }
    std::cout << "effective: lambda=" << format_number(sol.lambda) << ' '
              << regime.describe() << '\n';
    return 0;
}

int run_compare(const RunConfig& config, const fs::path& traces_dir) {
    const std::vector<double> grid = resolved_grid(config);
    const ComparisonResult result =
        compare_traces(config.params, grid, config.capacity, config.resonance_c);
    const struct {
        const char* name;
        const FieldTrace* trace;
    } files[] = {
        {"compare_incident.csv", &result.incident},
        {"compare_oracle.csv", &result.oracle},
        {"compare_effective.csv", &result.effective},
    };
    for (const auto& f : files) {
        std::ofstream out = open_out(traces_dir / f.name);
        write_trace_csv(*f.trace, out);
    }
    std::vector<const FieldTrace*> traces = {&result.incident, &result.oracle,
                                             &result.effective};
    if (result.foldy_lax_present) {
        std::ofstream out = open_out(traces_dir / "compare_foldy_lax.csv");
        write_trace_csv(result.foldy_lax, out);
        traces.push_back(&result.foldy_lax);
    } else {
        std::cerr << "warning: " << result.skip_reason << '\n';
    }
    save_svg(traces, traces_dir / "compare.svg", "field comparison");
    std::cout << "compare: N=" << result.profile.size() << ' '
              << result.regime.describe()
              << " sup|oracle-effective|=" << format_number(result.sup_oracle_vs_effective);
    if (result.foldy_lax_present) {
        std::cout << " sup|fl-oracle|=" << format_number(result.sup_fl_vs_oracle)
                  << " inv_norm=" << format_number(result.condition);
    }
    std::cout << '\n';
    return 0;
}

int run_sweep(const RunConfig& config, const fs::path& sweeps_dir) {
    const SweepSpec spec = preset_sweep(config.sweep_name, config.params);
    const SlopeFit fit = convergence_sweep(spec);
    {
        std::ofstream out = open_out(sweeps_dir / (fit.name + ".csv"));
        write_sweep_csv(fit, out);
    }
    std::cout << "sweep " << fit.name << ": slope=" << format_number(fit.slope)
              << " r2=" << format_number(fit.r2)
              << " verdict=" << to_string(fit.verdict) << '\n';
    const bool must_pass =
        fit.name == "c2-slope" || fit.name == "single-slab";
    if (must_pass && fit.verdict != SweepVerdict::pass) {
        fail(ErrorKind::mismatch,
             "sweep '" + fit.name + "' is required to pass, got " + to_string(fit.verdict));
    }
    if (fit.verdict == SweepVerdict::fail) {
        fail(ErrorKind::mismatch,
             "sweep '" + fit.name + "': error grew with decreasing delta");
    }
    return 0;
}

int run_tables(const fs::path& tables_dir) {
    const Table1Result t1 = reproduce_table1();
    const Table2Result t2 = reproduce_table2();
    {
        std::ofstream out = open_out(tables_dir / "table1.csv");
        write_table1_csv(t1, out);
    }
    {
        std::ofstream out = open_out(tables_dir / "table2.csv");
        write_table2_csv(t2, out);
    }
    std::cout << "tables: rows 1-4 " << (t1.rows_1_to_4_match ? "match" : "MISMATCH")
              << ", row 5 inconsistency " << (t1.row5_mismatch_detected ? "detected" : "ABSENT")
              << ", second table " << (t2.all_match ? "matches" : "MISMATCH") << '\n';
    if (!t1.mismatch_report.empty()) std::cout << "note: " << t1.mismatch_report << '\n';
    if (!t1.rows_1_to_4_match || !t2.all_match) {
        fail(ErrorKind::mismatch, "pinned reference values not reproduced");
    }
    return 0;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    std::istringstream stream(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        if (const std::size_t hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string entry = trim(raw);
        if (entry.empty()) continue;
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos) {
            config_fail(line, "expected 'key = value', got '" + entry + "'");
        }
        const std::string key = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));
        if (key.empty()) config_fail(line, "missing key before '='");
        if (value.empty()) config_fail(line, "missing value for key '" + key + "'");

        if (key == "T") {
            config.params.T = parse_double(value, line, key);
            require(config.params.T > 0.0, line, "T must be positive");
        } else if (key == "delta") {
            config.params.delta = parse_double(value, line, key);
            require(config.params.delta > 0.0 && config.params.delta < 1.0, line,
                    "delta must lie in (0, 1)");
        } else if (key == "h") {
            config.params.h = parse_double(value, line, key);
            require(config.params.h > 0.0 && config.params.h <= 1.0, line,
                    "h must lie in (0, 1]");
        } else if (key == "l") {
            config.params.l = parse_double(value, line, key);
            require(config.params.l > 0.0 && config.params.l <= 1.0, line,
                    "l must lie in (0, 1]");
        } else if (key == "C") {
            config.params.C = parse_double(value, line, key);
            require(config.params.C >= 0.0, line, "C must be non-negative");
        } else if (key == "kappa") {
            config.params.kappa = parse_double(value, line, key);
            require(config.params.kappa > 0.0, line, "kappa must be positive");
        } else if (key == "t_min") {
            config.t_min = parse_double(value, line, key);
        } else if (key == "t_max") {
            config.t_max = parse_double(value, line, key);
        } else if (key == "samples") {
            config.samples = parse_count(value, line, key);
            require(config.samples >= 2, line, "samples must be at least 2");
        } else if (key == "n_cap") {
            config.n_cap = parse_count(value, line, key);
            require(*config.n_cap >= 1, line, "n_cap must be at least 1");
        } else if (key == "capacity") {
            config.capacity = parse_count(value, line, key);
            require(config.capacity >= 1, line, "capacity must be at least 1");
        } else if (key == "c") {
            config.resonance_c = parse_double(value, line, key);
            require(config.resonance_c > 0.0, line, "c must be positive");
        } else if (key == "reconstruction") {
            if (value == "full") {
                config.form = ReconstructionForm::full_kernel;
            } else if (value == "printed") {
                config.form = ReconstructionForm::printed;
            } else {
                config_fail(line, "reconstruction must be 'full' or 'printed'");
            }
        } else if (key == "dump_system") {
            config.dump_system = parse_flag(value, line, key);
        } else if (key == "sweep") {
            config.sweep_name = value;
        } else if (key == "out") {
            config.out_dir = value;
        } else {
            config_fail(line, "unknown key '" + key + "'");
        }
    }
    if (config.t_min && config.t_max) {
        require(*config.t_max > *config.t_min, line, "t_max must exceed t_min");
    }
    return config;
}

int dispatch(const RunConfig& config, const std::string& subcommand) {
    try {
        config.params.validate();
        const fs::path out_dir = resolved_out_dir(config);
        const fs::path tables_dir = out_dir / "tables";
        const fs::path traces_dir = out_dir / "traces";
        const fs::path sweeps_dir = out_dir / "sweeps";
        std::error_code ec;
        for (const fs::path& dir : {tables_dir, traces_dir, sweeps_dir}) {
            fs::create_directories(dir, ec);
            if (ec) {
                fail(ErrorKind::config,
                     "cannot create output directory '" + dir.string() + "'");
            }
        }
        if (subcommand == "profile") return run_profile(config, traces_dir);
        if (subcommand == "oracle") return run_oracle(config, traces_dir);
        if (subcommand == "foldy-lax") return run_foldy_lax(config, traces_dir);
        if (subcommand == "effective") {
            return run_effective(config, traces_dir, tables_dir);
        }
        if (subcommand == "compare") return run_compare(config, traces_dir);
        if (subcommand == "sweep") return run_sweep(config, sweeps_dir);
        if (subcommand == "tables") return run_tables(tables_dir);
        fail(ErrorKind::config,
             "unknown subcommand '" + subcommand +
                 "'; valid: profile, oracle, foldy-lax, effective, compare, sweep, tables");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ErrorKind::numerical);
    }
}

}  // namespace tempwave
