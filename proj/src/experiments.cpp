#include "tempwave/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "tempwave/csv.hpp"
#include "tempwave/oracle.hpp"
#include "tempwave/quadrature.hpp"

namespace tempwave {
namespace {

constexpr double kPi = std::numbers::pi;

// Printed values are given to four decimals; one unit in the last digit.
constexpr double kTable1Tol = 1e-4 + 1e-12;
constexpr double kTable2Tol = 5e-5 + 1e-9;

// Below this every sweep error counts as numerical floor.
constexpr double kFloor = 1e-12;

std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

RegimeParams study_params(double l, double h, double delta) {
    RegimeParams p;
    p.T = 10.0;
    p.kappa = 1.0;
    p.C = 1.0;
    p.l = l;
    p.h = h;
    p.delta = delta;
    return p;
}

StepProfile equivalent_slab(const EffectiveSolution& sol) {
    StepProfile slab;
    slab.centers = {0.5 * sol.T};
    slab.half_width = 0.5 * sol.T;
    slab.amplitude = sol.slab_amplitude;
    slab.T = sol.T;
    slab.d = sol.T;
    return slab;
}

}  // namespace

Table1Result reproduce_table1() {
    // (l, h, delta, printed lambda, printed lambda T / pi, printed tan).
    const double pinned[5][6] = {
        {0.1, 0.821, 1e-3, 1.2568, 4.0004, 0.0012},
        {0.1, 0.500, 1e-7, 1.0008, 3.1856, 0.6597},
        {0.9, 0.717, 1e-3, 8.4828, 27.0016, 0.0049},
        {0.9, 0.369, 1e-7, 8.7968, 28.0011, 0.0033},
        {0.9, 0.538, 1e-7, 34.1139, 108.6517, -1.9368},
    };

    Table1Result result;
    for (const auto& row : pinned) {
        Table1Row r;
        r.l = row[0];
        r.h = row[1];
        r.delta = row[2];
        r.printed_lambda = row[3];
        r.printed_ratio = row[4];
        r.printed_tan = row[5];

        const RegimeParams p = study_params(r.l, r.h, r.delta);
        r.lambda = p.lambda();
        r.ratio = r.lambda * p.T / kPi;
        r.tan_lambda_t = std::tan(r.lambda * p.T);
        r.lambda_matches = std::abs(r.lambda - r.printed_lambda) <= kTable1Tol;
        r.ratio_matches = std::abs(r.ratio - r.printed_ratio) <= kTable1Tol;
        r.tan_matches = std::abs(r.tan_lambda_t - r.printed_tan) <= kTable1Tol;
        result.rows.push_back(r);
    }

    result.rows_1_to_4_match = true;
    for (std::size_t i = 0; i < 4; ++i) {
        result.rows_1_to_4_match = result.rows_1_to_4_match && result.rows[i].matches();
    }

    const Table1Row& r5 = result.rows[4];
    result.row5_mismatch_detected = !r5.lambda_matches && r5.ratio_matches;
    if (!r5.matches()) {
        const double ratio_from_printed = r5.printed_lambda * 10.0 / kPi;
        result.mismatch_report =
            "row 5: recomputed lambda " + fmt4(r5.lambda) + " vs printed " +
            fmt4(r5.printed_lambda) + "; lambda*T/pi from the printed lambda would be " +
            fmt4(ratio_from_printed) + " vs printed ratio " + fmt4(r5.printed_ratio) +
            ", while the recomputed ratio " + fmt4(r5.ratio) +
            " matches the printed ratio column; the printed lambda cell is the "
            "inconsistent one";
    }
    return result;
}

Table2Result reproduce_table2() {
    // (h, l, printed omega_p^2, printed lambda); T=10, kappa=1, C=1, delta=1e-3.
    const double pinned[3][4] = {
        {0.100, 0.1, 1.9953, 1.0020},
        {0.100, 0.9, 1.9953, 1.4142},
        {0.342, 0.9, 10.6170, 2.5142},
    };

    Table2Result result;
    result.all_match = true;
    for (const auto& row : pinned) {
        Table2Row r;
        r.h = row[0];
        r.l = row[1];
        r.printed_omega_p_sq = row[2];
        r.printed_lambda = row[3];

        const RegimeParams p = study_params(r.l, r.h, 1e-3);
        r.omega_p_sq = p.amplitude();
        r.lambda = p.lambda();
        r.matches = std::abs(r.omega_p_sq - r.printed_omega_p_sq) <= kTable2Tol &&
                    std::abs(r.lambda - r.printed_lambda) <= kTable2Tol;
        result.all_match = result.all_match && r.matches;
        result.rows.push_back(r);
    }
    return result;
}

void write_table1_csv(const Table1Result& table, std::ostream& out) {
    out << "row,l,h,delta,lambda,lambdaT_over_pi,tan_lambdaT,"
           "printed_lambda,printed_lambdaT_over_pi,printed_tan_lambdaT,match\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const Table1Row& r = table.rows[i];
        out << (i + 1) << ',' << format_number(r.l) << ',' << format_number(r.h)
            << ',' << format_number(r.delta) << ',' << format_number(r.lambda)
            << ',' << format_number(r.ratio) << ','
            << format_number(r.tan_lambda_t) << ','
            << format_number(r.printed_lambda) << ','
            << format_number(r.printed_ratio) << ','
            << format_number(r.printed_tan) << ',' << (r.matches() ? 1 : 0)
            << '\n';
    }
    if (!table.mismatch_report.empty()) {
        out << "# " << table.mismatch_report << '\n';
    }
}

void write_table2_csv(const Table2Result& table, std::ostream& out) {
    out << "row,h,l,omega_p_sq,lambda,printed_omega_p_sq,printed_lambda,match\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const Table2Row& r = table.rows[i];
        out << (i + 1) << ',' << format_number(r.h) << ',' << format_number(r.l)
            << ',' << format_number(r.omega_p_sq) << ','
            << format_number(r.lambda) << ','
            << format_number(r.printed_omega_p_sq) << ','
            << format_number(r.printed_lambda) << ',' << (r.matches ? 1 : 0)
            << '\n';
    }
}

ComparisonResult compare_traces(const RegimeParams& params,
                                const std::vector<double>& grid,
                                std::size_t capacity, double resonance_constant) {
    params.validate();
    ComparisonResult result;
    result.profile = build_profile(params);
    result.regime = classify(params, resonance_constant);
    result.incident = incident_trace(params.kappa, grid);
    result.oracle = oracle_trace(result.profile, params.kappa, grid);
    result.effective = effective_trace(effective_solution(params), grid);
    result.sup_oracle_vs_effective = sup_difference(result.oracle, result.effective);
    result.sup_effective_vs_incident =
        sup_difference(result.effective, result.incident);

    if (result.profile.size() > capacity) {
        result.skip_reason = "system size " + std::to_string(result.profile.size()) +
                             " exceeds capacity " + std::to_string(capacity) +
                             "; algebraic-system trace skipped";
        return result;
    }
    FoldyLaxSystem system = assemble_system(result.profile, params, capacity);
    solve_system(system);
    result.foldy_lax = reconstruct_trace(system, grid);
    result.foldy_lax_present = true;
    result.condition = condition_estimate(system);
    result.sup_fl_vs_oracle = sup_difference(result.foldy_lax, result.oracle);
    result.sup_fl_vs_effective = sup_difference(result.foldy_lax, result.effective);
    return result;
}

double step_norm_ratio(const StepProfile& profile, double kappa) {
    if (profile.size() == 0) {
        fail(ErrorKind::config, "step_norm_ratio: empty profile");
    }
    const OracleField field(profile, kappa);
    double total = 0.0;
    for (double c : profile.centers) {
        const double norm_sq =
            integrate([&](double s) -> std::complex<double> {
                const double m = std::abs(field.at(s));
                return m * m;
            }, c - profile.half_width, c + profile.half_width, 1).real();
        total += std::sqrt(std::max(0.0, norm_sq));
    }
    const double delta = 2.0 * profile.half_width;
    return total / (std::sqrt(delta) * static_cast<double>(profile.size()));
}

std::string to_string(SweepVerdict v) {
    switch (v) {
        case SweepVerdict::pass: return "pass";
        case SweepVerdict::inconclusive: return "inconclusive";
        case SweepVerdict::fail: return "fail";
    }
    return "unknown";
}

std::string to_string(SweepMetric m) {
    switch (m) {
        case SweepMetric::c2_magnitude: return "c2_magnitude";
        case SweepMetric::fl_vs_effective: return "fl_vs_effective";
        case SweepMetric::fl_vs_oracle: return "fl_vs_oracle";
        case SweepMetric::effective_vs_slab_oracle: return "effective_vs_slab_oracle";
    }
    return "unknown";
}

std::optional<double> predicted_rate(const RegimeParams& params, SweepMetric metric) {
    const double sigma = 1.0 - params.h - params.l;
    switch (metric) {
        case SweepMetric::c2_magnitude:
            if (sigma > 0.0) return sigma;
            return std::nullopt;
        case SweepMetric::effective_vs_slab_oracle:
            return std::nullopt;  // identical solutions; errors sit at the floor
        case SweepMetric::fl_vs_effective:
        case SweepMetric::fl_vs_oracle:
            break;
    }
    if (sigma >= 0.0) {
        return std::min((1.0 - params.h + 2.0 * params.l) / 2.0, 1.0 - params.h);
    }
    const RegimeClass regime = classify(params);
    const double window = 1.0 - params.h;
    if (regime.near && params.l < 2.0 * window) {
        return 2.0 - 2.0 * params.h - params.l;
    }
    if (!regime.near && params.l < 3.0 * window) {
        return (3.0 - 3.0 * params.h - params.l) / 2.0;
    }
    return std::nullopt;
}

SlopeFit convergence_sweep(const SweepSpec& spec) {
    if (spec.deltas.size() < 3) {
        fail(ErrorKind::config, "sweep '" + spec.name + "': need at least 3 deltas");
    }
    for (std::size_t i = 0; i < spec.deltas.size(); ++i) {
        if (!(spec.deltas[i] > 0.0) ||
            (i > 0 && !(spec.deltas[i] < spec.deltas[i - 1]))) {
            fail(ErrorKind::config,
                 "sweep '" + spec.name + "': deltas must be positive and strictly decreasing");
        }
    }

    SlopeFit fit;
    fit.name = spec.name;
    fit.metric = spec.metric;
    fit.deltas = spec.deltas;

    const std::vector<double> grid =
        uniform_grid(-0.5 * spec.params.T, 1.5 * spec.params.T, spec.samples);

    // Points are independent pure evaluations; results are appended in the
    // given parameter order, so the output is deterministic.
    for (double delta : spec.deltas) {
        RegimeParams p = spec.params;
        p.delta = delta;
        p.validate();
        double error = 0.0;
        switch (spec.metric) {
            case SweepMetric::c2_magnitude:
                error = std::abs(effective_solution(p).c2);
                break;
            case SweepMetric::effective_vs_slab_oracle: {
                const EffectiveSolution sol = effective_solution(p);
                const FieldTrace eff = effective_trace(sol, grid);
                const FieldTrace orc = oracle_trace(equivalent_slab(sol), p.kappa, grid);
                error = sup_difference(eff, orc);
                break;
            }
            case SweepMetric::fl_vs_effective:
            case SweepMetric::fl_vs_oracle: {
                const StepProfile profile = build_profile(p);
                FoldyLaxSystem system = assemble_system(profile, p, spec.capacity);
                solve_system(system);
                const FieldTrace fl = reconstruct_trace(system, grid);
                const FieldTrace ref =
                    spec.metric == SweepMetric::fl_vs_effective
                        ? effective_trace(effective_solution(p), grid)
                        : oracle_trace(profile, p.kappa, grid);
                error = sup_difference(fl, ref);
                break;
            }
        }
        fit.errors.push_back(error);
    }

    fit.at_floor = std::all_of(fit.errors.begin(), fit.errors.end(),
                               [](double e) { return e <= kFloor; });
    for (std::size_t i = 0; i + 1 < fit.errors.size(); ++i) {
        if (fit.errors[i + 1] > spec.slack * fit.errors[i] + kFloor) {
            fit.growth_violation = true;
        }
    }

    // Least squares on log error vs log delta.
    const std::size_t n = fit.errors.size();
    double sx = 0.0, sy = 0.0;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::log(fit.deltas[i]);
        ys[i] = std::log(std::max(fit.errors[i], 1e-300));
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += r * r;
    }
    fit.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;

    RegimeParams finest = spec.params;
    finest.delta = spec.deltas.back();
    fit.predicted = predicted_rate(finest, spec.metric);

    if (fit.at_floor) {
        fit.verdict = SweepVerdict::pass;
    } else if (fit.growth_violation) {
        fit.verdict = SweepVerdict::fail;
    } else if (fit.predicted && std::abs(fit.slope - *fit.predicted) <= spec.tolerance &&
               fit.r2 >= spec.r2_threshold) {
        fit.verdict = SweepVerdict::pass;
    } else {
        fit.verdict = SweepVerdict::inconclusive;
    }
    return fit;
}

void write_sweep_csv(const SlopeFit& fit, std::ostream& out) {
    out << "delta,error\n";
    for (std::size_t i = 0; i < fit.deltas.size(); ++i) {
        out << format_number(fit.deltas[i]) << ',' << format_number(fit.errors[i])
            << '\n';
    }
    out << "# name = " << fit.name << '\n';
    out << "# metric = " << to_string(fit.metric) << '\n';
    out << "# slope = " << format_number(fit.slope) << '\n';
    out << "# intercept = " << format_number(fit.intercept) << '\n';
    out << "# r2 = " << format_number(fit.r2) << '\n';
    out << "# predicted = "
        << (fit.predicted ? format_number(*fit.predicted) : std::string("none"))
        << '\n';
    out << "# at_floor = " << (fit.at_floor ? 1 : 0) << '\n';
    out << "# growth_violation = " << (fit.growth_violation ? 1 : 0) << '\n';
    out << "# verdict = " << to_string(fit.verdict) << '\n';
}

double near_resonance_delta(const RegimeParams& params, int n) {
    const double alpha = params.alpha();
    if (!(alpha > 0.0)) {
        fail(ErrorKind::config,
             "near-resonance staging requires h + l > 1 (got alpha <= 0)");
    }
    if (n < 1) fail(ErrorKind::config, "near-resonance staging: n must be positive");
    const double lambda_n = n * kPi / params.T;
    const double gap = lambda_n * lambda_n - params.kappa * params.kappa;
    if (!(gap > 0.0)) {
        fail(ErrorKind::config,
             "near-resonance staging: n pi / T must exceed kappa");
    }
    return std::pow(gap / params.C, -1.0 / alpha);
}

const std::vector<std::string>& preset_sweep_names() {
    static const std::vector<std::string> names = {"c2-slope", "single-slab",
                                                   "near-resonance"};
    return names;
}

SweepSpec preset_sweep(const std::string& name, const RegimeParams& base) {
    SweepSpec spec;
    spec.name = name;
    spec.params = base;
    if (name == "c2-slope") {
        spec.params.h = 0.1;
        spec.params.l = 0.1;
        spec.deltas = {1e-2, 1e-3, 1e-4};
        spec.metric = SweepMetric::c2_magnitude;
        return spec;
    }
    if (name == "single-slab") {
        spec.params.h = 0.1;
        spec.params.l = 0.1;
        spec.deltas = {1e-2, 1e-3, 1e-4};
        spec.metric = SweepMetric::effective_vs_slab_oracle;
        return spec;
    }
    if (name == "near-resonance") {
        spec.params.h = 0.3;
        spec.params.l = 0.8;
        spec.params.C = 5.5;  // sized so three resonant deltas fit the solver budget
        spec.metric = SweepMetric::fl_vs_effective;
        int n = 1;
        for (; n < 10000; ++n) {
            const double lambda_n = n * kPi / spec.params.T;
            if (lambda_n <= spec.params.kappa) continue;
            if (near_resonance_delta(spec.params, n) <= 0.1) break;
        }
        if (n >= 10000) {
            fail(ErrorKind::config,
                 "near-resonance preset: no resonant delta below 0.1 found");
        }
        spec.deltas = {near_resonance_delta(spec.params, n),
                       near_resonance_delta(spec.params, n + 1),
                       near_resonance_delta(spec.params, n + 2)};
        return spec;
    }
    fail(ErrorKind::config,
         "unknown sweep preset '" + name + "'; valid: c2-slope, single-slab, near-resonance");
}

}  // namespace tempwave
