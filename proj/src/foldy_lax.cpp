#include "tempwave/foldy_lax.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "tempwave/quadrature.hpp"

namespace tempwave {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> expi(double x) { return {std::cos(x), std::sin(x)}; }

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

double norm2(const std::vector<std::complex<double>>& v) {
    double sum = 0.0;
    for (const auto& x : v) sum += std::norm(x);
    return std::sqrt(sum);
}

void fill_columns(FoldyLaxSystem& system, bool parallel) {
    const auto n = static_cast<std::ptrdiff_t>(system.size());
    const auto fill_one = [&](std::ptrdiff_t j) {
        for (std::ptrdiff_t m = 0; m < n; ++m) {
            system.lu.entry(static_cast<std::size_t>(m), static_cast<std::size_t>(j)) =
                system.a_entry(static_cast<std::size_t>(m), static_cast<std::size_t>(j));
        }
    };
    if (parallel) {
        // Symmetric matrix: column-parallel fill is the row-parallel fill in
        // contiguous storage order; one thread owns each column.
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t j = 0; j < n; ++j) fill_one(j);
    } else {
        for (std::ptrdiff_t j = 0; j < n; ++j) fill_one(j);
    }
}

}  // namespace

std::complex<double> FoldyLaxSystem::q_entry(std::size_t m, std::size_t j) const {
    return expi(kappa * std::abs(centers[m] - centers[j]));
}

std::complex<double> FoldyLaxSystem::a_entry(std::size_t m, std::size_t j) const {
    const std::complex<double> q = q_entry(m, j);
    return (m == j ? 1.0 : 0.0) - beta * q;
}

FoldyLaxSystem assemble_system(const StepProfile& profile, const RegimeParams& params,
                               std::size_t capacity, bool parallel) {
    params.validate();
    const std::size_t n = profile.size();
    if (n == 0) fail(ErrorKind::config, "assemble_system: empty profile");
    if (n > capacity) {
        std::ostringstream msg;
        msg << "system size " << n << " exceeds capacity " << capacity;
        fail(ErrorKind::capacity, msg.str());
    }

    FoldyLaxSystem system(n);
    system.centers = profile.centers;
    system.kappa = params.kappa;
    system.delta = params.delta;
    system.amplitude = params.amplitude();
    system.beta = params.beta();
    fill_columns(system, parallel);

    system.e_in.resize(n);
    system.d_tilde.resize(n);
    const double half_arg = params.kappa * params.delta / 2.0;
    for (std::size_t m = 0; m < n; ++m) {
        system.e_in[m] = expi(params.kappa * profile.centers[m]);
        // Exact moment of the incident wave over the step:
        // d~_m = delta e^{i kappa T_m} sinc(kappa delta / 2).
        system.d_tilde[m] = params.delta * system.e_in[m] * sinc(half_arg);
    }
    return system;
}

void solve_system(FoldyLaxSystem& system) {
    if (system.solved) fail(ErrorKind::config, "solve_system: already solved");
    system.lu.factor();
    system.q_tilde = system.d_tilde;
    system.lu.solve(system.q_tilde);

    // Residual through the closed-form entries (the stored matrix now holds
    // the factors): r = q~ - beta K q~ - d~ with K the kernel matrix.
    const auto n = static_cast<std::ptrdiff_t>(system.size());
    std::vector<std::complex<double>> r(system.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t m = 0; m < n; ++m) {
        std::complex<double> k_dot = 0.0;
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            k_dot += system.q_entry(static_cast<std::size_t>(m), static_cast<std::size_t>(j)) *
                     system.q_tilde[static_cast<std::size_t>(j)];
        }
        r[static_cast<std::size_t>(m)] =
            system.q_tilde[static_cast<std::size_t>(m)] - system.beta * k_dot -
            system.d_tilde[static_cast<std::size_t>(m)];
    }
    const double rel = norm2(r) / norm2(system.d_tilde);
    if (!(rel < 1e-10)) {
        std::ostringstream msg;
        msg << "solve residual " << rel << " exceeds 1e-10";
        fail(ErrorKind::numerical, msg.str());
    }
    system.solved = true;
}

double condition_estimate(const FoldyLaxSystem& system) {
    if (!system.lu.factored()) {
        fail(ErrorKind::config, "condition_estimate: factor the system first");
    }
    return system.lu.inverse_norm_estimate();
}

std::complex<double> reconstruct_field(const FoldyLaxSystem& system, double t) {
    if (!system.solved) fail(ErrorKind::config, "reconstruct_field: solve first");
    std::complex<double> scattered = 0.0;
    for (std::size_t m = 0; m < system.size(); ++m) {
        scattered += expi(system.kappa * std::abs(t - system.centers[m])) *
                     system.q_tilde[m];
    }
    scattered *= system.amplitude * kI / (2.0 * system.kappa);
    return expi(system.kappa * t) + scattered;
}

FieldTrace reconstruct_trace(const FoldyLaxSystem& system,
                             const std::vector<double>& grid,
                             ReconstructionForm form) {
    if (!system.solved) fail(ErrorKind::config, "reconstruct_trace: solve first");
    if (grid.empty()) fail(ErrorKind::config, "reconstruct_trace: empty grid");

    const std::vector<std::complex<double>>* charges = &system.q_tilde;
    std::complex<double> prefactor = system.amplitude * kI / (2.0 * system.kappa);
    std::vector<std::complex<double>> printed_charges;
    if (form == ReconstructionForm::printed) {
        printed_charges = system.e_in;
        system.lu.solve(printed_charges);
        charges = &printed_charges;
        // As-printed variant: plane-wave right-hand side, no i/(2 kappa).
        prefactor = system.amplitude * system.delta;
    }

    FieldTrace out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.label = "foldy_lax";
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double t = grid[static_cast<std::size_t>(i)];
        std::complex<double> scattered = 0.0;  // serial inner sum
        for (std::size_t m = 0; m < system.size(); ++m) {
            scattered += expi(system.kappa * std::abs(t - system.centers[m])) *
                         (*charges)[m];
        }
        out.values[static_cast<std::size_t>(i)] =
            expi(system.kappa * t) + prefactor * scattered;
    }
    out.validate();
    return out;
}

FieldTrace nystrom_solve(const StepProfile& profile, const RegimeParams& params,
                         std::size_t nodes_per_step, const std::vector<double>& grid,
                         std::size_t capacity) {
    params.validate();
    if (nodes_per_step != 1 && nodes_per_step != 2 && nodes_per_step != 4 &&
        nodes_per_step != 8) {
        fail(ErrorKind::config, "nystrom_solve: nodes_per_step must be 1, 2, 4, or 8");
    }
    if (grid.empty()) fail(ErrorKind::config, "nystrom_solve: empty grid");
    const std::size_t n = profile.size() * nodes_per_step;
    if (n == 0) fail(ErrorKind::config, "nystrom_solve: empty profile");
    if (n > capacity) {
        std::ostringstream msg;
        msg << "collocation size " << n << " exceeds capacity " << capacity;
        fail(ErrorKind::capacity, msg.str());
    }

    const GaussRule rule = gauss_rule(nodes_per_step);
    std::vector<double> nodes(n), weights(n);
    for (std::size_t j = 0; j < profile.size(); ++j) {
        for (std::size_t q = 0; q < nodes_per_step; ++q) {
            nodes[j * nodes_per_step + q] =
                profile.centers[j] + profile.half_width * rule.nodes[q];
            weights[j * nodes_per_step + q] = profile.half_width * rule.weights[q];
        }
    }

    const double kappa = params.kappa;
    const double amp = params.amplitude();
    DenseLU lu(n);
    const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < nn; ++j) {
        for (std::ptrdiff_t i = 0; i < nn; ++i) {
            const auto jj = static_cast<std::size_t>(j);
            const auto ii = static_cast<std::size_t>(i);
            const std::complex<double> phi =
                (kI / (2.0 * kappa)) * expi(kappa * std::abs(nodes[ii] - nodes[jj]));
            lu.entry(ii, jj) = (ii == jj ? 1.0 : 0.0) - amp * weights[jj] * phi;
        }
    }
    lu.factor();
    std::vector<std::complex<double>> field(n);
    for (std::size_t i = 0; i < n; ++i) field[i] = expi(kappa * nodes[i]);
    lu.solve(field);

    FieldTrace out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.label = "nystrom";
    const auto g = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < g; ++i) {
        const double t = grid[static_cast<std::size_t>(i)];
        std::complex<double> scattered = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            scattered += weights[j] * expi(kappa * std::abs(t - nodes[j])) * field[j];
        }
        out.values[static_cast<std::size_t>(i)] =
            expi(kappa * t) + amp * (kI / (2.0 * kappa)) * scattered;
    }
    out.validate();
    return out;
}

void dump_matrix_csv(const FoldyLaxSystem& system, std::ostream& out) {
    out << "re,im\n";
    char line[64];
    for (std::size_t m = 0; m < system.size(); ++m) {
        for (std::size_t j = 0; j < system.size(); ++j) {
            const auto a = system.a_entry(m, j);
            std::snprintf(line, sizeof(line), "%.11e,%.11e\n", a.real(), a.imag());
            out << line;
        }
    }
}

void dump_charges_csv(const FoldyLaxSystem& system, std::ostream& out) {
    if (!system.solved) fail(ErrorKind::config, "dump_charges_csv: solve first");
    out << "re,im\n";
    char line[64];
    for (const auto& q : system.q_tilde) {
        std::snprintf(line, sizeof(line), "%.11e,%.11e\n", q.real(), q.imag());
        out << line;
    }
}

}  // namespace tempwave
