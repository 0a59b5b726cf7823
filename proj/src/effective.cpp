#include "tempwave/effective.hpp"

#include <cmath>
#include <sstream>

#include "tempwave/quadrature.hpp"

namespace tempwave {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> expi(double x) { return {std::cos(x), std::sin(x)}; }

}  // namespace

EffectiveSolution solve_slab(double slab_amplitude, double kappa, double T) {
    if (!(kappa > 0.0) || !(T > 0.0) || slab_amplitude < 0.0) {
        fail(ErrorKind::config, "solve_slab: needs kappa > 0, T > 0, amplitude >= 0");
    }
    EffectiveSolution sol;
    sol.kappa = kappa;
    sol.T = T;
    sol.slab_amplitude = slab_amplitude;
    sol.lambda = std::sqrt(kappa * kappa + slab_amplitude);

    const double lam = sol.lambda;
    const std::complex<double> elT = expi(lam * T);
    const std::complex<double> D =
        (lam + kappa) * (lam + kappa) / elT - (lam - kappa) * (lam - kappa) * elT;
    // |D|^2 = 16 kappa^2 lambda^2 + 4 (lambda^2-kappa^2)^2 sin^2(lambda T) > 0.
    if (!(std::abs(D) > 1e-14)) {
        fail(ErrorKind::numerical, "slab denominator vanished (cannot happen for real inputs)");
    }
    sol.c1 = 1.0;
    sol.c2 = (lam * lam - kappa * kappa) * (elT - 1.0 / elT) / D;
    sol.c3 = 2.0 * kappa * (kappa + lam) / elT / D;
    sol.c4 = 2.0 * kappa * (lam - kappa) * elT / D;
    sol.c5 = 4.0 * lam * kappa * expi(-kappa * T) / D;
    sol.c6 = 0.0;
    return sol;
}

EffectiveSolution effective_solution(const RegimeParams& params) {
    params.validate();
    return solve_slab(params.effective_amplitude(), params.kappa, params.T);
}

EffectiveSolution single_slab_solution(const RegimeParams& params) {
    params.validate();
    return solve_slab(params.amplitude(), params.kappa, params.T);
}

double lambda_of(const RegimeParams& params) {
    params.validate();
    return params.lambda();
}

std::complex<double> effective_field_at(const EffectiveSolution& sol, double t) {
    if (t < 0.0) {
        return expi(sol.kappa * t) + sol.c2 * expi(-sol.kappa * t);
    }
    if (t <= sol.T) {
        return sol.c3 * expi(sol.lambda * t) + sol.c4 * expi(-sol.lambda * t);
    }
    return sol.c5 * expi(sol.kappa * t);
}

std::complex<double> effective_field_derivative(const EffectiveSolution& sol, double t) {
    if (t < 0.0) {
        return kI * sol.kappa * (expi(sol.kappa * t) - sol.c2 * expi(-sol.kappa * t));
    }
    if (t <= sol.T) {
        return kI * sol.lambda *
               (sol.c3 * expi(sol.lambda * t) - sol.c4 * expi(-sol.lambda * t));
    }
    return kI * sol.kappa * sol.c5 * expi(sol.kappa * t);
}

FieldTrace effective_trace(const EffectiveSolution& sol, const std::vector<double>& grid) {
    if (grid.empty()) fail(ErrorKind::config, "effective trace: empty grid");
    FieldTrace out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.label = "effective";
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out.values[static_cast<std::size_t>(i)] =
            effective_field_at(sol, grid[static_cast<std::size_t>(i)]);
    }
    out.validate();
    return out;
}

FieldTrace incident_trace(double kappa, const std::vector<double>& grid) {
    if (grid.empty()) fail(ErrorKind::config, "incident trace: empty grid");
    FieldTrace out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.label = "incident";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.values[i] = expi(kappa * grid[i]);
    }
    return out;
}

std::string RegimeClass::describe() const {
    std::ostringstream s;
    switch (kind) {
        case RegimeKind::transparent_limit:
            s << "TransparentLimit";
            break;
        case RegimeKind::near_resonance:
            s << "NearResonance";
            break;
        case RegimeKind::off_resonance:
            s << "OffResonance";
            break;
    }
    s << "(n=" << n << (near ? ";near" : ";away") << ";" << (even ? "even" : "odd");
    if (!behavior.empty()) s << ";" << behavior;
    s << ")";
    return s.str();
}

RegimeClass classify(const RegimeParams& params, double resonance_constant) {
    params.validate();
    if (!(resonance_constant > 0.0)) {
        fail(ErrorKind::config, "classify: resonance constant must be positive");
    }
    RegimeClass regime;
    const double lamT = params.lambda() * params.T;
    regime.n = static_cast<int>(std::max<long long>(1, std::llround(lamT / kPi)));
    regime.distance = std::abs(lamT - regime.n * kPi);
    regime.near = regime.distance <= resonance_constant / regime.n;
    regime.even = regime.n % 2 == 0;
    regime.one_minus_h_minus_l = 1.0 - params.h - params.l;

    if (regime.one_minus_h_minus_l > 0.0) {
        regime.kind = RegimeKind::transparent_limit;
    } else if (regime.near) {
        regime.kind = RegimeKind::near_resonance;
        if (regime.one_minus_h_minus_l < 0.0) regime.behavior = "well:full-transmission";
    } else {
        regime.kind = RegimeKind::off_resonance;
        if (regime.one_minus_h_minus_l < 0.0) regime.behavior = "wall:full-reflection";
    }
    return regime;
}

std::array<CoefficientOrder, 4> asymptotic_magnitudes(const RegimeParams& params) {
    const RegimeClass regime = classify(params);
    const double sigma = regime.one_minus_h_minus_l;
    const double half_alpha = params.alpha() / 2.0;

    std::array<CoefficientOrder, 4> orders{};  // C2, C3, C4, C5
    if (sigma > 0.0) {
        // lambda -> kappa at rate delta^{1-h-l}; every scattered piece
        // vanishes at that rate and the slab becomes transparent.
        orders[0] = {true, 0.0, sigma};
        orders[1] = {true, 1.0, sigma};
        orders[2] = {true, 0.0, sigma};
        orders[3] = {true, 1.0, sigma};
    } else if (sigma == 0.0) {
        // Moderate contrast: all coefficients O(1), no limits claimed.
        orders.fill({false, 0.0, 0.0});
    } else if (regime.near) {
        orders[0] = {true, 0.0, 0.0};
        orders[1] = {true, 0.5, half_alpha};
        orders[2] = {true, 0.5, half_alpha};
        orders[3] = {true, 1.0, 0.0};
    } else {
        orders[0] = {true, 1.0, half_alpha};
        orders[1] = {true, 0.0, half_alpha};
        orders[2] = {true, 0.0, half_alpha};
        orders[3] = {true, 0.0, half_alpha};
    }
    return orders;
}

double integral_residual(const EffectiveSolution& sol, std::size_t quad_points,
                         std::size_t order) {
    if (quad_points < 64) {
        fail(ErrorKind::config, "integral_residual: needs at least 64 quadrature points");
    }
    const double periods = sol.lambda * sol.T / (2.0 * kPi);
    if (static_cast<double>(quad_points) < 10.0 * periods) {
        std::ostringstream msg;
        msg << "integral_residual: " << quad_points << " points cannot resolve "
            << periods << " oscillation periods (need >= " << 10.0 * periods << ")";
        fail(ErrorKind::numerical, msg.str());
    }

    const std::size_t panels = std::max<std::size_t>(2, quad_points / order);
    const double kappa = sol.kappa;
    const double T = sol.T;
    const auto kernel_row = [&](double t, double s) {
        return (kI / (2.0 * kappa)) * expi(kappa * std::abs(t - s)) *
               effective_field_at(sol, s);
    };

    const std::vector<double> test_grid = uniform_grid(-T / 2.0, 1.5 * T, 101);
    const auto n = static_cast<std::ptrdiff_t>(test_grid.size());
    std::vector<double> residual(test_grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double t = test_grid[static_cast<std::size_t>(i)];
        const auto f = [&](double s) { return kernel_row(t, s); };
        std::complex<double> integral;
        if (t > 0.0 && t < T) {
            // Split at the kernel kink; panel counts proportional to length.
            auto left = static_cast<std::size_t>(
                std::llround(static_cast<double>(panels) * t / T));
            left = std::min(std::max<std::size_t>(left, 1), panels - 1);
            integral = integrate(f, 0.0, t, left, order) +
                       integrate(f, t, T, panels - left, order);
        } else {
            integral = integrate(f, 0.0, T, panels, order);
        }
        residual[static_cast<std::size_t>(i)] =
            std::abs(effective_field_at(sol, t) - expi(kappa * t) -
                     sol.slab_amplitude * integral);
    }
    double sup = 0.0;
    for (const double r : residual) sup = std::max(sup, r);
    return sup;
}

}  // namespace tempwave
