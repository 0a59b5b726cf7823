#pragma once

#include <array>
#include <complex>
#include <string>

#include "tempwave/model.hpp"
#include "tempwave/trace.hpp"

namespace tempwave {

// Closed-form solution of E'' + (kappa^2 + A 1_{[0,T]}) E = 0 with incoming
// plane wave and outgoing-only behavior for large |t|:
//   t < 0:      e^{i kappa t} + C2 e^{-i kappa t}
//   0 <= t <= T: C3 e^{i lambda t} + C4 e^{-i lambda t}
//   t > T:      C5 e^{i kappa t}
// with lambda = sqrt(kappa^2 + A); C1 = 1 and C6 = 0 fix the scattering
// normalization.
struct EffectiveSolution {
    double lambda = 0.0;
    double kappa = 0.0;
    double T = 0.0;
    double slab_amplitude = 0.0;  // A
    std::complex<double> c1, c2, c3, c4, c5, c6;
};

// Core constructor from the slab amplitude.
EffectiveSolution solve_slab(double slab_amplitude, double kappa, double T);

// Effective medium of a step family: amplitude C delta^{-alpha}.
EffectiveSolution effective_solution(const RegimeParams& params);

// Single slab at the raw step height C delta^{-h} (analytic-check variant).
EffectiveSolution single_slab_solution(const RegimeParams& params);

double lambda_of(const RegimeParams& params);

std::complex<double> effective_field_at(const EffectiveSolution& sol, double t);
std::complex<double> effective_field_derivative(const EffectiveSolution& sol, double t);
FieldTrace effective_trace(const EffectiveSolution& sol, const std::vector<double>& grid);
FieldTrace incident_trace(double kappa, const std::vector<double>& grid);

enum class RegimeKind { transparent_limit, near_resonance, off_resonance };

// Primary kind follows the sign of 1-h-l (transparent limit when positive);
// the resonance facet (nearest n, parity, distance to n pi) is always
// reported, since lambda T can sit near a multiple of pi in any regime.
struct RegimeClass {
    RegimeKind kind = RegimeKind::off_resonance;
    int n = 1;                 // nearest positive integer to lambda T / pi
    bool near = false;         // |lambda T - n pi| <= c / n
    bool even = false;         // parity of n
    double distance = 0.0;     // |lambda T - n pi|
    double one_minus_h_minus_l = 0.0;
    std::string behavior;      // "well" / "wall" prediction, empty otherwise

    std::string describe() const;  // single CSV-safe token
};

RegimeClass classify(const RegimeParams& params, double resonance_constant = 1.0);

// Leading-order behavior of a coefficient as delta -> 0 in the regime of
// the given parameters.
struct CoefficientOrder {
    bool has_limit = false;       // converges to a constant magnitude
    double limit_magnitude = 0.0; // |limit| when has_limit
    double decay_exponent = 0.0;  // rate of the vanishing part; 0 = unquantified
};

// Orders for (C2, C3, C4, C5).
std::array<CoefficientOrder, 4> asymptotic_magnitudes(const RegimeParams& params);

// sup over a fixed test grid of |E(t) - E_inc(t) - A int_0^T Phi(t,s) E(s) ds|
// with Phi(t,s) = (i/2kappa) e^{i kappa |t-s|}, A = sol.slab_amplitude, and
// composite Gauss-Legendre quadrature of the given panel order split at the
// kernel kink s = t. Requires quad_points >= 64 and at least 10 points per
// lambda-period over [0, T]; refuses otherwise.
double integral_residual(const EffectiveSolution& sol, std::size_t quad_points,
                         std::size_t order = 8);

}  // namespace tempwave
