#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "tempwave/error.hpp"

namespace tempwave {

// Scalar parameters of a time-modulated step medium on the window (0, T):
// N short intervals of width delta, uniformly spaced with gap d = delta^l,
// on which the squared plasma frequency jumps to the level C * delta^{-h}.
struct RegimeParams {
    double T = 10.0;      // window length (time)
    double delta = 1e-3;  // step width (time), in (0, 1)
    double h = 0.1;       // contrast exponent, in (0, 1]
    double l = 0.1;       // spacing exponent, in (0, 1]
    double C = 1.0;       // amplitude constant (frequency^2)
    double kappa = 1.0;   // background wavenumber (frequency)

    // Contrast exponent of the equivalent constant-coefficient slab on [0, T].
    double alpha() const { return -1.0 + h + l; }

    // Step height omega_p^2 inside each interval.
    double amplitude() const { return C * std::pow(delta, -h); }

    // Slab amplitude of the effective medium, C * delta^{-alpha}.
    double effective_amplitude() const { return C * std::pow(delta, -alpha()); }

    // Slab wavenumber of the effective medium.
    double lambda() const { return std::sqrt(kappa * kappa + effective_amplitude()); }

    // Slab wavenumber of a single step-height slab (used by analytic checks).
    double lambda_bar() const { return std::sqrt(kappa * kappa + amplitude()); }

    // Coupling scalar of the interaction matrix, i C delta^{1-h} / (2 kappa).
    std::complex<double> beta() const {
        return {0.0, C * std::pow(delta, 1.0 - h) / (2.0 * kappa)};
    }

    // Throws Error{config} with a description of the violated bound.
    void validate() const;
};

// Realized layout of the N step intervals [T_j - delta/2, T_j + delta/2].
struct StepProfile {
    std::vector<double> centers;  // T_j = j * d, strictly increasing
    double half_width = 0.0;      // delta / 2
    double amplitude = 0.0;       // C * delta^{-h}
    double T = 0.0;               // window length
    double d = 0.0;               // center spacing delta^l
    bool truncated = false;       // set when an n_cap cut the natural count

    std::size_t size() const { return centers.size(); }

    // Two-valued coefficient: amplitude on any closed step interval, else 0.
    double omega_p_squared(double t) const;
};

// Plane-wave reduction inputs: background medium and propagation direction.
struct WaveVectorSetup {
    std::array<double, 3> k{1.0, 0.0, 0.0};       // wave vector (1/length)
    double eps0 = 1.0;                            // background permittivity
    double mu0 = 1.0;                             // background permeability
    std::array<double, 3> k_perp{0.0, 1.0, 0.0};  // unit polarization direction
};

// kappa = |k| / sqrt(eps0 * mu0); rejects non-orthogonal or non-unit k_perp.
double scalar_reduction(const WaveVectorSetup& setup);

// Uniform layout T_j = j * d with d = delta^l and N maximal under
// (N + 1) * d < T, which keeps every gap (including the trailing one,
// measured to T) at least d. Throws Error{config} when no center fits,
// truncates to n_cap (flagged) when given.
StepProfile build_profile(const RegimeParams& params,
                          std::optional<std::size_t> n_cap = std::nullopt);

// CSV export `t,omega_p_sq` over a uniform sampling of [t_min, t_max].
void write_profile_csv(const StepProfile& profile, std::ostream& out,
                       double t_min, double t_max, std::size_t samples);

}  // namespace tempwave
