#include "tempwave/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tempwave {

void RegimeParams::validate() const {
    std::ostringstream why;
    if (!(T > 0.0)) {
        why << "T must be positive, got " << T;
    } else if (!(delta > 0.0 && delta < 1.0)) {
        why << "delta must lie in (0, 1), got " << delta;
    } else if (!(h > 0.0 && h <= 1.0)) {
        why << "h must lie in (0, 1], got " << h;
    } else if (!(l > 0.0 && l <= 1.0)) {
        why << "l must lie in (0, 1], got " << l;
    } else if (!(C >= 0.0)) {
        // C = 0 is allowed: the degenerate free-propagation case exercised
        // by the trivial checks (beta = 0, lambda = kappa, incident field).
        why << "C must be non-negative, got " << C;
    } else if (!(kappa > 0.0)) {
        why << "kappa must be positive, got " << kappa;
    } else {
        return;
    }
    fail(ErrorKind::config, "invalid parameters: " + why.str());
}

double StepProfile::omega_p_squared(double t) const {
    if (centers.empty() || t < centers.front() - half_width ||
        t > centers.back() + half_width) {
        return 0.0;
    }
    // Uniform layout: only the nearest center can cover t.
    auto idx = static_cast<std::ptrdiff_t>(std::llround(t / d)) - 1;
    idx = std::clamp<std::ptrdiff_t>(idx, 0,
                                     static_cast<std::ptrdiff_t>(centers.size()) - 1);
    return std::abs(t - centers[static_cast<std::size_t>(idx)]) <= half_width
               ? amplitude
               : 0.0;
}

double scalar_reduction(const WaveVectorSetup& setup) {
    const auto& k = setup.k;
    const auto& p = setup.k_perp;
    const double dot = k[0] * p[0] + k[1] * p[1] + k[2] * p[2];
    const double pnorm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (std::abs(dot) > 1e-12) {
        fail(ErrorKind::config, "polarization must be orthogonal to k");
    }
    if (std::abs(pnorm - 1.0) > 1e-12) {
        fail(ErrorKind::config, "polarization must be a unit vector");
    }
    if (!(setup.eps0 > 0.0) || !(setup.mu0 > 0.0)) {
        fail(ErrorKind::config, "eps0 and mu0 must be positive");
    }
    const double knorm = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    if (knorm == 0.0) {
        fail(ErrorKind::config, "wave vector must be nonzero");
    }
    return knorm / std::sqrt(setup.eps0 * setup.mu0);
}

StepProfile build_profile(const RegimeParams& params,
                          std::optional<std::size_t> n_cap) {
    params.validate();
    const double d = std::pow(params.delta, params.l);
    if (d < params.delta) {
        fail(ErrorKind::config, "spacing d below step width delta: steps overlap");
    }

    // Largest N with (N + 1) d < T, strictly; floor slop corrected by scan.
    auto n = static_cast<std::ptrdiff_t>(std::floor(params.T / d)) - 1;
    while ((static_cast<double>(n) + 2.0) * d < params.T) ++n;
    while (n >= 1 && !((static_cast<double>(n) + 1.0) * d < params.T)) --n;
    if (n < 1) {
        fail(ErrorKind::config, "window too small: no step center fits in (0, T)");
    }

    StepProfile profile;
    profile.half_width = params.delta / 2.0;
    profile.amplitude = params.amplitude();
    profile.T = params.T;
    profile.d = d;
    auto count = static_cast<std::size_t>(n);
    if (n_cap && count > *n_cap) {
        count = *n_cap;
        profile.truncated = true;
    }
    profile.centers.resize(count);
    for (std::size_t j = 0; j < count; ++j) {
        profile.centers[j] = static_cast<double>(j + 1) * d;
    }
    return profile;
}

void write_profile_csv(const StepProfile& profile, std::ostream& out,
                       double t_min, double t_max, std::size_t samples) {
    if (samples < 2 || !(t_max > t_min)) {
        fail(ErrorKind::config, "profile export needs t_max > t_min and >= 2 samples");
    }
    out << "t,omega_p_sq\n";
    char line[80];
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = t_min + (t_max - t_min) * static_cast<double>(i) /
                                     static_cast<double>(samples - 1);
        std::snprintf(line, sizeof(line), "%.11e,%.11e\n", t,
                      profile.omega_p_squared(t));
        out << line;
    }
}

}  // namespace tempwave
