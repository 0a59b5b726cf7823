#include "tempwave/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tempwave {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> expi(double x) { return {std::cos(x), std::sin(x)}; }

}  // namespace

PieceTransferMatrix piece_propagator(double q, double dt, double kappa) {
    if (q < 0.0 || dt < 0.0 || !(kappa > 0.0)) {
        fail(ErrorKind::config, "piece_propagator: needs q >= 0, dt >= 0, kappa > 0");
    }
    const double mu = std::sqrt(kappa * kappa + q);
    const double c = std::cos(mu * dt);
    const double s = std::sin(mu * dt);
    return {{c, 0.0}, {s / mu, 0.0}, {-mu * s, 0.0}, {c, 0.0}, mu, dt};
}

std::vector<Piece> profile_pieces(const StepProfile& profile) {
    std::vector<Piece> pieces;
    pieces.reserve(2 * profile.size() + 1);
    double prev = 0.0;
    for (const double center : profile.centers) {
        const double a = center - profile.half_width;
        const double b = center + profile.half_width;
        if (a > prev) pieces.push_back({0.0, a});
        pieces.push_back({profile.amplitude, b});
        prev = b;
    }
    if (profile.T > prev) pieces.push_back({0.0, profile.T});
    if (pieces.empty()) pieces.push_back({0.0, profile.T});
    return pieces;
}

ScatteringCoeffs solve_scattering(const StepProfile& profile, double kappa) {
    if (!(kappa > 0.0)) fail(ErrorKind::config, "solve_scattering: kappa must be positive");
    const auto pieces = profile_pieces(profile);
    const double T = profile.T;

    // M maps (E, E') at t=0 to (E, E') at t=T.
    std::complex<double> m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;
    double prev = 0.0;
    for (const auto& piece : pieces) {
        const auto p = piece_propagator(piece.q, piece.end - prev, kappa);
        const auto n11 = p.m11 * m11 + p.m12 * m21;
        const auto n12 = p.m11 * m12 + p.m12 * m22;
        const auto n21 = p.m21 * m11 + p.m22 * m21;
        const auto n22 = p.m21 * m12 + p.m22 * m22;
        m11 = n11; m12 = n12; m21 = n21; m22 = n22;
        prev = piece.end;
    }
    const double biggest =
        std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
    if (!(biggest < 1e6)) {
        fail(ErrorKind::numerical, "transfer-matrix entries grew beyond 1e6");
    }

    // u + R v = tau w with u, v the propagated left-boundary modes and
    // w the right-boundary outgoing mode.
    const std::complex<double> u0 = m11 + kI * kappa * m12;
    const std::complex<double> u1 = m21 + kI * kappa * m22;
    const std::complex<double> v0 = m11 - kI * kappa * m12;
    const std::complex<double> v1 = m21 - kI * kappa * m22;
    const std::complex<double> w0 = expi(kappa * T);
    const std::complex<double> w1 = kI * kappa * w0;

    const std::complex<double> det = v0 * (-w1) - (-w0) * v1;
    if (std::abs(det) < 1e-14) {
        fail(ErrorKind::numerical, "singular scattering system (real potential cannot do this)");
    }
    ScatteringCoeffs coeffs;
    coeffs.R = (-u0 * (-w1) - (-w0) * (-u1)) / det;
    coeffs.tau = (v0 * (-u1) - (-u0) * v1) / det;

    const double flux =
        std::norm(coeffs.R) + std::norm(coeffs.tau);
    if (std::abs(flux - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "flux conservation violated: |R|^2+|tau|^2 = " << flux;
        fail(ErrorKind::numerical, msg.str());
    }
    return coeffs;
}

OracleField::OracleField(const StepProfile& profile, double kappa)
    : kappa_(kappa),
      T_(profile.T),
      coeffs_(solve_scattering(profile, kappa)),
      pieces_(profile_pieces(profile)) {
    edge_e_.resize(pieces_.size());
    edge_ep_.resize(pieces_.size());
    std::complex<double> e = 1.0 + coeffs_.R;
    std::complex<double> ep = kI * kappa_ * (1.0 - coeffs_.R);
    double prev = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        edge_e_[i] = e;
        edge_ep_[i] = ep;
        piece_propagator(pieces_[i].q, pieces_[i].end - prev, kappa_).apply(e, ep);
        prev = pieces_[i].end;
    }
}

void OracleField::locate(double t, std::complex<double>& e,
                         std::complex<double>& ep) const {
    const auto it = std::lower_bound(
        pieces_.begin(), pieces_.end(), t,
        [](const Piece& piece, double value) { return piece.end < value; });
    const auto idx = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - pieces_.begin(),
                                 static_cast<std::ptrdiff_t>(pieces_.size()) - 1));
    const double left = idx == 0 ? 0.0 : pieces_[idx - 1].end;
    e = edge_e_[idx];
    ep = edge_ep_[idx];
    piece_propagator(pieces_[idx].q, t - left, kappa_).apply(e, ep);
}

std::complex<double> OracleField::at(double t) const {
    if (t <= 0.0) {
        return expi(kappa_ * t) + coeffs_.R * expi(-kappa_ * t);
    }
    if (t >= T_) {
        return coeffs_.tau * expi(kappa_ * t);
    }
    std::complex<double> e, ep;
    locate(t, e, ep);
    return e;
}

std::complex<double> OracleField::derivative_at(double t) const {
    if (t <= 0.0) {
        return kI * kappa_ * (expi(kappa_ * t) - coeffs_.R * expi(-kappa_ * t));
    }
    if (t >= T_) {
        return kI * kappa_ * coeffs_.tau * expi(kappa_ * t);
    }
    std::complex<double> e, ep;
    locate(t, e, ep);
    return ep;
}

FieldTrace OracleField::trace(const std::vector<double>& grid) const {
    if (grid.empty()) fail(ErrorKind::config, "oracle trace: empty grid");
    FieldTrace out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.label = "oracle";
    // Each grid point is evaluated independently; deterministic at any
    // thread count.
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out.values[static_cast<std::size_t>(i)] =
            at(grid[static_cast<std::size_t>(i)]);
    }
    out.validate();
    return out;
}

std::complex<double> field_at(const StepProfile& profile, double kappa,
                              const ScatteringCoeffs& coeffs, double t) {
    OracleField field(profile, kappa);
    // The caller's coefficients must describe the same profile.
    if (std::abs(field.coeffs().R - coeffs.R) > 1e-12 ||
        std::abs(field.coeffs().tau - coeffs.tau) > 1e-12) {
        fail(ErrorKind::config, "field_at: coefficients do not match the profile");
    }
    return field.at(t);
}

FieldTrace oracle_trace(const StepProfile& profile, double kappa,
                        const std::vector<double>& grid) {
    return OracleField(profile, kappa).trace(grid);
}

}  // namespace tempwave
