#pragma once

#include <complex>
#include <vector>

#include "tempwave/model.hpp"
#include "tempwave/trace.hpp"

namespace tempwave {

// Exact 2x2 propagator of (E, E') across a constant-coefficient piece of
// E'' + (kappa^2 + q) E = 0: entries cos(mu dt), sin(mu dt)/mu,
// -mu sin(mu dt), cos(mu dt) with mu = sqrt(kappa^2 + q); determinant 1.
struct PieceTransferMatrix {
    std::complex<double> m11, m12, m21, m22;
    double mu = 0.0;        // local wavenumber
    double duration = 0.0;  // piece length

    std::complex<double> det() const { return m11 * m22 - m12 * m21; }

    void apply(std::complex<double>& e, std::complex<double>& ep) const {
        const auto e2 = m11 * e + m12 * ep;
        const auto ep2 = m21 * e + m22 * ep;
        e = e2;
        ep = ep2;
    }
};

// Scattering data under E = e^{i kappa t} + R e^{-i kappa t} before all
// steps and E = tau e^{i kappa t} after all steps.
struct ScatteringCoeffs {
    std::complex<double> R;
    std::complex<double> tau;
};

// One constant-coefficient piece of the tiling of [0, T].
struct Piece {
    double q = 0.0;   // added coefficient (0 in gaps, amplitude in steps)
    double end = 0.0; // right endpoint; pieces tile [0, T] left to right
};

PieceTransferMatrix piece_propagator(double q, double dt, double kappa);

// Tiling of [0, T] induced by the profile: gap / step / gap / ... / gap.
std::vector<Piece> profile_pieces(const StepProfile& profile);

// Composes piece propagators across [0, T] and solves the 2x2 system for
// (R, tau). Asserts flux |R|^2 + |tau|^2 = 1 within 1e-10 and entry
// magnitudes < 1e6 (both can only fail through numerical breakdown).
ScatteringCoeffs solve_scattering(const StepProfile& profile, double kappa);

// Exact field everywhere: asymptotic forms outside [0, T], transfer-matrix
// propagation of the boundary data inside. Reuses cached piece-boundary
// states, so evaluating a grid costs O(grid + pieces).
class OracleField {
public:
    OracleField(const StepProfile& profile, double kappa);

    const ScatteringCoeffs& coeffs() const { return coeffs_; }

    std::complex<double> at(double t) const;

    // Field derivative, same propagation (used by smoothness checks).
    std::complex<double> derivative_at(double t) const;

    FieldTrace trace(const std::vector<double>& grid) const;

private:
    double kappa_;
    double T_;
    ScatteringCoeffs coeffs_;
    std::vector<Piece> pieces_;
    // (E, E') at the left edge of each piece, from the t=0 boundary data.
    std::vector<std::complex<double>> edge_e_, edge_ep_;

    void locate(double t, std::complex<double>& e, std::complex<double>& ep) const;
};

// One-off conveniences mirroring the class API.
std::complex<double> field_at(const StepProfile& profile, double kappa,
                              const ScatteringCoeffs& coeffs, double t);
FieldTrace oracle_trace(const StepProfile& profile, double kappa,
                        const std::vector<double>& grid);

}  // namespace tempwave
