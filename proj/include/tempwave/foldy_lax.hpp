#pragma once

#include <complex>
#include <cstddef>
#include <ostream>
#include <vector>

#include "tempwave/linalg.hpp"
#include "tempwave/model.hpp"
#include "tempwave/trace.hpp"

namespace tempwave {

// Default budget for dense unknowns (matrix rows); larger systems are
// refused with a capacity error instead of thrashing memory.
inline constexpr std::size_t kDefaultCapacity = 6000;

// The N x N interaction system I - beta Q over the step centers, with
// Q_mj = e^{i kappa |T_m - T_j|}; unknowns are the per-step integrated
// field values ("charges") q~.
struct FoldyLaxSystem {
    std::vector<double> centers;
    double kappa = 0.0;
    double delta = 0.0;
    double amplitude = 0.0;            // C delta^{-h}
    std::complex<double> beta;         // i C delta^{1-h} / (2 kappa)
    DenseLU lu;                        // holds the matrix; factored by solve_system
    std::vector<std::complex<double>> e_in;     // (e^{i kappa T_m})
    std::vector<std::complex<double>> d_tilde;  // exact incident moments
    std::vector<std::complex<double>> q_tilde;  // solved charges
    bool solved = false;

    explicit FoldyLaxSystem(std::size_t n) : lu(n) {}

    std::size_t size() const { return centers.size(); }

    // Kernel modulus Q_mj, regenerated on demand (Q is never materialized:
    // at N ~ 5000 it would double a ~400 MB footprint).
    std::complex<double> q_entry(std::size_t m, std::size_t j) const;

    // Closed-form matrix entry (I - beta Q)_mj, valid even after the stored
    // copy has been overwritten by factorization.
    std::complex<double> a_entry(std::size_t m, std::size_t j) const;
};

// Builds matrix and right-hand side. The matrix fill is parallel over
// columns (each column written by exactly one thread, so the result is
// bit-identical to the serial fill); `parallel = false` selects the serial
// reference path used by tests and benchmarks.
FoldyLaxSystem assemble_system(const StepProfile& profile, const RegimeParams& params,
                               std::size_t capacity = kDefaultCapacity,
                               bool parallel = true);

// Factors and solves for the charges. Asserts the relative residual
// ||A q~ - d~|| / ||d~|| < 1e-10 via a matrix-free matvec.
void solve_system(FoldyLaxSystem& system);

// Spectral-norm estimate of the inverse (power iteration on repeated solves).
double condition_estimate(const FoldyLaxSystem& system);

// full_kernel: E_inc(t) + C delta^{-h} sum_m (i/2kappa) e^{i kappa|t-T_m|} q~_m.
// printed: the same sum without the i/(2 kappa) prefactor and with the
// plane-wave samples replacing the exact moments on the right-hand side;
// kept as a diagnostic because the two differ by a factor ~|i/2| at
// kappa = 1 and the transfer-matrix oracle cleanly picks full_kernel.
enum class ReconstructionForm { full_kernel, printed };

std::complex<double> reconstruct_field(const FoldyLaxSystem& system, double t);
FieldTrace reconstruct_trace(const FoldyLaxSystem& system,
                             const std::vector<double>& grid,
                             ReconstructionForm form = ReconstructionForm::full_kernel);

// Collocation refinement of the same integral equation with
// `nodes_per_step` Gauss-Legendre nodes inside each step (1, 2, 4, or 8);
// nodes_per_step = 1 is the midpoint rule underlying the one-point system.
FieldTrace nystrom_solve(const StepProfile& profile, const RegimeParams& params,
                         std::size_t nodes_per_step, const std::vector<double>& grid,
                         std::size_t capacity = kDefaultCapacity);

// Row-major dumps, one `re,im` line per entry, for external verification.
void dump_matrix_csv(const FoldyLaxSystem& system, std::ostream& out);
void dump_charges_csv(const FoldyLaxSystem& system, std::ostream& out);

}  // namespace tempwave
