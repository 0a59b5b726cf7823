#include "tempwave/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#define lapack_complex_float_real(z) ((z).real())
#define lapack_complex_float_imag(z) ((z).imag())
#define lapack_complex_double_real(z) ((z).real())
#define lapack_complex_double_imag(z) ((z).imag())
#include <lapacke.h>

namespace tempwave {

namespace {

// Pin the BLAS backend to one thread (no override of an explicit user
// setting): keeps factorizations bit-reproducible across runs.
const bool kSingleThreadedBlas = [] {
    ::setenv("OPENBLAS_NUM_THREADS", "1", /*overwrite=*/0);
    return true;
}();

double norm2(const std::vector<std::complex<double>>& v) {
    double sum = 0.0;
    for (const auto& x : v) sum += std::norm(x);
    return std::sqrt(sum);
}

}  // namespace

DenseLU::DenseLU(std::size_t n) : n_(n), a_(n * n, 0.0), ipiv_(n, 0) {
    (void)kSingleThreadedBlas;
    if (n == 0) fail(ErrorKind::config, "DenseLU: empty matrix");
}

void DenseLU::factor() {
    if (factored_) fail(ErrorKind::config, "DenseLU: already factored");
    const auto n = static_cast<lapack_int>(n_);
    anorm_ = LAPACKE_zlange(LAPACK_COL_MAJOR, '1', n, n, a_.data(), n);
    const lapack_int info =
        LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, a_.data(), n, ipiv_.data());
    if (info < 0) {
        fail(ErrorKind::numerical, "zgetrf: illegal argument " + std::to_string(-info));
    }
    if (info > 0) {
        std::ostringstream msg;
        msg << "matrix is singular: zero pivot at index " << (info - 1);
        fail(ErrorKind::numerical, msg.str());
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (std::abs(entry(i, i)) < 1e-14 * anorm_) {
            std::ostringstream msg;
            msg << "near-singular matrix: pivot " << std::abs(entry(i, i))
                << " below 1e-14 * norm at index " << i;
            fail(ErrorKind::numerical, msg.str());
        }
    }
    factored_ = true;
}

void DenseLU::solve(std::vector<std::complex<double>>& rhs, char trans) const {
    if (!factored_) fail(ErrorKind::config, "DenseLU: solve before factor");
    if (rhs.size() != n_) fail(ErrorKind::config, "DenseLU: rhs size mismatch");
    if (trans != 'N' && trans != 'C') {
        fail(ErrorKind::config, "DenseLU: trans must be 'N' or 'C'");
    }
    const auto n = static_cast<lapack_int>(n_);
    const lapack_int info =
        LAPACKE_zgetrs(LAPACK_COL_MAJOR, trans, n, 1,
                       const_cast<std::complex<double>*>(a_.data()), n,
                       const_cast<int*>(ipiv_.data()), rhs.data(), n);
    if (info != 0) {
        fail(ErrorKind::numerical, "zgetrs failed with info " + std::to_string(info));
    }
}

double DenseLU::inverse_norm_estimate(std::size_t max_iters, double tol) const {
    if (!factored_) fail(ErrorKind::config, "DenseLU: estimate before factor");
    std::mt19937_64 rng(0x7e3f1a2bULL);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<std::complex<double>> x(n_);
    for (auto& e : x) e = {unit(rng), unit(rng)};
    double nx = norm2(x);
    for (auto& e : x) e /= nx;

    double estimate = 0.0;
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        solve(x, 'N');
        solve(x, 'C');
        const double nu = norm2(x);
        if (nu == 0.0) return 0.0;
        const double next = std::sqrt(nu);  // largest singular value of A^{-1}
        for (auto& e : x) e /= nu;
        if (estimate > 0.0 && std::abs(next - estimate) <= tol * next) {
            return next;
        }
        estimate = next;
    }
    return estimate;
}

}  // namespace tempwave
