#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tempwave/error.hpp"

namespace tempwave {

// Dense complex LU with partial pivoting (LAPACK zgetrf/zgetrs), column-major
// storage, factored in place. Factorization runs single-threaded so repeated
// runs stay bit-identical.
class DenseLU {
public:
    explicit DenseLU(std::size_t n);

    std::size_t size() const { return n_; }
    bool factored() const { return factored_; }

    std::complex<double>& entry(std::size_t row, std::size_t col) {
        return a_[col * n_ + row];
    }
    const std::complex<double>& entry(std::size_t row, std::size_t col) const {
        return a_[col * n_ + row];
    }
    std::complex<double>* data() { return a_.data(); }
    const std::complex<double>* data() const { return a_.data(); }

    // In-place LU. Throws Error{numerical} carrying the offending index when
    // a pivot falls below 1e-14 times the matrix 1-norm.
    void factor();

    // Solves op(A) x = rhs in place; trans is 'N' or 'C' (conjugate transpose).
    void solve(std::vector<std::complex<double>>& rhs, char trans = 'N') const;

    // Spectral-norm estimate of A^{-1} by power iteration on A^{-H} A^{-1}
    // (repeated solves); fixed seed, at most max_iters iterations, stops on
    // relative stagnation below tol.
    double inverse_norm_estimate(std::size_t max_iters = 20, double tol = 1e-3) const;

private:
    std::size_t n_;
    std::vector<std::complex<double>> a_;
    std::vector<int> ipiv_;
    bool factored_ = false;
    double anorm_ = 0.0;
};

}  // namespace tempwave
