#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "tempwave/error.hpp"

namespace tempwave {

// Sampled complex field over a time grid; the common output of the
// transfer-matrix, interaction-system, and effective-slab solvers.
struct FieldTrace {
    std::vector<double> grid;                 // strictly increasing
    std::vector<std::complex<double>> values; // same length as grid
    std::string label;                        // oracle | foldy_lax | effective | incident

    std::size_t size() const { return grid.size(); }

    void validate() const {
        if (grid.empty() || grid.size() != values.size()) {
            fail(ErrorKind::config, "trace '" + label + "' is empty or misaligned");
        }
        for (std::size_t i = 1; i < grid.size(); ++i) {
            if (!(grid[i] > grid[i - 1])) {
                fail(ErrorKind::config, "trace '" + label + "' grid not increasing");
            }
        }
        for (const auto& v : values) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                fail(ErrorKind::numerical, "trace '" + label + "' has non-finite values");
            }
        }
    }
};

// Uniform grid helper; endpoints included.
std::vector<double> uniform_grid(double t_min, double t_max, std::size_t samples);

// Largest pointwise modulus difference between two aligned traces.
double sup_difference(const FieldTrace& a, const FieldTrace& b);

}  // namespace tempwave
