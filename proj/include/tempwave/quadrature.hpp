#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "tempwave/error.hpp"

namespace tempwave {

// Gauss-Legendre rule on [-1, 1] of order 1, 2, 4, or 8 (tabulated nodes).
struct GaussRule {
    std::span<const double> nodes;
    std::span<const double> weights;
};

GaussRule gauss_rule(std::size_t order);

// Composite Gauss-Legendre integral of f over [a, b] with `panels` equal
// panels of the given fixed order; convergence order ~2*order in the panel
// width for smooth integrands.
template <typename F>
std::complex<double> integrate(F&& f, double a, double b, std::size_t panels,
                               std::size_t order = 8) {
    if (!(b > a) || panels == 0) {
        fail(ErrorKind::config, "integrate: need b > a and at least one panel");
    }
    const GaussRule rule = gauss_rule(order);
    const double width = (b - a) / static_cast<double>(panels);
    std::complex<double> total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = a + (static_cast<double>(p) + 0.5) * width;
        const double hw = 0.5 * width;
        std::complex<double> panel = 0.0;  // serial inner sum, order-fixed
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            panel += rule.weights[q] * f(mid + hw * rule.nodes[q]);
        }
        total += hw * panel;
    }
    return total;
}

}  // namespace tempwave
