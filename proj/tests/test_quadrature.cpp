#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "tempwave/error.hpp"
#include "tempwave/quadrature.hpp"

using namespace tempwave;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("rule tables: symmetric nodes, weights summing to 2") {
    for (std::size_t order : {1u, 2u, 4u, 8u}) {
        const auto rule = gauss_rule(order);
        REQUIRE(rule.nodes.size() == order);
        REQUIRE(rule.weights.size() == order);
        double wsum = 0.0;
        for (std::size_t q = 0; q < order; ++q) {
            wsum += rule.weights[q];
            CHECK(rule.nodes[q] > -1.0);
            CHECK(rule.nodes[q] < 1.0);
            // Symmetry: node and weight mirror across zero.
            CHECK(rule.nodes[q] ==
                  doctest::Approx(-rule.nodes[order - 1 - q]).epsilon(1e-15));
            CHECK(rule.weights[q] ==
                  doctest::Approx(rule.weights[order - 1 - q]).epsilon(1e-15));
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("unsupported orders are refused") {
    for (std::size_t order : {0u, 3u, 5u, 16u}) {
        CHECK_THROWS_AS(gauss_rule(order), Error);
    }
}

TEST_CASE("order-n rule integrates degree 2n-1 exactly") {
    // Monomials over [0, 1]: integral of x^k is 1 / (k + 1).
    auto monomial_error = [](std::size_t order, int k) {
        const auto got = integrate(
            [k](double x) { return std::complex<double>(std::pow(x, k), 0.0); },
            0.0, 1.0, 1, order);
        return std::abs(got - std::complex<double>(1.0 / (k + 1.0), 0.0));
    };
    for (std::size_t order : {1u, 2u, 4u, 8u}) {
        const int max_exact = static_cast<int>(2 * order) - 1;
        for (int k = 0; k <= max_exact; ++k) {
            CHECK(monomial_error(order, k) < 1e-14);
        }
        // One degree past the guarantee the single-panel rule misses; the
        // smallest such miss is the 8-point rule on x^16, about 3.6e-10.
        CHECK(monomial_error(order, max_exact + 1) > 1e-11);
    }
}

TEST_CASE("composite refinement converges at order 2n") {
    const std::complex<double> exact(std::sin(1.0), 1.0 - std::cos(1.0));
    auto f = [](double x) {
        return std::complex<double>(std::cos(x), std::sin(x));
    };
    for (std::size_t order : {1u, 2u, 4u}) {
        const double e1 = std::abs(integrate(f, 0.0, 1.0, 2, order) - exact);
        const double e2 = std::abs(integrate(f, 0.0, 1.0, 4, order) - exact);
        REQUIRE(e2 > 0.0);
        // Doubling panels should gain close to 2^(2 order); demand half that.
        const double expected_gain = std::pow(2.0, 2.0 * static_cast<double>(order));
        CHECK(e1 / e2 > 0.5 * expected_gain);
    }
    // Order 8 on an analytic integrand is at machine precision immediately.
    CHECK(std::abs(integrate(f, 0.0, 1.0, 2, 8) - exact) < 1e-15);
}

TEST_CASE("oscillatory integral over many panels") {
    // integral of e^{i 20 x} over [0, 2 pi] vanishes.
    auto f = [](double x) {
        return std::complex<double>(std::cos(20.0 * x), std::sin(20.0 * x));
    };
    const auto got = integrate(f, 0.0, 2.0 * kPi, 256, 8);
    CHECK(std::abs(got) < 1e-14);
}

TEST_CASE("integrate validates its interval and panel count") {
    auto f = [](double) { return std::complex<double>(1.0, 0.0); };
    CHECK_THROWS_AS(integrate(f, 1.0, 1.0, 4), Error);
    CHECK_THROWS_AS(integrate(f, 2.0, 1.0, 4), Error);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 0), Error);
}
