#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "tempwave/error.hpp"
#include "tempwave/linalg.hpp"

using namespace tempwave;

namespace {

using cd = std::complex<double>;

DenseLU make2(cd a00, cd a01, cd a10, cd a11) {
    DenseLU lu(2);
    lu.entry(0, 0) = a00;
    lu.entry(0, 1) = a01;
    lu.entry(1, 0) = a10;
    lu.entry(1, 1) = a11;
    return lu;
}

}  // namespace

TEST_CASE("entry accessor is column-major") {
    auto lu = make2({1, 0}, {2, 0}, {3, 0}, {4, 0});
    // Column 0 first: (1, 3), then column 1: (2, 4).
    CHECK(lu.data()[0] == cd{1, 0});
    CHECK(lu.data()[1] == cd{3, 0});
    CHECK(lu.data()[2] == cd{2, 0});
    CHECK(lu.data()[3] == cd{4, 0});
}

TEST_CASE("hermitian 2x2 solve recovers a known vector") {
    auto lu = make2({2, 0}, {0, 1}, {0, -1}, {3, 0});
    lu.factor();
    REQUIRE(lu.factored());
    // A * (1, 1+i) = (1+i, 3+2i).
    std::vector<cd> rhs{{1, 1}, {3, 2}};
    lu.solve(rhs);
    CHECK(std::abs(rhs[0] - cd{1, 0}) < 1e-14);
    CHECK(std::abs(rhs[1] - cd{1, 1}) < 1e-14);
}

TEST_CASE("conjugate-transpose solve") {
    // A = [[1, 2i], [0, 1]]; A^H x = (1, 1) has x = (1, 1 + 2i).
    auto lu = make2({1, 0}, {0, 2}, {0, 0}, {1, 0});
    lu.factor();
    std::vector<cd> rhs{{1, 0}, {1, 0}};
    lu.solve(rhs, 'C');
    CHECK(std::abs(rhs[0] - cd{1, 0}) < 1e-14);
    CHECK(std::abs(rhs[1] - cd{1, 2}) < 1e-14);
}

TEST_CASE("random solves verified by multiplying back") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 17;
        DenseLU lu(n);
        std::vector<cd> a(n * n);
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t row = 0; row < n; ++row) {
                const cd v{dist(rng), dist(rng)};
                // Diagonal dominance keeps every trial comfortably regular.
                lu.entry(row, col) = v + (row == col ? cd{4, 0} : cd{0, 0});
                a[col * n + row] = lu.entry(row, col);
            }
        }
        std::vector<cd> x(n);
        for (auto& e : x) e = {dist(rng), dist(rng)};
        std::vector<cd> rhs(n, cd{0, 0});
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t row = 0; row < n; ++row) {
                rhs[row] += a[col * n + row] * x[col];
            }
        }
        lu.factor();
        lu.solve(rhs);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(rhs[i] - x[i]) < 1e-12);
        }
    }
}

TEST_CASE("singular and near-singular matrices are refused with an index") {
    auto singular = make2({1, 0}, {1, 0}, {1, 0}, {1, 0});
    CHECK_THROWS_WITH_AS(singular.factor(), doctest::Contains("index 1"), Error);
    try {
        auto again = make2({1, 0}, {1, 0}, {1, 0}, {1, 0});
        again.factor();
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::numerical);
    }

    auto nearly = make2({1, 0}, {0, 0}, {0, 0}, {1e-16, 0});
    CHECK_THROWS_WITH_AS(nearly.factor(), doctest::Contains("near-singular"),
                         Error);
}

TEST_CASE("usage errors are configuration errors") {
    CHECK_THROWS_AS(DenseLU(0), Error);

    auto lu = make2({1, 0}, {0, 0}, {0, 0}, {1, 0});
    std::vector<cd> rhs{{1, 0}, {1, 0}};
    CHECK_THROWS_AS(lu.solve(rhs), Error);              // before factor
    CHECK_THROWS_AS(lu.inverse_norm_estimate(), Error); // before factor
    lu.factor();
    CHECK_THROWS_AS(lu.factor(), Error);                // twice
    std::vector<cd> short_rhs{{1, 0}};
    CHECK_THROWS_AS(lu.solve(short_rhs), Error);
    CHECK_THROWS_AS(lu.solve(rhs, 'T'), Error);
}

TEST_CASE("inverse norm estimate against known spectra") {
    // diag(2, 1/2): largest singular value of the inverse is 2.
    auto diag = make2({2, 0}, {0, 0}, {0, 0}, {0.5, 0});
    diag.factor();
    CHECK(diag.inverse_norm_estimate() == doctest::Approx(2.0).epsilon(1e-2));

    // Hermitian [[2, i], [-i, 3]]: eigenvalues (5 +- sqrt(5))/2, so the
    // inverse norm is 2 / (5 - sqrt(5)).
    auto herm = make2({2, 0}, {0, 1}, {0, -1}, {3, 0});
    herm.factor();
    const double expected = 2.0 / (5.0 - std::sqrt(5.0));
    CHECK(herm.inverse_norm_estimate(40, 1e-6) ==
          doctest::Approx(expected).epsilon(1e-4));

    // Identity: exactly 1.
    auto id = make2({1, 0}, {0, 0}, {0, 0}, {1, 0});
    id.factor();
    CHECK(id.inverse_norm_estimate() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("factorization and solve are bit-deterministic") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const std::size_t n = 40;
    DenseLU first(n);
    DenseLU second(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
            const cd v = cd{dist(rng), dist(rng)} + (row == col ? cd{5, 0} : cd{0, 0});
            first.entry(row, col) = v;
            second.entry(row, col) = v;
        }
    }
    first.factor();
    second.factor();
    CHECK(std::memcmp(first.data(), second.data(), n * n * sizeof(cd)) == 0);

    std::vector<cd> rhs1(n, cd{1, -1});
    std::vector<cd> rhs2(n, cd{1, -1});
    first.solve(rhs1);
    second.solve(rhs2);
    CHECK(std::memcmp(rhs1.data(), rhs2.data(), n * sizeof(cd)) == 0);

    CHECK(first.inverse_norm_estimate() == second.inverse_norm_estimate());
}
