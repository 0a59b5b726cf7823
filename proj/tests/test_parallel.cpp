#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstring>
#include <vector>

#include "tempwave/effective.hpp"
#include "tempwave/foldy_lax.hpp"
#include "tempwave/model.hpp"
#include "tempwave/oracle.hpp"
#include "tempwave/trace.hpp"

using namespace tempwave;

// Every parallel loop in the library writes each output slot from exactly one
// thread and reads only shared immutable state, so the parallel result must be
// byte-identical to the serial one, not merely close. These tests pin that.

namespace {

RegimeParams wide_params() {
    RegimeParams params;
    params.delta = 2.5e-3;
    params.h = 0.5;
    params.l = 0.5;  // d = 0.05, so the window holds 198 steps
    return params;
}

bool bits_equal(const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(a[0])) == 0;
}

}  // namespace

TEST_CASE("parallel matrix fill is bit-identical to the serial fill") {
    const auto params = wide_params();
    const auto profile = build_profile(params);
    REQUIRE(profile.size() == 198);

    const auto serial = assemble_system(profile, params, kDefaultCapacity, false);
    const auto parallel = assemble_system(profile, params, kDefaultCapacity, true);
    const std::size_t n = serial.size();
    REQUIRE(parallel.size() == n);
    CHECK(std::memcmp(serial.lu.data(), parallel.lu.data(),
                      n * n * sizeof(std::complex<double>)) == 0);
    CHECK(bits_equal(serial.e_in, parallel.e_in));
    CHECK(bits_equal(serial.d_tilde, parallel.d_tilde));
}

TEST_CASE("solves from the two fill paths agree bit for bit") {
    const auto params = wide_params();
    const auto profile = build_profile(params);
    auto serial = assemble_system(profile, params, kDefaultCapacity, false);
    auto parallel = assemble_system(profile, params, kDefaultCapacity, true);
    solve_system(serial);
    solve_system(parallel);
    CHECK(bits_equal(serial.q_tilde, parallel.q_tilde));

    // The inverse-norm power iteration is seeded, so it is deterministic too.
    const double est1 = condition_estimate(serial);
    const double est2 = condition_estimate(parallel);
    CHECK(std::memcmp(&est1, &est2, sizeof(est1)) == 0);
}

TEST_CASE("parallel trace reconstruction matches the scalar evaluator") {
    const auto params = wide_params();
    const auto profile = build_profile(params);
    auto system = assemble_system(profile, params);
    solve_system(system);

    const auto grid = uniform_grid(-params.T / 2, 1.5 * params.T, 501);
    const auto trace = reconstruct_trace(system, grid);
    REQUIRE(trace.values.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto point = reconstruct_field(system, grid[i]);
        CHECK(std::memcmp(&trace.values[i], &point, sizeof(point)) == 0);
    }

    // Two runs of the printed variant must also coincide exactly.
    const auto printed1 = reconstruct_trace(system, grid, ReconstructionForm::printed);
    const auto printed2 = reconstruct_trace(system, grid, ReconstructionForm::printed);
    CHECK(bits_equal(printed1.values, printed2.values));
}

TEST_CASE("parallel oracle trace matches pointwise evaluation") {
    const auto params = wide_params();
    const auto profile = build_profile(params);
    const OracleField field(profile, params.kappa);
    const auto grid = uniform_grid(-params.T / 2, 1.5 * params.T, 501);
    const auto trace = field.trace(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto point = field.at(grid[i]);
        CHECK(std::memcmp(&trace.values[i], &point, sizeof(point)) == 0);
    }
}

TEST_CASE("parallel effective-field trace matches pointwise evaluation") {
    const auto params = wide_params();
    const auto sol = effective_solution(params);
    const auto grid = uniform_grid(-params.T / 2, 1.5 * params.T, 501);
    const auto trace = effective_trace(sol, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto point = effective_field_at(sol, grid[i]);
        CHECK(std::memcmp(&trace.values[i], &point, sizeof(point)) == 0);
    }
}

TEST_CASE("collocation refinement is run-to-run deterministic") {
    RegimeParams params;
    params.delta = 4e-3;
    const auto profile = build_profile(params);
    const auto grid = uniform_grid(-5.0, 15.0, 101);
    const auto run1 = nystrom_solve(profile, params, 4, grid);
    const auto run2 = nystrom_solve(profile, params, 4, grid);
    CHECK(bits_equal(run1.values, run2.values));
}
