#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "tempwave/error.hpp"
#include "tempwave/model.hpp"

using namespace tempwave;

namespace {

RegimeParams params_with(double delta, double h, double l, double T = 10.0,
                         double C = 1.0, double kappa = 1.0) {
    RegimeParams p;
    p.delta = delta;
    p.h = h;
    p.l = l;
    p.T = T;
    p.C = C;
    p.kappa = kappa;
    return p;
}

}  // namespace

TEST_CASE("scalar reduction recovers |k| / sqrt(eps0 mu0)") {
    WaveVectorSetup setup;  // defaults: k = (1,0,0), vacuum, k_perp = (0,1,0)
    CHECK(scalar_reduction(setup) == doctest::Approx(1.0).epsilon(1e-15));

    setup.k = {3.0, 4.0, 0.0};
    setup.k_perp = {0.0, 0.0, 1.0};
    CHECK(scalar_reduction(setup) == doctest::Approx(5.0).epsilon(1e-15));

    setup.eps0 = 4.0;
    CHECK(scalar_reduction(setup) == doctest::Approx(2.5).epsilon(1e-15));

    setup.eps0 = 2.0;
    setup.mu0 = 2.0;
    CHECK(scalar_reduction(setup) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("scalar reduction rejects malformed polarization") {
    WaveVectorSetup setup;
    setup.k_perp = {1e-6, 1.0, 0.0};  // not orthogonal to k = (1,0,0)
    CHECK_THROWS_WITH_AS(scalar_reduction(setup),
                         doctest::Contains("orthogonal"), Error);

    setup.k_perp = {0.0, 1.0 + 1e-6, 0.0};  // orthogonal but not unit
    CHECK_THROWS_WITH_AS(scalar_reduction(setup),
                         doctest::Contains("unit"), Error);

    // Exactly at the tolerance edge: still accepted.
    setup.k_perp = {0.0, 1.0, 0.0};
    CHECK_NOTHROW(scalar_reduction(setup));

    setup.k = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(scalar_reduction(setup), Error);

    setup.k = {1.0, 0.0, 0.0};
    setup.eps0 = -1.0;
    CHECK_THROWS_AS(scalar_reduction(setup), Error);
}

TEST_CASE("parameter validation enforces the documented ranges") {
    CHECK_NOTHROW(RegimeParams{}.validate());

    auto bad = [](auto&& mutate) {
        RegimeParams p;
        mutate(p);
        CHECK_THROWS_AS(p.validate(), Error);
        try {
            p.validate();
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::config);
        }
    };
    bad([](RegimeParams& p) { p.T = 0.0; });
    bad([](RegimeParams& p) { p.delta = 0.0; });
    bad([](RegimeParams& p) { p.delta = 1.0; });
    bad([](RegimeParams& p) { p.h = 0.0; });
    bad([](RegimeParams& p) { p.h = 1.5; });
    bad([](RegimeParams& p) { p.l = -0.1; });
    bad([](RegimeParams& p) { p.l = 1.01; });
    bad([](RegimeParams& p) { p.C = -1.0; });
    bad([](RegimeParams& p) { p.kappa = 0.0; });

    // Boundary values that are inside the closed ends.
    RegimeParams edge;
    edge.h = 1.0;
    edge.l = 1.0;
    edge.C = 0.0;
    CHECK_NOTHROW(edge.validate());
}

TEST_CASE("derived scalars match their closed forms") {
    const auto p = params_with(1e-3, 0.342, 0.9);
    CHECK(p.alpha() == doctest::Approx(0.242).epsilon(1e-12));
    CHECK(p.amplitude() ==
          doctest::Approx(std::pow(1e-3, -0.342)).epsilon(1e-15));
    CHECK(p.effective_amplitude() ==
          doctest::Approx(std::pow(1e-3, 1.0 - 0.342 - 0.9)).epsilon(1e-15));
    CHECK(p.lambda() ==
          doctest::Approx(std::sqrt(1.0 + p.effective_amplitude())).epsilon(1e-15));
    CHECK(p.lambda_bar() ==
          doctest::Approx(std::sqrt(1.0 + p.amplitude())).epsilon(1e-15));

    const auto beta = p.beta();
    CHECK(beta.real() == 0.0);
    CHECK(beta.imag() ==
          doctest::Approx(std::pow(1e-3, 1.0 - 0.342) / 2.0).epsilon(1e-15));

    // kappa and C scale beta as C / kappa.
    const auto q = params_with(1e-3, 0.342, 0.9, 10.0, 3.0, 2.0);
    CHECK(q.beta().imag() == doctest::Approx(1.5 * beta.imag()).epsilon(1e-15));
}

TEST_CASE("profile layout: delta = 0.05, l = 0.5 gives 43 centers") {
    const auto profile = build_profile(params_with(0.05, 0.5, 0.5));
    CHECK(profile.size() == 43);
    CHECK(profile.d == doctest::Approx(0.22360679775).epsilon(1e-10));
    CHECK(profile.half_width == doctest::Approx(0.025).epsilon(1e-15));
    CHECK_FALSE(profile.truncated);
    CHECK(profile.centers.front() == doctest::Approx(profile.d).epsilon(1e-15));
    CHECK(profile.centers.back() ==
          doctest::Approx(43.0 * profile.d).epsilon(1e-15));
}

TEST_CASE("profile layout: delta = 1e-3, l = 0.1 gives 18 centers") {
    const auto profile = build_profile(params_with(1e-3, 0.1, 0.1));
    CHECK(profile.size() == 18);
    CHECK(profile.d == doctest::Approx(std::pow(1e-3, 0.1)).epsilon(1e-15));
    CHECK(profile.d == doctest::Approx(0.501187).epsilon(1e-6));
}

TEST_CASE("profile count is maximal under (N + 1) d < T") {
    for (const auto& p : {params_with(0.05, 0.5, 0.5), params_with(1e-3, 0.1, 0.1),
                          params_with(0.2, 0.3, 0.7, 7.3)}) {
        const auto profile = build_profile(p);
        const auto n = static_cast<double>(profile.size());
        CHECK((n + 1.0) * profile.d < p.T);
        CHECK_FALSE((n + 2.0) * profile.d < p.T);
    }
}

TEST_CASE("profile invariants: steps stay inside (0, T) with full gaps") {
    for (const auto& p : {params_with(0.05, 0.5, 0.5), params_with(1e-3, 0.1, 0.1),
                          params_with(1e-2, 0.9, 1.0)}) {
        const auto profile = build_profile(p);
        REQUIRE(profile.size() >= 1);
        CHECK(profile.centers.front() - profile.half_width > 0.0);
        CHECK(profile.centers.back() + profile.half_width < profile.T);
        CHECK(profile.d >= p.delta);  // neighboring steps never overlap
        for (std::size_t j = 1; j < profile.size(); ++j) {
            CHECK(profile.centers[j] - profile.centers[j - 1] ==
                  doctest::Approx(profile.d).epsilon(1e-12));
        }
        // Total covered time stays below the window length.
        CHECK(static_cast<double>(profile.size()) * p.delta < p.T);
    }
}

TEST_CASE("profile refuses a window that fits no center") {
    // d = 0.5 and T = 1: (1 + 1) * d < T fails already at one center.
    CHECK_THROWS_WITH_AS(build_profile(params_with(0.5, 0.5, 1.0, 1.0)),
                         doctest::Contains("window too small"), Error);
}

TEST_CASE("n_cap truncates and flags the profile") {
    const auto p = params_with(1e-3, 0.1, 0.1);
    const auto full = build_profile(p);
    REQUIRE(full.size() == 18);

    const auto capped = build_profile(p, 5);
    CHECK(capped.size() == 5);
    CHECK(capped.truncated);
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(capped.centers[j] == full.centers[j]);
    }

    // A cap above the natural count changes nothing.
    const auto loose = build_profile(p, 100);
    CHECK(loose.size() == 18);
    CHECK_FALSE(loose.truncated);
}

TEST_CASE("omega_p_squared is two-valued with closed step intervals") {
    const auto p = params_with(1e-3, 0.1, 0.1);
    const auto profile = build_profile(p);
    const double amp = std::pow(1e-3, -0.1);
    CHECK(profile.amplitude == doctest::Approx(amp).epsilon(1e-15));
    CHECK(profile.amplitude == doctest::Approx(1.9952623).epsilon(1e-7));

    const double t1 = profile.centers.front();
    const double hw = profile.half_width;
    CHECK(profile.omega_p_squared(t1) == profile.amplitude);
    CHECK(profile.omega_p_squared(t1 - hw) == profile.amplitude);  // closed edge
    CHECK(profile.omega_p_squared(t1 + hw) == profile.amplitude);
    CHECK(profile.omega_p_squared(t1 - hw - 1e-9) == 0.0);
    CHECK(profile.omega_p_squared(t1 + hw + 1e-9) == 0.0);
    CHECK(profile.omega_p_squared(-1.0) == 0.0);
    CHECK(profile.omega_p_squared(0.0) == 0.0);
    CHECK(profile.omega_p_squared(profile.T) == 0.0);

    // Midgap between any two steps is background.
    for (std::size_t j = 1; j < profile.size(); ++j) {
        const double mid = 0.5 * (profile.centers[j - 1] + profile.centers[j]);
        CHECK(profile.omega_p_squared(mid) == 0.0);
    }

    // Every value over a dense scan is one of the two levels.
    for (int i = 0; i <= 2000; ++i) {
        const double t = -1.0 + 12.0 * static_cast<double>(i) / 2000.0;
        const double v = profile.omega_p_squared(t);
        CHECK((v == 0.0 || v == profile.amplitude));
    }
}

TEST_CASE("omega_p_squared matches the contrast table levels") {
    const auto row3 = build_profile(params_with(1e-3, 0.342, 0.9));
    CHECK(row3.amplitude == doctest::Approx(10.616956).epsilon(1e-6));
    CHECK(row3.omega_p_squared(row3.centers.front()) ==
          doctest::Approx(10.616956).epsilon(1e-6));
}

TEST_CASE("profile CSV export has the documented shape") {
    const auto profile = build_profile(params_with(0.05, 0.5, 0.5));
    std::ostringstream out;
    write_profile_csv(profile, out, -1.0, 11.0, 5);
    const std::string text = out.str();
    CHECK(text.rfind("t,omega_p_sq\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 6);  // header + 5 samples

    std::ostringstream bad;
    CHECK_THROWS_AS(write_profile_csv(profile, bad, 0.0, 0.0, 5), Error);
    CHECK_THROWS_AS(write_profile_csv(profile, bad, 0.0, 1.0, 1), Error);
}
