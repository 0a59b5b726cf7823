// Compares the OpenMP kernels against their serial reference paths:
// matrix assembly (parallel flag), field reconstruction (parallel trace vs
// per-point serial loop), and transfer-matrix evaluation. Charges are
// copied from the right-hand side instead of solved; the dense solve is
// LAPACK's concern, not a kernel under test, and the evaluation cost does
// not depend on the charge values.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>

#include "tempwave/foldy_lax.hpp"
#include "tempwave/model.hpp"
#include "tempwave/oracle.hpp"
#include "tempwave/trace.hpp"

namespace {

using tempwave::FieldTrace;

template <typename F>
double best_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const auto stop = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        if (ms < best) best = ms;
    }
    return best;
}

// Keeps results observable so the timed calls cannot be elided.
double g_sink = 0.0;
void consume(const FieldTrace& trace) {
    g_sink += std::abs(trace.values.back());
}

}  // namespace

int main() {
    std::printf("%8s %14s %14s %12s %12s %12s %12s\n", "N", "asm_serial", "asm_parallel",
                "rec_serial", "rec_parallel", "orc_serial", "orc_parallel");

    for (const double delta : {1e-2, 3e-3, 1.5e-3}) {
        tempwave::RegimeParams params;
        params.h = 0.5;
        params.l = 0.9;
        params.delta = delta;
        const tempwave::StepProfile profile = tempwave::build_profile(params);
        const std::vector<double> grid = tempwave::uniform_grid(-5.0, 15.0, 400);

        const double asm_serial = best_ms([&] {
            auto system = tempwave::assemble_system(profile, params, 10000, false);
            g_sink += std::abs(system.d_tilde.back());
        });
        const double asm_parallel = best_ms([&] {
            auto system = tempwave::assemble_system(profile, params, 10000, true);
            g_sink += std::abs(system.d_tilde.back());
        });

        auto system = tempwave::assemble_system(profile, params, 10000, true);
        system.q_tilde = system.d_tilde;
        system.solved = true;

        const double rec_serial = best_ms([&] {
            FieldTrace trace;
            trace.grid = grid;
            trace.values.reserve(grid.size());
            for (const double t : grid) {
                trace.values.push_back(tempwave::reconstruct_field(system, t));
            }
            trace.label = "foldy_lax";
            consume(trace);
        });
        const double rec_parallel = best_ms([&] {
            consume(tempwave::reconstruct_trace(system, grid));
        });

        const tempwave::OracleField field(profile, params.kappa);
        const double orc_serial = best_ms([&] {
            FieldTrace trace;
            trace.grid = grid;
            trace.values.reserve(grid.size());
            for (const double t : grid) trace.values.push_back(field.at(t));
            trace.label = "oracle";
            consume(trace);
        });
        const double orc_parallel = best_ms([&] { consume(field.trace(grid)); });

        std::printf("%8zu %12.2fms %12.2fms %10.2fms %10.2fms %10.2fms %10.2fms\n",
                    profile.size(), asm_serial, asm_parallel, rec_serial,
                    rec_parallel, orc_serial, orc_parallel);
    }

    std::fprintf(stderr, "checksum %.3e\n", g_sink);
    return 0;
}
