#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "tempwave/foldy_lax.hpp"
#include "tempwave/model.hpp"

namespace tempwave {

// Typed run configuration: physics parameters plus grid, budgets, and
// output routing. Parsed from `key = value` text with `#` comments.
struct RunConfig {
    RegimeParams params;

    std::optional<double> t_min;  // default -T/2
    std::optional<double> t_max;  // default 3T/2
    std::size_t samples = 400;

    std::optional<std::size_t> n_cap;         // profile truncation
    std::size_t capacity = kDefaultCapacity;  // dense-solve budget
    double resonance_c = 1.0;                 // classification threshold constant

    ReconstructionForm form = ReconstructionForm::full_kernel;
    bool dump_system = false;
    std::string sweep_name = "c2-slope";
    std::string out_dir;  // empty: --out flag, then TEMPWAVE_OUT, then ./out

    double grid_min() const { return t_min ? *t_min : -0.5 * params.T; }
    double grid_max() const { return t_max ? *t_max : 1.5 * params.T; }
};

// Parses config text. Unknown keys, unparsable values, and range violations
// are config errors carrying the 1-based line number.
RunConfig parse_config(const std::string& text);

// Runs one subcommand of {profile, oracle, foldy-lax, effective, compare,
// sweep, tables} against the resolved output directory. Returns the process
// exit code: 0 on success, otherwise the ErrorKind value of the failure
// (1 config, 2 capacity, 3 numerical, 4 reproduction mismatch).
int dispatch(const RunConfig& config, const std::string& subcommand);

}  // namespace tempwave
