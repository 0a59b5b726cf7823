#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tempwave/cli.hpp"
#include "tempwave/error.hpp"

namespace {

constexpr const char* kConfigHelp = R"(config file: `key = value` lines, `#` comments. Keys:
  T        window length (time), > 0                default 10
  delta    step width (time), in (0, 1)             default 1e-3
  h        contrast exponent, in (0, 1]             default 0.1
  l        spacing exponent, in (0, 1]              default 0.1
  C        amplitude constant (frequency^2), >= 0   default 1
  kappa    background wavenumber (frequency), > 0   default 1
  t_min    grid start (time)                        default -T/2
  t_max    grid end (time)                          default 3T/2
  samples  grid points, >= 2                        default 400
  n_cap    profile truncation (count), >= 1         default off
  capacity dense-solve budget (count), >= 1         default 6000
  c        resonance threshold constant, > 0        default 1.0
  reconstruction  field formula: full | printed     default full
  dump_system     write matrix/charge dumps: 0 | 1  default 0
  sweep    preset: c2-slope | single-slab | near-resonance   default c2-slope
  out      output directory                         default $TEMPWAVE_OUT or ./out

subcommands: profile, oracle, foldy-lax, effective, compare, sweep, tables
exit codes: 0 ok, 1 config, 2 capacity, 3 numerical, 4 reproduction mismatch)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tempwave: scattering from time-modulated step media"};
    app.footer(kConfigHelp);

    std::string config_path;
    std::string out_dir;
    std::string subcommand_flag;
    std::string subcommand_pos;
    app.add_option("--config", config_path, "path to a key = value config file");
    app.add_option("--out", out_dir, "output directory (overrides config and env)");
    app.add_option("--subcommand", subcommand_flag, "subcommand to run");
    app.add_option("cmd", subcommand_pos, "subcommand to run (positional)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::string subcommand = subcommand_flag.empty() ? subcommand_pos : subcommand_flag;
    if (!subcommand_flag.empty() && !subcommand_pos.empty() &&
        subcommand_flag != subcommand_pos) {
        std::cerr << "error: --subcommand and the positional argument disagree\n";
        return 1;
    }
    if (subcommand.empty()) {
        std::cerr << "error: no subcommand given; valid: profile, oracle, foldy-lax, "
                     "effective, compare, sweep, tables\n";
        return 1;
    }

    tempwave::RunConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read config file '" << config_path << "'\n";
            return 1;
        }
        std::ostringstream text;
        text << in.rdbuf();
        try {
            config = tempwave::parse_config(text.str());
        } catch (const tempwave::Error& e) {
            std::cerr << "error: " << config_path << ": " << e.what() << '\n';
            return e.exit_code();
        }
    }
    if (!out_dir.empty()) config.out_dir = out_dir;

    return tempwave::dispatch(config, subcommand);
}
