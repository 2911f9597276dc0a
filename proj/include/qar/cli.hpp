// cli.hpp - Command-line front end
//
//   qar <steady|qsl|evolve|sweep|optimize|verify> [--config FILE] [parameter flags] [command options]

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qar/analysis.hpp"
#include "qar/errors.hpp"
#include "qar/model.hpp"

namespace qar::cli {

enum class Command { steady, evolve, qsl, sweep, optimize, verify };

std::string to_string(Command c);

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitComputation = 3,
    kExitVerification = 4,
};

// Malformed file, unknown key, missing key or out-of-range value.
class ConfigError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

struct RunConfig {
    Command command{Command::steady};
    model::FridgeParams params;

    // evolve; zero selects the defaults (50 / min p, 0.05 / max(E_r, q), ~1000 rows)
    double t_end{0.0};
    double dt{0.0};
    std::size_t record_stride{0};

    // sweep
    analysis::SweepKnob knob{analysis::SweepKnob::g};
    std::vector<double> grid;
    unsigned threads{0};

    // optimize; NaN selects the default bracket [1e-3, 1 - 1e-6] * eta_Carnot
    double eta_lo{0.0};
    double eta_hi{0.0};
    std::size_t opt_grid{64};

    std::string out_path;   // empty: $QAR_OUTPUT_DIR/<command>.csv, or ./<command>.csv

    bool help_requested{false};
    std::string help_text;
};

// Flags override values from --config. Throws ConfigError.
RunConfig parse_config(const std::vector<std::string>& args);

// Required model keys, in the order they are checked.
const std::vector<std::string>& required_keys();

// Where a command writes its CSV.
std::string output_path(const RunConfig& config);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv[1..], runs, and maps exceptions to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qar::cli
