#pragma once

#include "qdc/sweep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qdc::cli {

/// Bad flags, malformed numbers, out-of-range values. Maps to exit status 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// --help was requested; what() carries the help text. Maps to exit status 0.
struct help_requested : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { Sweep, Preset, Trends };

struct RunConfig {
    Mode mode = Mode::Preset;
    std::string preset;  // required for preset/trends modes
    Protocol protocol = Protocol::perfect();
    InitialState initial = InitialState::Excited;
    int n = 2;
    std::vector<double> delta{0.0};
    std::vector<double> kappa{2.5};
    double q = 0.1;
    double tau_max = 10.0;
    int steps = 2000;
    std::string out;  // empty: standard output

    bool operator==(const RunConfig&) const = default;

    /// The sweep specs this configuration runs. Sweep mode: one spec, with a
    /// vary entry for whichever of --delta/--kappa was given several values
    /// (at most one may be). Preset/trends: the figure's spec(s) with
    /// tau_max/steps applied.
    std::vector<SweepSpec> resolve_specs() const;

    /// key=value serialization readable back through --config.
    std::string to_config_text() const;
};

/// Parses flags (and an optional --config key=value file; explicit flags win).
/// Throws usage_error on unknown flags, malformed numbers or out-of-range
/// values, and help_requested for --help.
RunConfig parse_args(int argc, const char* const* argv);

/// Full command-line entry point: parse, execute, write CSV or trend report.
/// Returns the process exit status: 0 success, 1 runtime/IO failure, 2 usage
/// or validation error.
int run(int argc, const char* const* argv);

}  // namespace qdc::cli
