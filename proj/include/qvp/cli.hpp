#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qvp {

// Process exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failure = 1;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_degenerate = 3;

/// Declarative run description; validated in full before any
/// computation so a rejected config never produces output files.
struct RunConfig {
    std::string model = "symmetric";  // symmetric | tviolating
    double asymmetry = 0.1;           // lambda, tviolating only
    double sigma_w = 1.0;
    std::vector<long long> step_counts;  // N (simulate uses the first)
    int sites = 513;
    double spacing = 0.25;
    std::optional<double> resolution_limit;
    std::string output_dir = ".";
    bool svg = false;
};

/// Writes distribution.csv (and distribution.svg when requested) for a
/// single run. Returns a process exit code; diagnostics go to diag.
int cmd_simulate(const RunConfig& config, std::ostream& diag);

/// Writes sweep.csv with one row per step count, ascending.
int cmd_sweep(const RunConfig& config, std::ostream& diag);

/// Runs the full invariant suite, one line per check.
int cmd_verify(std::ostream& out);

/// Prints "dx',dt'" for the boosted interval, fixed 12-decimal format.
int cmd_lorentz(double dx, double dt, double velocity, double light_speed,
                std::ostream& out, std::ostream& diag);

}  // namespace qvp
