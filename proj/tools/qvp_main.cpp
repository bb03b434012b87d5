#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qvp/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Quantum virtual path simulator: superpositions of N-step\n"
                 "forward/backward translation paths, their localization and\n"
                 "interference diagnostics, and a Lorentz interval utility."};
    app.require_subcommand(1);
    app.set_config("--config", "", "Key-value config file; flags take precedence");

    qvp::RunConfig config;
    long long single_n = 0;

    auto add_run_options = [&](CLI::App* cmd, bool list) {
        cmd->add_option("--model", config.model, "Generator pair: symmetric | tviolating")
            ->capture_default_str();
        cmd->add_option("--lambda", config.asymmetry,
                        "T-violation strength, |lambda| < 1 (tviolating only)")
            ->capture_default_str();
        cmd->add_option("--sigma", config.sigma_w, "Target spread sigma_w")
            ->capture_default_str();
        if (list) {
            cmd->add_option("--n-list", config.step_counts,
                            "Step counts N (comma separated)")
                ->required()
                ->delimiter(',');
        } else {
            cmd->add_option("--n", single_n, "Step count N")->required();
        }
        cmd->add_option("--sites", config.sites, "Lattice sites D (odd)")
            ->capture_default_str();
        cmd->add_option("--spacing", config.spacing, "Lattice spacing")
            ->capture_default_str();
        cmd->add_option("--dw-min", [&config](const std::vector<std::string>& values) {
                config.resolution_limit = std::stod(values.front());
                return true;
            },
            "Resolution limit on the step length");
        cmd->add_option("--output-dir", config.output_dir, "Directory for output files")
            ->capture_default_str();
    };

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Build one quantum virtual path state; write distribution.csv");
    add_run_options(simulate, /*list=*/false);
    simulate->add_flag("--svg", config.svg, "Also write distribution.svg");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep over step counts; write sweep.csv with peak diagnostics");
    add_run_options(sweep, /*list=*/true);

    app.add_subcommand("verify", "Run the full invariant suite; exit 0 iff all pass");

    CLI::App* lorentz =
        app.add_subcommand("lorentz", "Boost a spacetime interval; print dx',dt'");
    double dx = 0.0;
    double dt = 0.0;
    double velocity = 0.0;
    double light_speed = 1.0;
    lorentz->add_option("--dx", dx, "Spatial separation")->required();
    lorentz->add_option("--dt", dt, "Temporal separation")->required();
    lorentz->add_option("--v", velocity, "Frame velocity, |v| < c")->required();
    lorentz->add_option("--c", light_speed, "Speed of light")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qvp::exit_config_error;
    }

    if (simulate->parsed()) {
        config.step_counts = {single_n};
        return qvp::cmd_simulate(config, std::cerr);
    }
    if (sweep->parsed()) {
        return qvp::cmd_sweep(config, std::cerr);
    }
    if (lorentz->parsed()) {
        return qvp::cmd_lorentz(dx, dt, velocity, light_speed, std::cout, std::cerr);
    }
    return qvp::cmd_verify(std::cout);
}
