#include "qvp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "qvp/lorentz.hpp"
#include "qvp/report.hpp"
#include "qvp/verify.hpp"

namespace qvp {

namespace {

struct ValidatedConfig {
    ModelSpec model;
    std::vector<long long> step_counts;
    double sigma_w;
    std::optional<double> resolution_limit;
    std::filesystem::path output_dir;
    bool svg;
};

ValidatedConfig validate(const RunConfig& config, std::ostream& diag) {
    if (config.model != "symmetric" && config.model != "tviolating") {
        throw std::invalid_argument("model: must be 'symmetric' or 'tviolating', got '" +
                                    config.model + "'");
    }
    if (!(config.sigma_w > 0.0) || !std::isfinite(config.sigma_w)) {
        throw std::invalid_argument("sigma: must be positive and finite");
    }
    if (config.model == "tviolating" && !(std::abs(config.asymmetry) < 1.0)) {
        throw std::invalid_argument("lambda: |lambda| must be < 1");
    }
    if (config.sites < 1 || config.sites % 2 == 0) {
        throw std::invalid_argument("sites: must be an odd positive integer");
    }
    if (!(config.spacing > 0.0) || !std::isfinite(config.spacing)) {
        throw std::invalid_argument("spacing: must be positive and finite");
    }
    if (config.step_counts.empty()) {
        throw std::invalid_argument("n: at least one step count is required");
    }
    for (long long n : config.step_counts) {
        if (n < 1) {
            throw std::invalid_argument("n: step counts must be >= 1");
        }
        if (n > 1000000) {
            throw std::invalid_argument("n: step counts above 1e6 are not supported");
        }
    }
    if (config.resolution_limit && !(*config.resolution_limit > 0.0)) {
        throw std::invalid_argument("dw-min: must be positive");
    }

    const Lattice lattice(config.sites, config.spacing);
    ModelSpec model = config.model == "symmetric"
                          ? build_symmetric(lattice)
                          : build_tviolating(lattice, config.asymmetry);

    std::vector<long long> steps = config.step_counts;
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

    // Aliasing guard: the lattice should comfortably contain the
    // expected support (peak offsets plus tails).
    const double lambda = config.model == "tviolating" ? std::abs(config.asymmetry) : 0.0;
    const double max_offset =
        lambda * std::sqrt(2.0 * double(steps.back())) * config.sigma_w;
    const double support = max_offset + config.sigma_w;
    if (lattice.extent() < 8.0 * support) {
        diag << "warning: lattice extent " << lattice.extent()
             << " is below 8x the expected support " << support
             << "; distributions may wrap around\n";
    }

    return ValidatedConfig{std::move(model), std::move(steps), config.sigma_w,
                           config.resolution_limit, config.output_dir, config.svg};
}

}  // namespace

int cmd_simulate(const RunConfig& config, std::ostream& diag) {
    try {
        const ValidatedConfig run = validate(config, diag);
        const long long steps = run.step_counts.front();
        if (run.step_counts.size() > 1) {
            diag << "warning: simulate uses the first step count only (N=" << steps
                 << ")\n";
        }
        if (run.resolution_limit) {
            const EquivalenceSet set = equivalence_set(run.sigma_w, *run.resolution_limit);
            if (!set.contains(steps)) {
                diag << "note: N=" << steps
                     << " resolves above dw-min; equivalence set starts at N="
                     << set.first() << "\n";
            }
        }

        const QvpParams params =
            make_params(run.model, int(steps), run.sigma_w, run.resolution_limit);
        const QvpState state = build_qvp(params, run.model);
        const Distribution dist = distribution(state);

        std::filesystem::create_directories(run.output_dir);
        write_text_atomic(run.output_dir / "distribution.csv", distribution_csv(dist));
        if (run.svg) {
            write_text_atomic(run.output_dir / "distribution.svg", distribution_svg(dist));
        }
        return exit_ok;
    } catch (const interference_error& e) {
        diag << "error: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const std::invalid_argument& e) {
        diag << "error: " << e.what() << '\n';
        return exit_config_error;
    }
}

int cmd_sweep(const RunConfig& config, std::ostream& diag) {
    try {
        const ValidatedConfig run = validate(config, diag);
        const double lambda = run.model.kind == ModelSpec::Kind::t_violating
                                  ? std::abs(run.model.asymmetry)
                                  : 0.0;
        const double required =
            sweep_required_extent(lambda, run.sigma_w, run.step_counts.back());
        if (run.model.lattice.extent() <= required) {
            std::ostringstream msg;
            msg << "sites/spacing: lattice extent " << run.model.lattice.extent()
                << " too small for this sweep; required extent > " << required;
            throw std::invalid_argument(msg.str());
        }

        const Distribution reference =
            gaussian_reference(run.sigma_w, run.model.lattice);
        std::vector<SweepRow> rows;
        rows.reserve(run.step_counts.size());
        for (long long steps : run.step_counts) {
            const QvpParams params = make_params(run.model, int(steps), run.sigma_w);
            const QvpState state = build_qvp(params, run.model);
            const Distribution dist = distribution(state);
            const PeakReport report = detect_peaks(dist);
            const double predicted =
                2.0 * lambda * std::sqrt(2.0 * double(steps)) * run.sigma_w;
            const double rel_error =
                predicted > 0.0 ? std::abs(report.separation - predicted) / predicted
                                : 0.0;
            rows.push_back(SweepRow{steps, params.step_length(), report.separation,
                                    predicted, rel_error, report.origin_suppression,
                                    total_variation(dist, reference)});
        }

        std::filesystem::create_directories(run.output_dir);
        write_text_atomic(run.output_dir / "sweep.csv", sweep_csv(rows));
        return exit_ok;
    } catch (const interference_error& e) {
        diag << "error: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const std::invalid_argument& e) {
        diag << "error: " << e.what() << '\n';
        return exit_config_error;
    }
}

int cmd_verify(std::ostream& out) {
    return run_verification(out) ? exit_ok : exit_verify_failure;
}

int cmd_lorentz(double dx, double dt, double velocity, double light_speed,
                std::ostream& out, std::ostream& diag) {
    try {
        const Interval boosted =
            boost_interval(Interval{dx, dt}, Boost{velocity, light_speed});
        char buffer[96];
        std::snprintf(buffer, sizeof(buffer), "%.12f,%.12f\n", boosted.dx, boosted.dt);
        out << buffer;
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        diag << "error: " << e.what() << '\n';
        return exit_config_error;
    }
}

}  // namespace qvp
