#include "qvp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qvp {

namespace {

struct Basin {
    int maximum_slot;
    int lo;
    int hi;
};

Peak measure_basin(const RealVector& masses, const Lattice& lattice, const Basin& basin) {
    double total = 0.0;
    double first_moment = 0.0;
    for (int j = basin.lo; j <= basin.hi; ++j) {
        total += masses(j);
        first_moment += masses(j) * lattice.label(j);
    }
    const double center = first_moment / total;
    double second_moment = 0.0;
    for (int j = basin.lo; j <= basin.hi; ++j) {
        const double d = lattice.label(j) - center;
        second_moment += masses(j) * d * d;
    }
    return Peak{center, masses(basin.maximum_slot), std::sqrt(second_moment / total)};
}

}  // namespace

PeakReport detect_peaks(const Distribution& dist, double min_height_fraction) {
    const RealVector& masses = dist.masses;
    const int n = int(masses.size());
    const double max_mass = masses.maxCoeff();
    if (!(max_mass > 0.0)) {
        throw std::invalid_argument("detect_peaks: all-zero distribution");
    }
    if (!(min_height_fraction >= 0.0) || !(min_height_fraction <= 1.0)) {
        throw std::invalid_argument("detect_peaks: min_height_fraction must be in [0, 1]");
    }
    const double threshold = min_height_fraction * max_mass;

    // Local maxima; plateau-tolerant (left >=, right >) so a flat top
    // yields a single candidate.
    std::vector<int> maxima;
    for (int j = 0; j < n; ++j) {
        const double left = j > 0 ? masses(j - 1) : -1.0;
        const double right = j + 1 < n ? masses(j + 1) : -1.0;
        if (masses(j) >= threshold && masses(j) >= left && masses(j) > right) {
            maxima.push_back(j);
        }
    }

    std::vector<Basin> basins;
    for (std::size_t i = 0; i < maxima.size(); ++i) {
        int lo = i == 0 ? 0 : basins.back().hi + 1;
        int hi = n - 1;
        if (i + 1 < maxima.size()) {
            int valley = maxima[i];
            for (int j = maxima[i]; j <= maxima[i + 1]; ++j) {
                if (masses(j) < masses(valley)) {
                    valley = j;
                }
            }
            hi = valley;
        }
        basins.push_back(Basin{maxima[i], lo, hi});
    }

    std::vector<Peak> peaks;
    peaks.reserve(basins.size());
    for (const Basin& basin : basins) {
        peaks.push_back(measure_basin(masses, dist.lattice, basin));
    }

    // Merge adjacent peaks closer than one width apart; smallest gap first.
    while (peaks.size() > 1) {
        std::size_t best = peaks.size();
        double best_gap = 0.0;
        for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
            const double gap = peaks[i + 1].center - peaks[i].center;
            if (gap < std::max(peaks[i].width, peaks[i + 1].width) &&
                (best == peaks.size() || gap < best_gap)) {
                best = i;
                best_gap = gap;
            }
        }
        if (best == peaks.size()) {
            break;
        }
        Basin merged{basins[best].maximum_slot, basins[best].lo, basins[best + 1].hi};
        if (masses(basins[best + 1].maximum_slot) > masses(merged.maximum_slot)) {
            merged.maximum_slot = basins[best + 1].maximum_slot;
        }
        basins[best] = merged;
        basins.erase(basins.begin() + best + 1);
        peaks[best] = measure_basin(masses, dist.lattice, merged);
        peaks.erase(peaks.begin() + best + 1);
    }

    double separation = 0.0;
    if (peaks.size() >= 2) {
        std::vector<std::size_t> order(peaks.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return peaks[a].height > peaks[b].height;
        });
        separation = std::abs(peaks[order[0]].center - peaks[order[1]].center);
    }

    const double origin = masses(dist.lattice.origin_slot()) / max_mass;
    return PeakReport{std::move(peaks), origin, separation};
}

double total_variation(const Distribution& p, const Distribution& q) {
    if (!(p.lattice == q.lattice)) {
        throw std::invalid_argument("total_variation: distributions live on different lattices");
    }
    return 0.5 * (p.masses - q.masses).cwiseAbs().sum();
}

double sweep_required_extent(double asymmetry, double sigma_w, long long max_steps) {
    return 8.0 * 2.0 * std::abs(asymmetry) * std::sqrt(2.0 * double(max_steps)) * sigma_w;
}

std::vector<SeparationRow> separation_sweep(double asymmetry, double sigma_w,
                                            const std::vector<long long>& step_counts,
                                            const Lattice& lattice) {
    if (step_counts.empty()) {
        throw std::invalid_argument("separation_sweep: empty step-count list");
    }
    for (std::size_t i = 0; i < step_counts.size(); ++i) {
        if (step_counts[i] < 1 || (i > 0 && step_counts[i] <= step_counts[i - 1])) {
            throw std::invalid_argument(
                "separation_sweep: step counts must be increasing and >= 1");
        }
        if (step_counts[i] > std::numeric_limits<int>::max()) {
            throw std::invalid_argument("separation_sweep: step count too large");
        }
    }
    const double required = sweep_required_extent(asymmetry, sigma_w, step_counts.back());
    if (lattice.extent() <= required) {
        std::ostringstream msg;
        msg << "separation_sweep: lattice extent " << lattice.extent()
            << " too small; required extent > " << required;
        throw std::invalid_argument(msg.str());
    }

    const ModelSpec model = build_tviolating(lattice, asymmetry);
    std::vector<SeparationRow> rows;
    rows.reserve(step_counts.size());
    for (long long steps : step_counts) {
        const QvpParams params = make_params(model, int(steps), sigma_w);
        const QvpState state = build_qvp(params, model);
        const PeakReport report = detect_peaks(distribution(state));
        const double predicted =
            2.0 * std::abs(asymmetry) * std::sqrt(2.0 * double(steps)) * sigma_w;
        const double relative_error =
            predicted > 0.0 ? std::abs(report.separation - predicted) / predicted : 0.0;
        rows.push_back(SeparationRow{steps, params.step_length(), report.separation,
                                     predicted, relative_error});
    }
    return rows;
}

double origin_suppression_check(const Distribution& dist) {
    const double max_mass = dist.masses.maxCoeff();
    if (!(max_mass > 0.0)) {
        throw std::invalid_argument("origin_suppression_check: all-zero distribution");
    }
    return dist.masses(dist.lattice.origin_slot()) / max_mass;
}

std::vector<PeakShift> evolution_shift_check(const QvpState& state, const ModelSpec& model,
                                             double tau, TimeDirection direction) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("evolution_shift_check: tau must be >= 0 and finite");
    }
    const std::vector<Peak> before = detect_peaks(distribution(state)).peaks;

    const Vector evolved = direction == TimeDirection::forward
                               ? forward_step(state.amplitudes, model.forward_generator, tau)
                               : backward_step(state.amplitudes, model.backward_generator, tau);
    const std::vector<Peak> after =
        detect_peaks(amplitudes_distribution(evolved, state.lattice)).peaks;

    if (after.size() != before.size()) {
        std::ostringstream msg;
        msg << "evolution_shift_check: peak count changed from " << before.size() << " to "
            << after.size();
        throw std::runtime_error(msg.str());
    }

    const double sign = direction == TimeDirection::forward ? +1.0 : -1.0;
    const double lambda = std::abs(model.asymmetry);
    std::vector<PeakShift> shifts;
    shifts.reserve(before.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
        double expected = sign * tau;
        if (model.kind == ModelSpec::Kind::t_violating && before.size() == 2) {
            // The right peak is the sector evolving with rate 1 + lambda
            // under forwards evolution and 1 - lambda under backwards.
            const bool right = i == 1;
            const bool fast = direction == TimeDirection::forward ? right : !right;
            expected = sign * tau * (fast ? 1.0 + lambda : 1.0 - lambda);
        }
        shifts.push_back(PeakShift{before[i].center, after[i].center,
                                   after[i].center - before[i].center, expected});
    }
    return shifts;
}

long long find_covering_N(double t_star, double asymmetry, double sigma_w) {
    if (asymmetry == 0.0) {
        throw std::invalid_argument(
            "find_covering_N: no dynamics: galaxy localized at origin only");
    }
    if (!(t_star > 0.0) || !std::isfinite(t_star)) {
        throw std::invalid_argument("find_covering_N: t_star must be positive");
    }
    if (!(sigma_w > 0.0)) {
        throw std::invalid_argument("find_covering_N: sigma_w must be positive");
    }
    // lambda sqrt(2N) sigma >= t  <=>  N >= t^2 / (2 lambda^2 sigma^2)
    const double threshold =
        t_star * t_star / (2.0 * asymmetry * asymmetry * sigma_w * sigma_w);
    return std::max<long long>(1, snapped_ceil(threshold));
}

double fidelity(const QvpState& a, const QvpState& b) {
    if (a.amplitudes.size() != b.amplitudes.size()) {
        throw std::invalid_argument("fidelity: state dimensions differ");
    }
    return std::norm(a.amplitudes.dot(b.amplitudes));
}

}  // namespace qvp
