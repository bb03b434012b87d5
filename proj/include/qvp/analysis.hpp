#pragma once

#include "qvp/models.hpp"

namespace qvp {

struct Peak {
    double center;  // mass-weighted centroid within the peak's basin
    double height;  // mass at the local maximum
    double width;   // rms of mass about the center within the basin
};

struct PeakReport {
    std::vector<Peak> peaks;    // sorted by center
    double origin_suppression;  // mass at the w = 0 site / maximum mass
    double separation;          // distance between the two tallest peak centers
};

/// Deterministic peak finder: local maxima above min_height_fraction of
/// the global maximum, basins split at the minima between them,
/// adjacent peaks merged while their centers lie within one width.
PeakReport detect_peaks(const Distribution& dist, double min_height_fraction = 0.05);

/// (1/2) sum |p_j - q_j|, in [0, 1]. Requires matching lattices.
double total_variation(const Distribution& p, const Distribution& q);

struct SeparationRow {
    long long steps;
    double step_length;
    double measured;
    double predicted;  // 2 lambda sqrt(2N) sigma_w
    double relative_error;
};

/// Lattice extent required before a separation sweep is meaningful:
/// 8x the largest predicted separation.
double sweep_required_extent(double asymmetry, double sigma_w, long long max_steps);

/// Twin-peak separation of the built-in T-violating model across an
/// increasing list of step counts, against the predicted law.
std::vector<SeparationRow> separation_sweep(double asymmetry, double sigma_w,
                                            const std::vector<long long>& step_counts,
                                            const Lattice& lattice);

/// Mass at the w = 0 site divided by the maximum mass.
double origin_suppression_check(const Distribution& dist);

enum class TimeDirection { forward, backward };

struct PeakShift {
    double center_before;
    double center_after;
    double shift;     // center_after - center_before
    double expected;  // signed, from the model's sector structure
};

/// Applies one evolution step (e^{-i tau W_F} forwards, e^{+i tau W_B}
/// backwards) and reports each peak's displacement next to the expected
/// one: tau (1 +- lambda) per sector for the T-violating model, tau for
/// a plain translation. Peaks are matched in center order.
std::vector<PeakShift> evolution_shift_check(const QvpState& state, const ModelSpec& model,
                                             double tau,
                                             TimeDirection direction = TimeDirection::forward);

/// Smallest N whose predicted half-separation lambda sqrt(2N) sigma_w
/// reaches t_star. Rejects lambda = 0: no dynamics, the galaxy stays
/// localized at the origin.
long long find_covering_N(double t_star, double asymmetry, double sigma_w);

/// |<a|b>|^2.
double fidelity(const QvpState& a, const QvpState& b);

}  // namespace qvp
