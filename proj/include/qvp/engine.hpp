#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvp/symmetry.hpp"

namespace qvp {

/// Raised when every path interferes away and the pre-normalization
/// norm of the constructed state falls below numerics().degenerate_norm.
class interference_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// delta_w = sqrt(2) sigma_w / sqrt(N): the step length that keeps the
/// spread of final locations fixed at sigma_w as N grows.
double step_size(long long steps, double sigma_w);

/// Smallest integer >= x, with values within 1e-9 relative of an
/// integer snapped to it first. Threshold inversions of step_size hit
/// exact integers analytically; this keeps them exact numerically.
long long snapped_ceil(double x);

struct QvpParams {
    /// initial empty means |w=0> on the lattice.
    QvpParams(Lattice lattice, int steps, double sigma_w, Vector initial = {},
              std::optional<double> resolution_limit = std::nullopt);

    Lattice lattice;
    int steps;
    double sigma_w;
    Vector initial;
    std::optional<double> resolution_limit;

    double step_length() const { return step_size(steps, sigma_w); }
};

struct QvpState {
    Vector amplitudes;  // normalized
    Lattice lattice;
    int steps;
    double step_length;
    std::string model_id;
    double norm_before_normalization;
};

struct Distribution {
    RealVector masses;  // internal factor traced out, sums to 1
    Lattice lattice;
};

/// S = (e^{i W_B dw} + e^{-i W_F dw}) / 2; the average of one backward
/// and one forward elementary translation. Operator norm <= 1.
Matrix step_operator(const HermitianGenerator& w_forward,
                     const HermitianGenerator& w_backward, double step_length);

/// |g>_N propto S^N |initial>, evaluated as N successive applications
/// of the step operator, then normalized. The pre-normalization norm is
/// kept as an interference diagnostic.
QvpState build_qvp(const QvpParams& params, const HermitianGenerator& w_forward,
                   const HermitianGenerator& w_backward,
                   const std::string& model_id = "custom");

/// Oracle-only construction: sums all 2^N ordered products of
/// e^{i W_B dw} and e^{-i W_F dw} applied to the initial state, over
/// a series-expansion exponential kept separate from the spectral path.
/// Guarded to N <= 12.
QvpState brute_force_qvp(const QvpParams& params, const HermitianGenerator& w_forward,
                         const HermitianGenerator& w_backward,
                         const std::string& model_id = "custom");

/// P(w_j) = sum over the internal factor of |amplitude|^2.
Distribution distribution(const QvpState& state);
Distribution amplitudes_distribution(const Vector& amplitudes, const Lattice& lattice);

/// Lattice-normalized reference P(w) propto e^{-w^2 / (2 sigma_w^2)}.
Distribution gaussian_reference(double sigma_w, const Lattice& lattice);

/// All step counts whose step length resolves below the configured
/// limit: N with step_size(N, sigma_w) <= resolution_limit. Unbounded,
/// ascending; members are first() + index.
class EquivalenceSet {
public:
    EquivalenceSet(double sigma_w, double resolution_limit);

    long long first() const { return first_; }
    long long member(long long index) const;
    std::vector<long long> first_n(int count) const;
    bool contains(long long steps) const { return steps >= first_; }

private:
    long long first_;
};

EquivalenceSet equivalence_set(double sigma_w, double resolution_limit);

}  // namespace qvp
