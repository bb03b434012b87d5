#include "qvp/engine.hpp"

#include <cmath>
#include <sstream>

namespace qvp {

double step_size(long long steps, double sigma_w) {
    if (steps < 1) {
        throw std::invalid_argument("step_size: step count must be >= 1");
    }
    if (!(sigma_w > 0.0) || !std::isfinite(sigma_w)) {
        throw std::invalid_argument("step_size: sigma_w must be positive and finite");
    }
    return std::sqrt(2.0) * sigma_w / std::sqrt(double(steps));
}

long long snapped_ceil(double x) {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
        return static_cast<long long>(nearest);
    }
    return static_cast<long long>(std::ceil(x));
}

QvpParams::QvpParams(Lattice lattice_in, int steps_in, double sigma_w_in,
                     Vector initial_in, std::optional<double> resolution_limit_in)
    : lattice(lattice_in),
      steps(steps_in),
      sigma_w(sigma_w_in),
      initial(std::move(initial_in)),
      resolution_limit(resolution_limit_in) {
    if (steps < 1) {
        throw std::invalid_argument("QvpParams: step count must be >= 1");
    }
    if (!(sigma_w > 0.0) || !std::isfinite(sigma_w)) {
        throw std::invalid_argument("QvpParams: sigma_w must be positive and finite");
    }
    if (resolution_limit && !(*resolution_limit > 0.0)) {
        throw std::invalid_argument("QvpParams: resolution limit must be positive");
    }
    if (initial.size() == 0) {
        initial = basis_state(lattice, 0);
    }
    require_finite(initial, "QvpParams initial state");
    if (initial.size() % lattice.sites != 0) {
        std::ostringstream msg;
        msg << "QvpParams: initial state dimension " << initial.size()
            << " is not a multiple of the " << lattice.sites << "-site lattice";
        throw std::invalid_argument(msg.str());
    }
    if (std::abs(initial.norm() - 1.0) >= numerics().identity) {
        std::ostringstream msg;
        msg << "QvpParams: initial state norm " << initial.norm() << " is not 1";
        throw std::invalid_argument(msg.str());
    }
}

Matrix step_operator(const HermitianGenerator& w_forward,
                     const HermitianGenerator& w_backward, double step_length) {
    if (w_forward.dim() != w_backward.dim()) {
        throw std::invalid_argument("step_operator: generator dimensions differ");
    }
    if (!std::isfinite(step_length)) {
        throw std::invalid_argument("step_operator: step length must be finite");
    }
    return (w_backward.exponential(+step_length) + w_forward.exponential(-step_length)) / 2.0;
}

namespace {

void check_generators(const QvpParams& params, const HermitianGenerator& w_forward,
                      const HermitianGenerator& w_backward, const char* what) {
    if (w_forward.dim() != w_backward.dim()) {
        throw std::invalid_argument(std::string(what) + ": generator dimensions differ");
    }
    if (w_forward.dim() != params.initial.size()) {
        std::ostringstream msg;
        msg << what << ": generators act on dimension " << w_forward.dim()
            << " but the initial state has " << params.initial.size();
        throw std::invalid_argument(msg.str());
    }
}

QvpState finalize_state(Vector amplitudes, const QvpParams& params,
                        const std::string& model_id, const char* what) {
    const double pre_norm = amplitudes.norm();
    if (pre_norm < numerics().degenerate_norm) {
        std::ostringstream msg;
        msg << what << ": complete destructive interference, pre-normalization norm "
            << pre_norm;
        throw interference_error(msg.str());
    }
    amplitudes /= pre_norm;
    return QvpState{std::move(amplitudes), params.lattice, params.steps,
                    params.step_length(), model_id, pre_norm};
}

// Series exponential (scaling and squaring), used only by the
// brute-force oracle so its path is independent of the spectral one.
Matrix series_exponential(const Matrix& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5) {
        scale /= 2.0;
        ++squarings;
    }
    const Matrix scaled = a * scale;
    const Eigen::Index n = a.rows();
    Matrix result = Matrix::Identity(n, n);
    Matrix term = Matrix::Identity(n, n);
    for (int order = 1; order <= 24; ++order) {
        term = (term * scaled / double(order)).eval();
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = (result * result).eval();
    }
    return result;
}

}  // namespace

QvpState build_qvp(const QvpParams& params, const HermitianGenerator& w_forward,
                   const HermitianGenerator& w_backward, const std::string& model_id) {
    check_generators(params, w_forward, w_backward, "build_qvp");
    const Matrix step = step_operator(w_forward, w_backward, params.step_length());
    Vector amplitudes = params.initial;
    for (int n = 0; n < params.steps; ++n) {
        amplitudes = step * amplitudes;
    }
    return finalize_state(std::move(amplitudes), params, model_id, "build_qvp");
}

QvpState brute_force_qvp(const QvpParams& params, const HermitianGenerator& w_forward,
                         const HermitianGenerator& w_backward, const std::string& model_id) {
    constexpr int max_steps = 12;
    if (params.steps > max_steps) {
        std::ostringstream msg;
        msg << "brute_force_qvp: " << params.steps << " steps exceeds the 2^N oracle guard ("
            << max_steps << ")";
        throw std::invalid_argument(msg.str());
    }
    check_generators(params, w_forward, w_backward, "brute_force_qvp");

    const double dw = params.step_length();
    const Complex i_unit(0.0, 1.0);
    const Matrix backward = series_exponential(i_unit * dw * w_backward.matrix());
    const Matrix forward = series_exponential(-i_unit * dw * w_forward.matrix());

    // Depth-first over all 2^N factor sequences, sharing common prefixes.
    Vector sum = Vector::Zero(params.initial.size());
    auto enumerate = [&](auto&& self, const Vector& v, int remaining) -> void {
        if (remaining == 0) {
            sum += v;
            return;
        }
        self(self, Vector(backward * v), remaining - 1);
        self(self, Vector(forward * v), remaining - 1);
    };
    enumerate(enumerate, params.initial, params.steps);
    sum /= std::pow(2.0, double(params.steps));

    return finalize_state(std::move(sum), params, model_id, "brute_force_qvp");
}

Distribution amplitudes_distribution(const Vector& amplitudes, const Lattice& lattice) {
    if (amplitudes.size() % lattice.sites != 0 || amplitudes.size() == 0) {
        throw std::invalid_argument("distribution: amplitude dimension incompatible with lattice");
    }
    const Eigen::Index internal_dim = amplitudes.size() / lattice.sites;
    RealVector masses = RealVector::Zero(lattice.sites);
    for (int j = 0; j < lattice.sites; ++j) {
        double mass = 0.0;
        for (Eigen::Index s = 0; s < internal_dim; ++s) {
            mass += std::norm(amplitudes(j * internal_dim + s));
        }
        masses(j) = std::max(mass, 0.0);
    }
    const double total = masses.sum();
    if (std::abs(total - 1.0) >= numerics().identity) {
        std::ostringstream msg;
        msg << "distribution: masses sum to " << total << ", expected 1";
        throw std::invalid_argument(msg.str());
    }
    return Distribution{std::move(masses), lattice};
}

Distribution distribution(const QvpState& state) {
    return amplitudes_distribution(state.amplitudes, state.lattice);
}

Distribution gaussian_reference(double sigma_w, const Lattice& lattice) {
    if (!(sigma_w > 0.0) || !std::isfinite(sigma_w)) {
        throw std::invalid_argument("gaussian_reference: sigma_w must be positive");
    }
    RealVector masses(lattice.sites);
    for (int j = 0; j < lattice.sites; ++j) {
        const double w = lattice.label(j);
        masses(j) = std::exp(-w * w / (2.0 * sigma_w * sigma_w));
    }
    masses /= masses.sum();
    return Distribution{std::move(masses), lattice};
}

EquivalenceSet::EquivalenceSet(double sigma_w, double resolution_limit) {
    if (!(sigma_w > 0.0) || !std::isfinite(sigma_w)) {
        throw std::invalid_argument("equivalence_set: sigma_w must be positive");
    }
    if (!(resolution_limit > 0.0) || !std::isfinite(resolution_limit)) {
        throw std::invalid_argument("equivalence_set: resolution limit must be positive");
    }
    // step_size(N) <= limit  <=>  N >= 2 sigma^2 / limit^2
    const double threshold = 2.0 * sigma_w * sigma_w / (resolution_limit * resolution_limit);
    first_ = std::max<long long>(1, snapped_ceil(threshold));
}

long long EquivalenceSet::member(long long index) const {
    if (index < 0) {
        throw std::invalid_argument("EquivalenceSet::member: index must be >= 0");
    }
    return first_ + index;
}

std::vector<long long> EquivalenceSet::first_n(int count) const {
    if (count < 0) {
        throw std::invalid_argument("EquivalenceSet::first_n: count must be >= 0");
    }
    std::vector<long long> members(count);
    for (int i = 0; i < count; ++i) {
        members[i] = first_ + i;
    }
    return members;
}

EquivalenceSet equivalence_set(double sigma_w, double resolution_limit) {
    return EquivalenceSet(sigma_w, resolution_limit);
}

}  // namespace qvp
