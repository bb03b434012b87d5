#include "qvp/models.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace qvp {

namespace {

RealVector kron_real(const RealVector& a, const RealVector& b) {
    RealVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

Matrix sigma_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

// p (x) diag(1 + s, 1 - s) assembled from the translation generator's
// spectral data, so no re-diagonalization is needed at composite size.
HermitianGenerator clock_qubit_generator(const HermitianGenerator& p, double s) {
    RealVector internal(2);
    internal << 1.0 + s, 1.0 - s;
    Matrix mat = kron(p.matrix(), Matrix(internal.cast<Complex>().asDiagonal()));
    RealVector evals = kron_real(p.eigenvalues(), internal);
    Matrix evecs = kron(p.eigenvectors(), Matrix::Identity(2, 2));
    return HermitianGenerator::from_spectral(std::move(mat), std::move(evals),
                                             std::move(evecs));
}

}  // namespace

ModelSpec build_symmetric(const Lattice& lattice) {
    HermitianGenerator p = translation_generator(lattice);
    HermitianGenerator p_copy = p;
    return ModelSpec{ModelSpec::Kind::symmetric,
                     lattice,
                     0.0,
                     1,
                     std::move(p),
                     std::move(p_copy),
                     time_reversal_operator(lattice),
                     basis_state(lattice, 0),
                     "symmetric"};
}

ModelSpec build_tviolating(const Lattice& lattice, double asymmetry) {
    if (!(std::abs(asymmetry) < 1.0)) {
        std::ostringstream msg;
        msg << "build_tviolating: |asymmetry| must be < 1, got " << asymmetry;
        throw std::invalid_argument(msg.str());
    }
    const HermitianGenerator p = translation_generator(lattice);
    HermitianGenerator w_forward = clock_qubit_generator(p, asymmetry);
    HermitianGenerator w_backward = clock_qubit_generator(p, -asymmetry);
    AntiunitarySymmetry t = time_reversal_operator(lattice, sigma_x());

    // Construction invariant: W_B = T W_F T^{-1}.
    const double relation_defect =
        max_abs_diff(w_backward.matrix(), t.conjugate_matrix(w_forward.matrix()));
    if (relation_defect >= numerics().structural) {
        std::ostringstream msg;
        msg << "build_tviolating: W_B differs from T W_F T^{-1} by " << relation_defect;
        throw std::logic_error(msg.str());
    }

    Vector internal(2);
    internal << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    Vector initial = kron(basis_state(lattice, 0), internal);

    std::ostringstream id;
    id << "tviolating(lambda=" << asymmetry << ")";
    return ModelSpec{ModelSpec::Kind::t_violating,
                     lattice,
                     asymmetry,
                     2,
                     std::move(w_forward),
                     std::move(w_backward),
                     std::move(t),
                     std::move(initial),
                     id.str()};
}

ModelSpec build_custom(const Lattice& lattice, HermitianGenerator w_forward,
                       HermitianGenerator w_backward,
                       std::optional<AntiunitarySymmetry> time_reversal,
                       Vector default_initial) {
    if (w_forward.dim() != w_backward.dim()) {
        throw std::invalid_argument("build_custom: generator dimensions differ");
    }
    if (w_forward.dim() % lattice.sites != 0) {
        std::ostringstream msg;
        msg << "build_custom: generator dimension " << w_forward.dim()
            << " is not a multiple of the " << lattice.sites << "-site lattice";
        throw std::invalid_argument(msg.str());
    }
    const int internal_dim = int(w_forward.dim() / lattice.sites);
    if (time_reversal && time_reversal->dim() != w_forward.dim()) {
        throw std::invalid_argument("build_custom: time reversal dimension mismatch");
    }
    if (default_initial.size() == 0) {
        Vector internal = Vector::Constant(internal_dim, 1.0 / std::sqrt(double(internal_dim)));
        default_initial = kron(basis_state(lattice, 0), internal);
    } else if (default_initial.size() != w_forward.dim()) {
        throw std::invalid_argument("build_custom: initial state dimension mismatch");
    }
    return ModelSpec{ModelSpec::Kind::custom,
                     lattice,
                     0.0,
                     internal_dim,
                     std::move(w_forward),
                     std::move(w_backward),
                     std::move(time_reversal),
                     std::move(default_initial),
                     "custom"};
}

double asymmetry_norm(const ModelSpec& model) {
    const Matrix difference =
        model.forward_generator.matrix() - model.backward_generator.matrix();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(difference, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("asymmetry_norm: eigenvalue solver failed");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

QvpParams make_params(const ModelSpec& model, int steps, double sigma_w,
                      std::optional<double> resolution_limit) {
    return QvpParams(model.lattice, steps, sigma_w, model.default_initial,
                     resolution_limit);
}

QvpState build_qvp(const QvpParams& params, const ModelSpec& model) {
    return build_qvp(params, model.forward_generator, model.backward_generator, model.id);
}

QvpState brute_force_qvp(const QvpParams& params, const ModelSpec& model) {
    return brute_force_qvp(params, model.forward_generator, model.backward_generator,
                           model.id);
}

}  // namespace qvp
