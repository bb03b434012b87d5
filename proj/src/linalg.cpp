#include "qvp/linalg.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace qvp {

NumericsProfile& numerics() {
    static NumericsProfile profile;
    return profile;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_finite(const Vector& v, const std::string& what) {
    if (!v.allFinite()) {
        throw std::invalid_argument(what + ": non-finite entries");
    }
}

void require_finite(const Matrix& m, const std::string& what) {
    if (!m.allFinite()) {
        throw std::invalid_argument(what + ": non-finite entries");
    }
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

std::pair<RealVector, Matrix> eigendecompose(const Matrix& m) {
    if (m.rows() != m.cols()) {
        std::ostringstream msg;
        msg << "eigendecompose: matrix is " << m.rows() << "x" << m.cols()
            << ", expected square";
        throw std::invalid_argument(msg.str());
    }
    require_finite(m, "eigendecompose");
    const double defect = hermiticity_defect(m);
    if (defect >= numerics().structural) {
        std::ostringstream msg;
        msg << "eigendecompose: matrix not Hermitian, max |M - M^dagger| = "
            << defect;
        throw std::invalid_argument(msg.str());
    }

    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecompose: solver did not converge");
    }
    RealVector evals = solver.eigenvalues();
    Matrix evecs = solver.eigenvectors();

    const Matrix rebuilt =
        evecs * evals.cast<Complex>().asDiagonal() * evecs.adjoint();
    const double residual = max_abs_diff(rebuilt, m);
    if (residual >= numerics().structural) {
        std::ostringstream msg;
        msg << "eigendecompose: reconstruction residual " << residual;
        throw std::runtime_error(msg.str());
    }
    return {std::move(evals), std::move(evecs)};
}

namespace {

// Fixed-pattern probe vectors (splitmix64 stream). Deterministic, no RNG
// state shared with callers.
Vector probe_vector(Eigen::Index dim, std::uint64_t salt) {
    std::uint64_t x = 0x9e3779b97f4a7c15ull + salt * 0xbf58476d1ce4e5b9ull;
    auto next = [&x]() {
        x += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) / 9007199254740992.0 - 0.5;
    };
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = Complex(next(), next());
    }
    v.normalize();
    return v;
}

}  // namespace

HermitianGenerator::HermitianGenerator(Matrix m) {
    require_finite(m, "HermitianGenerator");
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument("HermitianGenerator: matrix must be square");
    }
    const double defect = hermiticity_defect(m);
    if (defect >= numerics().hermiticity) {
        std::ostringstream msg;
        msg << "HermitianGenerator: max |M - M^dagger| = " << defect
            << " exceeds " << numerics().hermiticity;
        throw std::invalid_argument(msg.str());
    }
    auto [evals, evecs] = eigendecompose(m);
    mat_ = std::move(m);
    evals_ = std::move(evals);
    evecs_ = std::move(evecs);
}

HermitianGenerator HermitianGenerator::from_spectral(Matrix m, RealVector eigenvalues,
                                                     Matrix eigenvectors) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n || eigenvectors.rows() != n || eigenvectors.cols() != n ||
        eigenvalues.size() != n || n < 1) {
        throw std::invalid_argument("from_spectral: inconsistent dimensions");
    }
    require_finite(m, "from_spectral");

    const double scale = std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());
    for (std::uint64_t salt = 0; salt < 4; ++salt) {
        const Vector x = probe_vector(n, salt);
        const Vector vx = eigenvectors.adjoint() * x;
        const double unitary_defect = (eigenvectors * vx - x).norm();
        if (unitary_defect >= numerics().structural) {
            std::ostringstream msg;
            msg << "from_spectral: eigenvector matrix fails unitarity probe, "
                << "residual " << unitary_defect;
            throw std::invalid_argument(msg.str());
        }
        const Vector rebuilt =
            eigenvectors * (eigenvalues.cast<Complex>().array() * vx.array()).matrix();
        const double residual = (rebuilt - m * x).norm();
        if (residual >= numerics().structural * scale * std::sqrt(double(n))) {
            std::ostringstream msg;
            msg << "from_spectral: spectral data fails reconstruction probe, "
                << "residual " << residual;
            throw std::invalid_argument(msg.str());
        }
    }

    HermitianGenerator g;
    g.mat_ = std::move(m);
    g.evals_ = std::move(eigenvalues);
    g.evecs_ = std::move(eigenvectors);
    return g;
}

Matrix HermitianGenerator::exponential(double theta) const {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("exponential: non-finite phase coefficient");
    }
    Vector phases(evals_.size());
    for (Eigen::Index i = 0; i < evals_.size(); ++i) {
        phases(i) = std::polar(1.0, theta * evals_(i));
    }
    return (evecs_ * phases.asDiagonal()) * evecs_.adjoint();
}

Vector HermitianGenerator::apply_exponential(double theta, const Vector& v) const {
    if (v.size() != dim()) {
        throw std::invalid_argument("apply_exponential: dimension mismatch");
    }
    Vector coeffs = evecs_.adjoint() * v;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        coeffs(i) *= std::polar(1.0, theta * evals_(i));
    }
    return evecs_ * coeffs;
}

Matrix generator_exponential(const HermitianGenerator& w, double theta) {
    return w.exponential(theta);
}

Vector apply(const Matrix& m, const Vector& v) {
    if (m.cols() != v.size()) {
        std::ostringstream msg;
        msg << "apply: matrix has " << m.cols() << " columns, vector has "
            << v.size() << " entries";
        throw std::invalid_argument(msg.str());
    }
    return m * v;
}

}  // namespace qvp
