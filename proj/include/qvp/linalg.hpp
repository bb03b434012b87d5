#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace qvp {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Global tolerance profile. `structural` bounds decomposition and
/// symmetry-relation residuals, `identity` bounds exact algebraic
/// identities (norm preservation, inverses).
struct NumericsProfile {
    double hermiticity = 1e-12;
    double structural = 1e-10;
    double identity = 1e-12;
    double degenerate_norm = 1e-14;
};

NumericsProfile& numerics();

/// Largest |entry| of the difference between two matrices.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Largest deviation of M from its own adjoint.
double hermiticity_defect(const Matrix& m);

void require_finite(const Vector& v, const std::string& what);
void require_finite(const Matrix& m, const std::string& what);

/// Kronecker product, row-major block convention:
/// out((i*p + k), (j*q + l)) = a(i, j) * b(k, l).
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvector columns matched to them. Rejects non-square or
/// non-Hermitian input (tolerance numerics().structural) and verifies
/// the reconstruction V diag(w) V^dagger against the input.
std::pair<RealVector, Matrix> eigendecompose(const Matrix& m);

/// A self-adjoint operator together with its spectral data. Acts as a
/// translation generator: exponential(theta) evaluates e^{i theta W}
/// through the cached eigenbasis, so repeated exponentials of one
/// generator cost a basis change each rather than a decomposition.
class HermitianGenerator {
public:
    /// Decomposes m (must be Hermitian within numerics().hermiticity).
    explicit HermitianGenerator(Matrix m);

    /// Adopts analytically known spectral data: m = V diag(w) V^dagger
    /// with V unitary. Both relations are checked against fixed probe
    /// vectors instead of a full O(n^3) re-decomposition.
    static HermitianGenerator from_spectral(Matrix m, RealVector eigenvalues,
                                            Matrix eigenvectors);

    const Matrix& matrix() const { return mat_; }
    const RealVector& eigenvalues() const { return evals_; }
    const Matrix& eigenvectors() const { return evecs_; }
    Eigen::Index dim() const { return mat_.rows(); }

    /// e^{i theta W} as a dense unitary.
    Matrix exponential(double theta) const;

    /// e^{i theta W} v without materialising the matrix.
    Vector apply_exponential(double theta, const Vector& v) const;

private:
    HermitianGenerator() = default;

    Matrix mat_;
    RealVector evals_;
    Matrix evecs_;
};

/// e^{i theta W}. Spec-level alias for HermitianGenerator::exponential.
Matrix generator_exponential(const HermitianGenerator& w, double theta);

/// Dense matrix-vector product with a dimension check.
Vector apply(const Matrix& m, const Vector& v);

}  // namespace qvp
