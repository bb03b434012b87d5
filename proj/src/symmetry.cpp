#include "qvp/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qvp {

Lattice::Lattice(int site_count, double site_spacing)
    : sites(site_count), spacing(site_spacing) {
    if (sites < 1 || sites % 2 == 0) {
        std::ostringstream msg;
        msg << "Lattice: site count must be odd and positive, got " << sites;
        throw std::invalid_argument(msg.str());
    }
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw std::invalid_argument("Lattice: spacing must be positive and finite");
    }
}

Vector basis_state(const Lattice& lattice, int site_index) {
    if (std::abs(site_index) > lattice.half_span()) {
        std::ostringstream msg;
        msg << "basis_state: site index " << site_index << " outside +-"
            << lattice.half_span();
        throw std::invalid_argument(msg.str());
    }
    Vector v = Vector::Zero(lattice.sites);
    v(lattice.slot_of(site_index)) = 1.0;
    return v;
}

RealVector momentum_grid(const Lattice& lattice) {
    const int half = lattice.half_span();
    RealVector k(lattice.sites);
    for (int m = -half; m <= half; ++m) {
        k(lattice.slot_of(m)) =
            2.0 * std::numbers::pi * m / (lattice.sites * lattice.spacing);
    }
    return k;
}

HermitianGenerator translation_generator(const Lattice& lattice) {
    const int d = lattice.sites;
    const RealVector k = momentum_grid(lattice);
    const double inv_sqrt_d = 1.0 / std::sqrt(double(d));

    // Columns of V are the plane waves <w_j|k_m> = e^{i k_m w_j} / sqrt(D).
    Matrix plane_waves(d, d);
    for (int m = 0; m < d; ++m) {
        for (int j = 0; j < d; ++j) {
            plane_waves(j, m) = std::polar(inv_sqrt_d, k(m) * lattice.label(j));
        }
    }

    Matrix mat = (plane_waves * k.cast<Complex>().asDiagonal()) * plane_waves.adjoint();
    mat = ((mat + mat.adjoint()) / 2.0).eval();
    return HermitianGenerator::from_spectral(std::move(mat), k, std::move(plane_waves));
}

Vector translate_state(const Vector& v, const HermitianGenerator& p, double a) {
    if (!std::isfinite(a)) {
        throw std::invalid_argument("translate_state: displacement must be finite");
    }
    return p.apply_exponential(-a, v);
}

AntiunitarySymmetry::AntiunitarySymmetry(Matrix unitary, bool antilinear)
    : unitary_(std::move(unitary)), antilinear_(antilinear) {
    if (unitary_.rows() != unitary_.cols() || unitary_.rows() < 1) {
        throw std::invalid_argument("AntiunitarySymmetry: matrix must be square");
    }
    require_finite(unitary_, "AntiunitarySymmetry");
    const Eigen::Index n = unitary_.rows();
    const double unitary_defect =
        (unitary_.adjoint() * unitary_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (unitary_defect >= numerics().structural) {
        std::ostringstream msg;
        msg << "AntiunitarySymmetry: matrix not unitary, max |U^dagger U - I| = "
            << unitary_defect;
        throw std::invalid_argument(msg.str());
    }

    // Twice-applied operator: U U for linear, U conj(U) for antilinear.
    const Matrix squared = antilinear_ ? Matrix(unitary_ * unitary_.conjugate())
                                       : Matrix(unitary_ * unitary_);
    const Matrix identity = Matrix::Identity(n, n);
    if (max_abs_diff(squared, identity) < numerics().structural) {
        square_sign_ = +1;
    } else if (max_abs_diff(squared, Matrix(-identity)) < numerics().structural) {
        square_sign_ = -1;
    } else {
        throw std::invalid_argument(
            "AntiunitarySymmetry: operator squared is not +-identity");
    }
}

Vector AntiunitarySymmetry::apply(const Vector& v) const {
    if (v.size() != dim()) {
        throw std::invalid_argument("AntiunitarySymmetry::apply: dimension mismatch");
    }
    return antilinear_ ? Vector(unitary_ * v.conjugate()) : Vector(unitary_ * v);
}

Matrix AntiunitarySymmetry::conjugate_matrix(const Matrix& m) const {
    if (m.rows() != dim() || m.cols() != dim()) {
        throw std::invalid_argument(
            "AntiunitarySymmetry::conjugate_matrix: dimension mismatch");
    }
    if (antilinear_) {
        return unitary_ * m.conjugate() * unitary_.adjoint();
    }
    return unitary_ * m * unitary_.adjoint();
}

AntiunitarySymmetry parity_operator(const Lattice& lattice) {
    Matrix reflection = Matrix::Zero(lattice.sites, lattice.sites);
    for (int j = -lattice.half_span(); j <= lattice.half_span(); ++j) {
        reflection(lattice.slot_of(-j), lattice.slot_of(j)) = 1.0;
    }
    return AntiunitarySymmetry(std::move(reflection), /*antilinear=*/false);
}

AntiunitarySymmetry time_reversal_operator(const Lattice& lattice,
                                           const std::optional<Matrix>& internal_factor) {
    Matrix reflection = parity_operator(lattice).unitary();
    if (internal_factor) {
        const Matrix& u = *internal_factor;
        if (u.rows() != u.cols() || u.rows() < 1) {
            throw std::invalid_argument("time_reversal_operator: internal factor must be square");
        }
        const double defect =
            (u.adjoint() * u - Matrix::Identity(u.rows(), u.rows())).cwiseAbs().maxCoeff();
        if (defect >= numerics().structural) {
            std::ostringstream msg;
            msg << "time_reversal_operator: internal factor not unitary, defect " << defect;
            throw std::invalid_argument(msg.str());
        }
        reflection = kron(reflection, u);
    }
    return AntiunitarySymmetry(std::move(reflection), /*antilinear=*/true);
}

HermitianGenerator conjugate_generator(const HermitianGenerator& w,
                                       const AntiunitarySymmetry& s) {
    if (w.dim() != s.dim()) {
        throw std::invalid_argument("conjugate_generator: dimension mismatch");
    }
    Matrix conjugated = s.conjugate_matrix(w.matrix());
    const double defect = hermiticity_defect(conjugated);
    if (defect >= numerics().structural) {
        std::ostringstream msg;
        msg << "conjugate_generator: result not Hermitian, defect " << defect;
        throw std::runtime_error(msg.str());
    }
    conjugated = ((conjugated + conjugated.adjoint()) / 2.0).eval();

    // Spectral data transforms with the symmetry: eigenvectors map to
    // S applied columnwise, eigenvalues are unchanged.
    Matrix transformed = s.antilinear() ? Matrix(s.unitary() * w.eigenvectors().conjugate())
                                        : Matrix(s.unitary() * w.eigenvectors());
    return HermitianGenerator::from_spectral(std::move(conjugated), w.eigenvalues(),
                                             std::move(transformed));
}

namespace {

void require_nonnegative_step(double a, const char* what) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument(std::string(what) + ": step must be >= 0 and finite");
    }
}

}  // namespace

Vector forward_step(const Vector& v, const HermitianGenerator& h_forward, double a) {
    require_nonnegative_step(a, "forward_step");
    return h_forward.apply_exponential(-a, v);
}

Vector backward_step(const Vector& v, const HermitianGenerator& h_backward, double a) {
    require_nonnegative_step(a, "backward_step");
    return h_backward.apply_exponential(+a, v);
}

Vector unwind_forward(const Vector& v, const HermitianGenerator& h_forward, double a) {
    require_nonnegative_step(a, "unwind_forward");
    return h_forward.apply_exponential(+a, v);
}

Vector unwind_backward(const Vector& v, const HermitianGenerator& h_backward, double a) {
    require_nonnegative_step(a, "unwind_backward");
    return h_backward.apply_exponential(-a, v);
}

}  // namespace qvp
