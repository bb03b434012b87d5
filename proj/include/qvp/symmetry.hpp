#pragma once

#include <optional>

#include "qvp/linalg.hpp"

namespace qvp {

/// Periodic one-dimensional lattice for a generic coordinate w.
/// Site count D is odd so w = 0 is a site; labels run j * spacing for
/// j in {-(D-1)/2, ..., +(D-1)/2}. Storage slot 0 is the most
/// negative site.
struct Lattice {
    Lattice(int site_count, double site_spacing);

    int sites;       // D, odd
    double spacing;  // delta, > 0

    int half_span() const { return (sites - 1) / 2; }
    int origin_slot() const { return half_span(); }

    /// Coordinate label of a storage slot.
    double label(int slot) const { return (slot - half_span()) * spacing; }

    /// Storage slot of a signed site index j.
    int slot_of(int site_index) const { return site_index + half_span(); }

    double extent() const { return sites * spacing; }

    bool operator==(const Lattice& other) const = default;
};

/// |w_j> as an amplitude vector over lattice slots.
Vector basis_state(const Lattice& lattice, int site_index);

/// Momentum grid for the lattice: k_m = 2 pi m / (D delta),
/// m in {-(D-1)/2, ..., +(D-1)/2}, ascending.
RealVector momentum_grid(const Lattice& lattice);

/// The translation generator p over the lattice, defined spectrally as
/// F^dagger diag(k_m) F with F the discrete Fourier matrix on the
/// symmetric index range. e^{-i a p} translates states by +a; when a is
/// a multiple of the spacing this is an exact cyclic shift.
HermitianGenerator translation_generator(const Lattice& lattice);

/// e^{-i a p} v.
Vector translate_state(const Vector& v, const HermitianGenerator& p, double a);

/// A unitary matrix with an antilinearity flag. Linear instances act as
/// v -> U v, antilinear as v -> U conj(v). Applying the operator twice
/// must give +I or -I; the sign is recorded.
class AntiunitarySymmetry {
public:
    AntiunitarySymmetry(Matrix unitary, bool antilinear);

    const Matrix& unitary() const { return unitary_; }
    bool antilinear() const { return antilinear_; }
    int square_sign() const { return square_sign_; }
    Eigen::Index dim() const { return unitary_.rows(); }

    Vector apply(const Vector& v) const;

    /// S M S^{-1} as a matrix (conjugates entries first when antilinear).
    Matrix conjugate_matrix(const Matrix& m) const;

private:
    Matrix unitary_;
    bool antilinear_;
    int square_sign_;
};

/// Parity: |w_j> -> |w_{-j}>. Linear, squares to +I exactly.
AntiunitarySymmetry parity_operator(const Lattice& lattice);

/// Time reversal: reflection composed with entrywise conjugation,
/// optionally tensored with an internal unitary factor.
/// T |t_j> (x) s = |t_{-j}> (x) (U_int conj(s)).
AntiunitarySymmetry time_reversal_operator(
    const Lattice& lattice, const std::optional<Matrix>& internal_factor = std::nullopt);

/// S W S^{-1} as a generator. Result must be Hermitian within
/// numerics().structural.
HermitianGenerator conjugate_generator(const HermitianGenerator& w,
                                       const AntiunitarySymmetry& s);

// Evolution contract: physical evolution is e^{-i a H_F} forwards and
// e^{+i a H_B} backwards; the unwind operations are their exact inverses.
// backward_step(forward_step(v)) differs from v whenever H_B != H_F.
Vector forward_step(const Vector& v, const HermitianGenerator& h_forward, double a);
Vector backward_step(const Vector& v, const HermitianGenerator& h_backward, double a);
Vector unwind_forward(const Vector& v, const HermitianGenerator& h_forward, double a);
Vector unwind_backward(const Vector& v, const HermitianGenerator& h_backward, double a);

}  // namespace qvp
