#pragma once

#include "qvp/engine.hpp"

namespace qvp {

/// A generator pair driving a quantum virtual path, with the time
/// reversal operator relating the two directions when one is defined.
///
/// Built-in variants:
///  - symmetric: W_F = W_B = p on the lattice (T symmetry holds).
///  - t_violating: clock lattice tensored with a two-level internal
///    factor; W_F = p (x) (I + lambda sigma_z), T = (parity (x) sigma_x)
///    followed by conjugation, W_B = T W_F T^{-1} = p (x) (I - lambda
///    sigma_z). The balanced internal state weights both time directions
///    equally.
struct ModelSpec {
    enum class Kind { symmetric, t_violating, custom };

    Kind kind;
    Lattice lattice;
    double asymmetry;  // lambda; 0 for the symmetric model
    int internal_dim;
    HermitianGenerator forward_generator;   // W_F
    HermitianGenerator backward_generator;  // W_B
    std::optional<AntiunitarySymmetry> time_reversal;
    Vector default_initial;
    std::string id;
};

ModelSpec build_symmetric(const Lattice& lattice);

/// |asymmetry| must be < 1, otherwise the step operator loses the
/// two-peak interpretation.
ModelSpec build_tviolating(const Lattice& lattice, double asymmetry);

/// Custom generator pair. Symmetry-relation checks are skipped when no
/// time reversal operator is supplied. An empty initial means |w=0>
/// tensored with a uniform internal state when the generators carry an
/// internal factor.
ModelSpec build_custom(const Lattice& lattice, HermitianGenerator w_forward,
                       HermitianGenerator w_backward,
                       std::optional<AntiunitarySymmetry> time_reversal = std::nullopt,
                       Vector default_initial = {});

/// Spectral norm of W_F - W_B.
double asymmetry_norm(const ModelSpec& model);

/// Convenience wrappers wiring the model's generators and identifier
/// into the engine. An empty params.initial is replaced by the model
/// default before construction.
QvpState build_qvp(const QvpParams& params, const ModelSpec& model);
QvpState brute_force_qvp(const QvpParams& params, const ModelSpec& model);
QvpParams make_params(const ModelSpec& model, int steps, double sigma_w,
                      std::optional<double> resolution_limit = std::nullopt);

}  // namespace qvp
