#include "qvp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

#include "qvp/analysis.hpp"
#include "qvp/lorentz.hpp"
#include "qvp/report.hpp"

namespace qvp {

namespace {

class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    double uniform() {  // in [-0.5, 0.5)
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) / 9007199254740992.0 - 0.5;
    }

    double range(double lo, double hi) { return lo + (uniform() + 0.5) * (hi - lo); }

private:
    std::uint64_t state_;
};

Matrix seeded_hermitian(int dim, std::uint64_t seed) {
    SplitMix rng(seed);
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = Complex(rng.uniform(), rng.uniform());
        }
    }
    return (a + a.adjoint()) / 2.0;
}

Vector seeded_state(Eigen::Index dim, std::uint64_t seed) {
    SplitMix rng(seed);
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = Complex(rng.uniform(), rng.uniform());
    }
    v.normalize();
    return v;
}

class Verifier {
public:
    explicit Verifier(std::ostream& out) : out_(out) {}

    void check(const std::string& name, bool pass, const std::string& detail) {
        out_ << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << detail << '\n';
        all_pass_ = all_pass_ && pass;
    }

    bool all_pass() const { return all_pass_; }

private:
    std::ostream& out_;
    bool all_pass_ = true;
};

std::string measured(double value, double bound, const char* relation = "<") {
    std::ostringstream msg;
    msg << std::setprecision(4) << std::scientific << "measured " << value << " ("
        << relation << ' ' << bound << ")";
    return msg.str();
}

void verify_linalg(Verifier& v) {
    double worst_reconstruction = 0.0;
    for (int dim : {8, 64}) {
        const Matrix m = seeded_hermitian(dim, 0x100 + dim);
        const auto [evals, evecs] = eigendecompose(m);
        const Matrix rebuilt = evecs * evals.cast<Complex>().asDiagonal() * evecs.adjoint();
        worst_reconstruction = std::max(worst_reconstruction, max_abs_diff(rebuilt, m));
    }
    v.check("linalg/eigendecompose-reconstruction", worst_reconstruction < 1e-10,
            measured(worst_reconstruction, 1e-10));

    const HermitianGenerator g(seeded_hermitian(24, 0x200));
    double worst_group = 0.0;
    double worst_adjoint = 0.0;
    for (double t1 : {0.0, 0.4, -1.3}) {
        for (double t2 : {0.9, -0.2}) {
            worst_group = std::max(
                worst_group, max_abs_diff(Matrix(g.exponential(t1) * g.exponential(t2)),
                                          g.exponential(t1 + t2)));
        }
        worst_adjoint = std::max(
            worst_adjoint, max_abs_diff(Matrix(g.exponential(t1).adjoint()),
                                        g.exponential(-t1)));
    }
    v.check("linalg/exponential-group-law", worst_group < 1e-10,
            measured(worst_group, 1e-10));
    v.check("linalg/exponential-adjoint", worst_adjoint < 1e-10,
            measured(worst_adjoint, 1e-10));
}

void verify_symmetry(Verifier& v) {
    const std::vector<Lattice> grid = {Lattice(5, 1.0), Lattice(17, 0.25),
                                       Lattice(65, 0.25), Lattice(33, 1.0)};

    double worst_parity = 0.0;
    double worst_time_reversal = 0.0;
    double worst_translate = 0.0;
    double worst_involution = 0.0;
    double worst_antilinear = 0.0;
    for (const Lattice& lattice : grid) {
        const HermitianGenerator p = translation_generator(lattice);
        const AntiunitarySymmetry parity = parity_operator(lattice);
        const AntiunitarySymmetry reversal = time_reversal_operator(lattice);

        worst_parity = std::max(
            worst_parity,
            max_abs_diff(parity.conjugate_matrix(p.matrix()), Matrix(-p.matrix())));
        worst_time_reversal = std::max(
            worst_time_reversal,
            max_abs_diff(reversal.conjugate_matrix(p.matrix()), p.matrix()));

        const Vector state = seeded_state(lattice.sites, 0x300 + lattice.sites);
        const double a = 0.7 * lattice.spacing;
        const double b = -1.9 * lattice.spacing;
        worst_translate = std::max(
            worst_translate,
            (translate_state(translate_state(state, p, a), p, b) -
             translate_state(state, p, a + b))
                .norm());

        const HermitianGenerator twice_parity =
            conjugate_generator(conjugate_generator(p, parity), parity);
        const HermitianGenerator twice_reversal =
            conjugate_generator(conjugate_generator(p, reversal), reversal);
        worst_involution =
            std::max({worst_involution, max_abs_diff(twice_parity.matrix(), p.matrix()),
                      max_abs_diff(twice_reversal.matrix(), p.matrix())});

        // Antilinear conjugation of e^{-i a W} carries the Eq.-style
        // sign flip: it equals e^{+i a (S W S^{-1})}.
        const Matrix lhs = reversal.conjugate_matrix(p.exponential(-a));
        const Matrix rhs = conjugate_generator(p, reversal).exponential(+a);
        worst_antilinear = std::max(worst_antilinear, max_abs_diff(lhs, rhs));
    }
    v.check("symmetry/parity-conjugates-momentum", worst_parity < 1e-10,
            measured(worst_parity, 1e-10));
    v.check("symmetry/time-reversal-preserves-momentum", worst_time_reversal < 1e-10,
            measured(worst_time_reversal, 1e-10));
    v.check("symmetry/translation-additive", worst_translate < 1e-10,
            measured(worst_translate, 1e-10));
    v.check("symmetry/conjugation-involution", worst_involution < 1e-10,
            measured(worst_involution, 1e-10));
    v.check("symmetry/antilinear-exponential-sign", worst_antilinear < 1e-10,
            measured(worst_antilinear, 1e-10));

    // Principle-4 contract on the composite model.
    const Lattice lattice(129, 0.25);
    const ModelSpec model = build_tviolating(lattice, 0.1);
    const QvpState ground = build_qvp(make_params(model, 200, 1.0), model);
    const double a = 0.05;
    const double unwind_defect =
        (unwind_forward(forward_step(ground.amplitudes, model.forward_generator, a),
                        model.forward_generator, a) -
         ground.amplitudes)
            .norm();
    v.check("symmetry/unwind-forward-identity", unwind_defect < 1e-12,
            measured(unwind_defect, 1e-12));

    const ModelSpec symmetric = build_symmetric(lattice);
    const QvpState sym_state = build_qvp(make_params(symmetric, 200, 1.0), symmetric);
    const double symmetric_roundtrip =
        (backward_step(forward_step(sym_state.amplitudes, symmetric.forward_generator, a),
                       symmetric.backward_generator, a) -
         sym_state.amplitudes)
            .norm();
    v.check("symmetry/t-symmetric-backward-forward-identity", symmetric_roundtrip < 1e-12,
            measured(symmetric_roundtrip, 1e-12));

    const double violating_roundtrip =
        (backward_step(forward_step(ground.amplitudes, model.forward_generator, a),
                       model.backward_generator, a) -
         ground.amplitudes)
            .norm();
    v.check("symmetry/t-violation-breaks-roundtrip", violating_roundtrip > 1e-6,
            measured(violating_roundtrip, 1e-6, ">"));
}

void verify_engine(Verifier& v) {
    const Lattice lattice(33, 0.5);
    const ModelSpec symmetric = build_symmetric(lattice);
    const ModelSpec violating = build_tviolating(lattice, 0.2);

    double worst_oracle = 0.0;
    for (const ModelSpec& model : {std::cref(symmetric), std::cref(violating)}) {
        for (int steps = 1; steps <= 10; ++steps) {
            const QvpParams params = make_params(model, steps, 1.0);
            const QvpState fast = build_qvp(params, model);
            const QvpState slow = brute_force_qvp(params, model);
            worst_oracle = std::max(
                worst_oracle, (fast.amplitudes - slow.amplitudes).cwiseAbs().maxCoeff());
        }
    }
    v.check("engine/oracle-equivalence", worst_oracle < 1e-10,
            measured(worst_oracle, 1e-10));

    bool contracting = true;
    for (const ModelSpec& model : {std::cref(symmetric), std::cref(violating)}) {
        const QvpParams params = make_params(model, 40, 1.0);
        const Matrix step =
            step_operator(model.forward_generator, model.backward_generator,
                          params.step_length());
        Vector state = params.initial;
        double previous = state.norm();
        for (int n = 0; n < params.steps; ++n) {
            state = step * state;
            const double current = state.norm();
            contracting = contracting && current <= previous * (1.0 + 1e-13);
            previous = current;
        }
    }
    v.check("engine/step-norm-contraction", contracting,
            contracting ? "norm non-increasing over 40 applications"
                        : "norm increased along the power sequence");

    const Lattice even_lattice(65, 0.25);
    const ModelSpec even_model = build_symmetric(even_lattice);
    double worst_evenness = 0.0;
    for (int steps : {7, 50}) {
        const Distribution dist =
            distribution(build_qvp(make_params(even_model, steps, 1.0), even_model));
        for (int j = 0; j <= even_lattice.half_span(); ++j) {
            worst_evenness = std::max(
                worst_evenness, std::abs(dist.masses(even_lattice.slot_of(j)) -
                                         dist.masses(even_lattice.slot_of(-j))));
        }
    }
    v.check("engine/symmetric-distribution-even", worst_evenness < 1e-10,
            measured(worst_evenness, 1e-10));

    const Lattice fine(513, 0.25);
    const ModelSpec fine_model = build_symmetric(fine);
    const Distribution reference = gaussian_reference(1.0, fine);
    std::vector<double> tv_values;
    for (int steps : {100, 1000, 10000}) {
        const Distribution dist =
            distribution(build_qvp(make_params(fine_model, steps, 1.0), fine_model));
        tv_values.push_back(total_variation(dist, reference));
    }
    const bool decreasing = tv_values[0] > tv_values[1] && tv_values[1] > tv_values[2];
    {
        std::ostringstream detail;
        detail << std::setprecision(4) << std::scientific << "TV(1e2)=" << tv_values[0]
               << " TV(1e3)=" << tv_values[1] << " TV(1e4)=" << tv_values[2];
        v.check("engine/gaussian-limit-tv-decreasing", decreasing, detail.str());
    }

    const EquivalenceSet set = equivalence_set(1.0, 0.02);
    std::vector<Distribution> members;
    for (long long steps : set.first_n(5)) {
        members.push_back(distribution(
            build_qvp(make_params(fine_model, int(steps), 1.0), fine_model)));
    }
    double worst_pairwise = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            worst_pairwise =
                std::max(worst_pairwise, total_variation(members[i], members[j]));
        }
    }
    std::ostringstream set_detail;
    set_detail << "first member N=" << set.first() << ", "
               << measured(worst_pairwise, 0.02);
    v.check("engine/equivalence-set-indistinguishable",
            set.first() == 5000 && worst_pairwise < 0.02, set_detail.str());
}

void verify_models(Verifier& v) {
    const Lattice lattice(65, 0.25);
    double worst_relation = 0.0;
    for (const ModelSpec& model :
         {build_symmetric(lattice), build_tviolating(lattice, 0.1)}) {
        const Matrix conjugated =
            model.time_reversal->conjugate_matrix(model.forward_generator.matrix());
        worst_relation =
            std::max(worst_relation,
                     max_abs_diff(model.backward_generator.matrix(), conjugated));
    }
    v.check("models/backward-is-time-reversed-forward", worst_relation < 1e-10,
            measured(worst_relation, 1e-10));

    const Lattice wide(129, 0.25);
    const ModelSpec violating = build_tviolating(wide, 0.1);
    const Distribution dist =
        distribution(build_qvp(make_params(violating, 300, 1.0), violating));
    double worst_even = 0.0;
    for (int j = 0; j <= wide.half_span(); ++j) {
        worst_even = std::max(worst_even, std::abs(dist.masses(wide.slot_of(j)) -
                                                   dist.masses(wide.slot_of(-j))));
    }
    v.check("models/tviolating-distribution-even", worst_even < 1e-10,
            measured(worst_even, 1e-10));

    const ModelSpec plus = build_tviolating(wide, 0.15);
    const ModelSpec minus = build_tviolating(wide, -0.15);
    const Distribution dist_plus = distribution(build_qvp(make_params(plus, 200, 1.0), plus));
    const Distribution dist_minus =
        distribution(build_qvp(make_params(minus, 200, 1.0), minus));
    const double sign_defect = (dist_plus.masses - dist_minus.masses).cwiseAbs().maxCoeff();
    v.check("models/asymmetry-sign-invariance", sign_defect < 1e-10,
            measured(sign_defect, 1e-10));

    const Lattice fine(513, 0.25);
    const ModelSpec symmetric = build_symmetric(fine);
    const Distribution base =
        distribution(build_qvp(make_params(symmetric, 500, 1.0), symmetric));
    std::vector<double> tv_values;
    for (double lambda : {0.05, 0.01, 0.001}) {
        const ModelSpec model = build_tviolating(fine, lambda);
        tv_values.push_back(total_variation(
            distribution(build_qvp(make_params(model, 500, 1.0), model)), base));
    }
    const bool monotone = tv_values[0] > tv_values[1] && tv_values[1] > tv_values[2];
    std::ostringstream detail;
    detail << std::setprecision(4) << std::scientific << "TV(0.05)=" << tv_values[0]
           << " TV(0.01)=" << tv_values[1] << " TV(0.001)=" << tv_values[2];
    v.check("models/asymmetry-to-zero-limit", monotone, detail.str());
}

void verify_analysis(Verifier& v) {
    const Lattice lattice(409, 0.5);
    const ModelSpec model = build_tviolating(lattice, 0.1);
    const QvpState state = build_qvp(make_params(model, 4000, 1.0), model);

    bool arrow_ok = true;
    double worst_transport = 0.0;
    for (double tau : {lattice.spacing, 5 * lattice.spacing, 10 * lattice.spacing}) {
        for (TimeDirection direction : {TimeDirection::forward, TimeDirection::backward}) {
            const auto shifts = evolution_shift_check(state, model, tau, direction);
            for (const PeakShift& shift : shifts) {
                const double wanted_sign =
                    direction == TimeDirection::forward ? +1.0 : -1.0;
                arrow_ok = arrow_ok && shift.shift * wanted_sign > 0.0;
                worst_transport =
                    std::max(worst_transport, std::abs(shift.shift - shift.expected));
            }
        }
    }
    v.check("analysis/double-headed-arrow", arrow_ok && worst_transport <= lattice.spacing,
            measured(worst_transport, lattice.spacing, "<="));

    const Lattice sweep_lattice(293, 0.5);
    double worst_rel = 0.0;
    bool sweep_monotone = true;
    const std::vector<std::pair<double, std::vector<long long>>> grids = {
        {0.05, {4096, 8192}}, {0.1, {1024, 2048, 4096}}, {0.2, {256, 512, 1024}}};
    for (const auto& [lambda, steps] : grids) {
        const auto rows = separation_sweep(lambda, 1.0, steps, sweep_lattice);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            worst_rel = std::max(worst_rel, rows[i].relative_error);
            if (i > 0) {
                sweep_monotone = sweep_monotone && rows[i].measured > rows[i - 1].measured;
            }
        }
    }
    v.check("analysis/separation-law", worst_rel < 0.01 && sweep_monotone,
            measured(worst_rel, 0.01));

    const Distribution dist = distribution(state);
    const PeakReport first = detect_peaks(dist);
    const PeakReport second = detect_peaks(dist);
    bool identical = first.peaks.size() == second.peaks.size() &&
                     first.separation == second.separation &&
                     first.origin_suppression == second.origin_suppression;
    for (std::size_t i = 0; identical && i < first.peaks.size(); ++i) {
        identical = first.peaks[i].center == second.peaks[i].center &&
                    first.peaks[i].height == second.peaks[i].height &&
                    first.peaks[i].width == second.peaks[i].width;
    }
    v.check("analysis/peak-detection-deterministic", identical,
            identical ? "reports bit-identical" : "reports differ");
}

void verify_lorentz(Verifier& v) {
    SplitMix rng(0x500);
    double worst_invariant = 0.0;
    double worst_composition = 0.0;
    for (int sample = 0; sample < 1000; ++sample) {
        const Interval interval{rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)};
        const Boost b1{rng.range(-0.9, 0.9)};
        const Boost b2{rng.range(-0.9, 0.9)};

        const Interval boosted = boost_interval(interval, b1);
        worst_invariant = std::max(
            worst_invariant, std::abs(interval_invariant(boosted, 1.0) -
                                      interval_invariant(interval, 1.0)));

        const Interval sequential = boost_interval(boosted, b2);
        const Interval composed = boost_interval(interval, compose_boosts(b1, b2));
        worst_composition =
            std::max({worst_composition, std::abs(sequential.dx - composed.dx),
                      std::abs(sequential.dt - composed.dt)});
    }
    v.check("lorentz/interval-invariance", worst_invariant < 1e-12,
            measured(worst_invariant, 1e-12));
    v.check("lorentz/boost-composition", worst_composition < 1e-12,
            measured(worst_composition, 1e-12));
}

void verify_cli(Verifier& v) {
    const Lattice lattice(33, 0.5);
    const ModelSpec model = build_symmetric(lattice);
    const Distribution dist = distribution(build_qvp(make_params(model, 20, 1.0), model));
    const std::string once = distribution_csv(dist);
    const std::string twice =
        distribution_csv(distribution(build_qvp(make_params(model, 20, 1.0), model)));
    v.check("cli/deterministic-csv", once == twice,
            once == twice ? "repeated renders byte-identical" : "renders differ");
}

}  // namespace

bool run_verification(std::ostream& out) {
    Verifier v(out);
    verify_linalg(v);
    verify_symmetry(v);
    verify_engine(v);
    verify_models(v);
    verify_analysis(v);
    verify_lorentz(v);
    verify_cli(v);
    out << (v.all_pass() ? "verification passed" : "verification FAILED") << '\n';
    return v.all_pass();
}

}  // namespace qvp
