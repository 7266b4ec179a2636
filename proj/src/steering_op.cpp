#include "steering/steering_op.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "steering/errors.hpp"
#include "steering/pauli.hpp"
#include "steering/spectrum.hpp"
#include "steering/tolerances.hpp"

namespace steering {

namespace {

// Operations derived for two settings with orthonormal Bob directions reject
// anything else. Inputs in the near-orthonormal band get a distinct message:
// silently re-orthogonalizing them would change which criterion applies.
void require_two_settings_orthonormal_bob(const MeasurementSettings& s, const char* op) {
    std::ostringstream msg;
    if (s.count() != 2) {
        msg << op << " requires exactly two settings, got " << s.count();
        throw ConstraintError(msg.str());
    }
    if (s.bob_orthonormal()) {
        return;
    }
    const double d = s.bob_max_pair_dot();
    if (d > tol::kOrthonormal && d < tol::kNearOrthonormal) {
        msg << op << ": bob directions are nearly but not exactly orthonormal (max |dot| = " << d
            << "); rejected instead of auto-corrected";
    } else {
        msg << op << ": bob directions are not orthonormal (max |dot| = " << d << ")";
    }
    throw ConstraintError(msg.str());
}

// Eigenvalue of largest magnitude with its eigenvector; ties prefer the
// positive end. O is traceless, so this is also max_psi |<O>|.
struct DominantEigenstate {
    double value = 0.0;
    PureTwoQubitState state = PureTwoQubitState::zero_zero();
};

DominantEigenstate dominant_eigenstate(const ComplexMatrix& m) {
    const SpectrumResult spec = hermitian_spectrum(m);
    const std::size_t last = spec.eigenvalues.size() - 1;
    const std::size_t pick =
        (-spec.eigenvalues.front() > spec.eigenvalues.back()) ? 0 : last;
    std::array<Complex, 4> amp{};
    for (std::size_t r = 0; r < 4; ++r) {
        amp[r] = spec.eigenvectors(r, pick);
    }
    return {std::abs(spec.eigenvalues[pick]),
            phase_normalized(PureTwoQubitState{amp})};
}

void validate_density(const ComplexMatrix& rho) {
    if (rho.dim() != 4) {
        throw ConstraintError("density matrix must be 4x4");
    }
    if (rho.hermiticity_defect() > tol::kHermitian) {
        throw ConstraintError("density matrix is not Hermitian within 1e-10");
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > tol::kHermitian) {
        throw ConstraintError("density matrix trace differs from 1 by more than 1e-10");
    }
    const SpectrumResult spec = hermitian_spectrum(rho);
    if (spec.eigenvalues.front() < -tol::kHermitian) {
        throw ConstraintError("density matrix is not positive semidefinite within 1e-10");
    }
}

void validate_angle_settings(const AngleSettings& a) {
    if (a.alice.empty()) {
        throw ConstraintError("angle settings require at least one pair");
    }
    if (a.alice.size() != a.bob.size()) {
        throw ConstraintError("alice and bob angle lists must have equal length");
    }
}

void validate_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2.0)) {
        throw ConstraintError("alpha must lie in [0, pi/2]");
    }
}

}  // namespace

SteeringOperator build_steering_operator(const MeasurementSettings& s) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(s.count()));
    ComplexMatrix acc(4);
    for (std::size_t i = 0; i < s.count(); ++i) {
        acc += tensor_product(pauli_observable(s.alice()[i]), pauli_observable(s.bob()[i]));
    }
    acc *= scale;
    return {acc, s.count()};
}

double eval_fn(const PureTwoQubitState& psi, const MeasurementSettings& s) {
    return std::abs(expectation_value(build_steering_operator(s).matrix, psi).real());
}

double eval_fn(const ComplexMatrix& rho, const MeasurementSettings& s) {
    validate_density(rho);
    return std::abs((rho * build_steering_operator(s).matrix).trace().real());
}

ComplexMatrix operator_square_f2(const MeasurementSettings& s) {
    require_two_settings_orthonormal_bob(s, "operator_square_f2");
    const ComplexMatrix o = build_steering_operator(s).matrix;
    const ComplexMatrix square = o * o;

    // Commutator/anticommutator expansion of O^2. With orthonormal Bob
    // directions the anticommutator term is bounded by the pairwise-dot
    // tolerance and the expression reduces to
    //   I(x)I - sin(theta_a) (n_a.sigma)(x)(n_b.sigma).
    const double cos_a = anticommutator_scalar(s.alice()[0], s.alice()[1]);
    const double cos_b = anticommutator_scalar(s.bob()[0], s.bob()[1]);
    ComplexMatrix expected = Complex{1.0 + cos_a * cos_b, 0.0} * ComplexMatrix::identity(4);
    const CommutatorDirection ca = commutator_direction(s.alice()[0], s.alice()[1]);
    const CommutatorDirection cb = commutator_direction(s.bob()[0], s.bob()[1]);
    if (ca.axis && cb.axis) {
        expected -= Complex{ca.sin_theta * cb.sin_theta, 0.0} *
                    tensor_product(pauli_observable(*ca.axis), pauli_observable(*cb.axis));
    }
    if (max_abs_diff(square, expected) > tol::kIdentity) {
        throw std::logic_error("operator square disagrees with its commutator closed form");
    }
    return square;
}

double mu_closed_form_f2(const MeasurementSettings& s) {
    require_two_settings_orthonormal_bob(s, "mu_closed_form_f2");
    return std::sqrt(1.0 + cross(s.alice()[0], s.alice()[1]).norm());
}

ViolationReport two_settings_violation_report(const MeasurementSettings& s) {
    require_two_settings_orthonormal_bob(s, "two_settings_violation_report");
    const DominantEigenstate top = dominant_eigenstate(build_steering_operator(s).matrix);
    ViolationReport report;
    report.mu_max = top.value;
    report.violable = cross(s.alice()[0], s.alice()[1]).norm() > tol::kDecision;
    report.witness_state = top.state;
    report.witness_concurrence = concurrence(top.state);
    return report;
}

double closed_form_fn(double alpha, const AngleSettings& a) {
    validate_angle_settings(a);
    validate_alpha(alpha);
    const double s2a = std::sin(2.0 * alpha);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.alice.size(); ++i) {
        const ObservableAngles& p = a.alice[i];
        const ObservableAngles& q = a.bob[i];
        sum += std::cos(p.theta) * std::cos(q.theta) +
               std::cos(p.phi + q.phi) * std::sin(p.theta) * std::sin(q.theta) * s2a;
    }
    return sum / std::sqrt(static_cast<double>(a.alice.size()));
}

double matrix_form_fn(double alpha, const AngleSettings& a) {
    validate_angle_settings(a);
    validate_alpha(alpha);
    const OrthogonalTriad& triad = canonical_triad();

    std::vector<UnitVector3> alice;
    std::vector<UnitVector3> bob;
    alice.reserve(a.alice.size());
    bob.reserve(a.bob.size());
    for (std::size_t i = 0; i < a.alice.size(); ++i) {
        alice.push_back(direction_from_angles(a.alice[i], triad));
        bob.push_back(direction_from_angles(a.bob[i], triad));
    }
    const SteeringOperator op =
        build_steering_operator(MeasurementSettings{std::move(alice), std::move(bob)});

    // Schmidt axis of the angle chart: the closed form measures theta from
    // m3, so the Schmidt pair lives in the eigenbasis of m3.sigma. Columns of
    // the spectrum are ascending, so column 0 is the -1 eigenvector.
    const SpectrumResult basis = hermitian_spectrum(pauli_observable(triad.m3()));
    const std::array<Complex, 2> minus{basis.eigenvectors(0, 0), basis.eigenvectors(1, 0)};
    const std::array<Complex, 2> plus{basis.eigenvectors(0, 1), basis.eigenvectors(1, 1)};

    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    std::array<Complex, 4> amp{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            amp[2 * i + j] = ca * plus[i] * plus[j] + sa * minus[i] * minus[j];
        }
    }
    return expectation_value(op.matrix, PureTwoQubitState{amp}).real();
}

AlphaScanResult alpha_argmax_scan(const AngleSettings& a, std::size_t grid_steps) {
    validate_angle_settings(a);
    if (grid_steps < 3) {
        throw ConstraintError("alpha scan requires at least 3 grid steps");
    }
    AlphaScanResult result;
    result.k1 = closed_form_fn(0.0, a);
    result.k2 = closed_form_fn(std::numbers::pi / 4.0, a) - result.k1;

    const double span = std::numbers::pi / 2.0;
    double best = -std::numeric_limits<double>::infinity();
    double best_alpha = 0.0;
    for (std::size_t i = 0; i < grid_steps; ++i) {
        const double alpha = span * static_cast<double>(i) / static_cast<double>(grid_steps - 1);
        const double f = closed_form_fn(alpha, a);
        const double fit = result.k1 + result.k2 * std::sin(2.0 * alpha);
        if (std::abs(f - fit) > tol::kCrossCheck) {
            throw std::logic_error("closed form deviates from its affine profile in sin(2 alpha)");
        }
        if (f > best) {
            best = f;
            best_alpha = alpha;
        }
    }
    result.flat = std::abs(result.k2) <= 1e-12;
    result.alpha_star = result.flat ? std::numbers::pi / 4.0 : best_alpha;
    return result;
}

double chsh_max(const UnitVector3& a1, const UnitVector3& a2, const UnitVector3& b1,
                const UnitVector3& b2) {
    const ComplexMatrix pa1 = pauli_observable(a1);
    const ComplexMatrix pa2 = pauli_observable(a2);
    const ComplexMatrix pb1 = pauli_observable(b1);
    const ComplexMatrix pb2 = pauli_observable(b2);
    ComplexMatrix bell = tensor_product(pa1, pb1);
    bell += tensor_product(pa1, pb2);
    bell += tensor_product(pa2, pb1);
    bell -= tensor_product(pa2, pb2);
    return hermitian_spectrum(bell).eigenvalues.back();
}

SteeringChshVerdict steering_chsh_predicates(const MeasurementSettings& s) {
    const ViolationReport report = two_settings_violation_report(s);
    SteeringChshVerdict verdict;
    verdict.mu_max = report.mu_max;
    verdict.steering_violable = report.violable;
    verdict.chsh_value = chsh_max(s.alice()[0], s.alice()[1], s.bob()[0], s.bob()[1]);
    verdict.chsh_violable = verdict.chsh_value > 2.0 + tol::kDecision;
    return verdict;
}

}  // namespace steering
