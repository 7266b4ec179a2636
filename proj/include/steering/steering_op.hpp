#pragma once

#include <cstddef>
#include <vector>

#include "steering/angles.hpp"
#include "steering/complex_matrix.hpp"
#include "steering/settings.hpp"
#include "steering/two_qubit.hpp"

namespace steering {

// O = (1/sqrt(n)) sum_i A_i (x) B_i. Hermitian and traceless by construction.
struct SteeringOperator {
    ComplexMatrix matrix;
    std::size_t settings_count;
};

SteeringOperator build_steering_operator(const MeasurementSettings& s);

// F_n = |<O>| on a pure state, or |Tr(rho O)| on a density matrix. The
// density path validates Hermiticity, unit trace and positivity within 1e-10.
double eval_fn(const PureTwoQubitState& psi, const MeasurementSettings& s);
double eval_fn(const ComplexMatrix& rho, const MeasurementSettings& s);

// Largest achievable F_n over all states: the extreme eigenvalue of O by
// magnitude, together with the eigenvector that attains it.
struct ViolationReport {
    double mu_max = 0.0;
    bool violable = false;
    PureTwoQubitState witness_state = PureTwoQubitState::zero_zero();
    double witness_concurrence = 0.0;
};

// Square of the two-settings operator, computed by matrix multiplication and
// verified entrywise (within 1e-12) against the commutator closed form
//   O^2 = I(x)I - sin(theta_a) (n_a.sigma)(x)(n_b.sigma)
// valid for n = 2 with orthonormal Bob directions. Other inputs are rejected.
ComplexMatrix operator_square_f2(const MeasurementSettings& s);

// sqrt(1 + |a1 x a2|): the largest eigenvalue of the two-settings operator
// with orthonormal Bob directions.
double mu_closed_form_f2(const MeasurementSettings& s);

// Two-settings violation verdict: violable iff Alice's pair is non-commuting
// (|a1 x a2| > 1e-9). Requires orthonormal Bob directions.
ViolationReport two_settings_violation_report(const MeasurementSettings& s);

// Angle-form settings shared between the closed-form functional and its
// matrix-path cross-check; interpreted against the canonical triad.
struct AngleSettings {
    std::vector<ObservableAngles> alice;
    std::vector<ObservableAngles> bob;
};

// Closed form of the functional on the Schmidt family (signed):
//   (1/sqrt(n)) sum_i [ cos(ta_i) cos(tb_i)
//                       + cos(pa_i + pb_i) sin(ta_i) sin(tb_i) sin(2 alpha) ].
// alpha outside [0, pi/2] is rejected.
double closed_form_fn(double alpha, const AngleSettings& a);

// Same quantity evaluated through explicit operators: directions come from
// direction_from_angles against the canonical triad, and the Schmidt-family
// state is built in the eigenbasis of the triad's polar axis m3.sigma.
// Matches closed_form_fn within 1e-10; the pair forms a mandatory
// dual-route cross-check.
double matrix_form_fn(double alpha, const AngleSettings& a);

// Grid scan of the signed closed form over alpha in [0, pi/2]. The scan fits
// F = k1 + k2 sin(2 alpha) from the endpoints alpha = 0 and alpha = pi/4 and
// verifies the fit at every grid point within 1e-10. alpha_star is the first
// grid argmax of the signed value; a flat profile (|k2| <= 1e-12) reports
// pi/4 and sets the flat flag so callers do not read a sign into noise.
struct AlphaScanResult {
    double alpha_star = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    bool flat = false;
};

AlphaScanResult alpha_argmax_scan(const AngleSettings& a, std::size_t grid_steps);

// Largest eigenvalue of the Bell operator
//   A1(x)B1 + A1(x)B2 + A2(x)B1 - A2(x)B2.
double chsh_max(const UnitVector3& a1, const UnitVector3& a2, const UnitVector3& b1,
                const UnitVector3& b2);

// Dual verdicts for the same two-settings input (orthonormal Bob required):
// the steering side from the commutator criterion, the CHSH side from the
// Bell-operator spectrum. The two agree away from knife-edge inputs.
struct SteeringChshVerdict {
    bool steering_violable = false;
    bool chsh_violable = false;
    double mu_max = 0.0;
    double chsh_value = 0.0;
};

SteeringChshVerdict steering_chsh_predicates(const MeasurementSettings& s);

}  // namespace steering
