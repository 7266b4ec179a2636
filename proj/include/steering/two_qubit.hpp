#pragma once

#include <array>

#include "steering/complex_matrix.hpp"

namespace steering {

// Normalized two-qubit pure state in the basis ordering {|00>, |01>, |10>, |11>}.
// Construction rejects amplitude vectors whose norm deviates from 1 by more
// than 1e-12.
class PureTwoQubitState {
  public:
    explicit PureTwoQubitState(const std::array<Complex, 4>& amplitudes);

    const std::array<Complex, 4>& amplitudes() const { return amp_; }
    const Complex& operator[](std::size_t i) const { return amp_[i]; }

    // cos(alpha)|00> + sin(alpha)|11>, alpha in [0, pi/2].
    static PureTwoQubitState schmidt_state(double alpha);

    static PureTwoQubitState phi_plus();
    static PureTwoQubitState phi_minus();
    static PureTwoQubitState psi_plus();
    static PureTwoQubitState psi_minus();
    static PureTwoQubitState zero_zero();

  private:
    std::array<Complex, 4> amp_;
};

// Multiplies by a unit phase so the first amplitude above 1e-12 in magnitude
// is real and positive.
PureTwoQubitState phase_normalized(const PureTwoQubitState& psi);

// <psi| M |psi> for a 4x4 operator.
Complex expectation_value(const ComplexMatrix& m, const PureTwoQubitState& psi);

// Schmidt form cos(alpha) |a1 b1> + sin(alpha) |a2 b2| with the convention
// cos(alpha) >= sin(alpha), so alpha lies in [0, pi/4]. Both local bases are
// orthonormal and the reconstruction reproduces the input state exactly
// (including its global phase) within 1e-10.
struct SchmidtForm {
    double alpha = 0.0;
    std::array<std::array<Complex, 2>, 2> basis_a{};  // basis_a[k] pairs with coefficient k
    std::array<std::array<Complex, 2>, 2> basis_b{};

    PureTwoQubitState reconstruct() const;
};

SchmidtForm schmidt_decompose(const PureTwoQubitState& psi);

// |<psi| sigma_y (x) sigma_y |psi*>|; equals sin(2 alpha) of the Schmidt form.
double concurrence(const PureTwoQubitState& psi);

// Maximally entangled family (I (x) U(xi)) (|00> + |11>)/sqrt(2) where U is
// the general SU(2) element
//   [ cos(xi0) e^{i xi1}   sin(xi0) e^{i xi2} ]
//   [-sin(xi0) e^{-i xi2}  cos(xi0) e^{-i xi1}].
// xi = (0,0,0) gives |phi+>; every maximally entangled state is reached up to
// global phase.
PureTwoQubitState mes_from_parameters(const std::array<double, 3>& xi);

}  // namespace steering
