#include "steering/two_qubit.hpp"

#include <cmath>

#include "steering/errors.hpp"
#include "steering/pauli.hpp"
#include "steering/spectrum.hpp"
#include "steering/tolerances.hpp"

namespace steering {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double norm_squared(const std::array<Complex, 4>& amp) {
    double n = 0.0;
    for (const Complex& a : amp) {
        n += std::norm(a);
    }
    return n;
}

}  // namespace

PureTwoQubitState::PureTwoQubitState(const std::array<Complex, 4>& amplitudes)
    : amp_(amplitudes) {
    if (std::abs(norm_squared(amp_) - 1.0) > tol::kUnitNorm) {
        throw ConstraintError("state amplitudes are not normalized within 1e-12");
    }
}

PureTwoQubitState PureTwoQubitState::schmidt_state(double alpha) {
    return PureTwoQubitState{{std::cos(alpha), 0.0, 0.0, std::sin(alpha)}};
}

PureTwoQubitState PureTwoQubitState::phi_plus() {
    return PureTwoQubitState{{kInvSqrt2, 0.0, 0.0, kInvSqrt2}};
}

PureTwoQubitState PureTwoQubitState::phi_minus() {
    return PureTwoQubitState{{kInvSqrt2, 0.0, 0.0, -kInvSqrt2}};
}

PureTwoQubitState PureTwoQubitState::psi_plus() {
    return PureTwoQubitState{{0.0, kInvSqrt2, kInvSqrt2, 0.0}};
}

PureTwoQubitState PureTwoQubitState::psi_minus() {
    return PureTwoQubitState{{0.0, kInvSqrt2, -kInvSqrt2, 0.0}};
}

PureTwoQubitState PureTwoQubitState::zero_zero() {
    return PureTwoQubitState{{1.0, 0.0, 0.0, 0.0}};
}

PureTwoQubitState phase_normalized(const PureTwoQubitState& psi) {
    std::array<Complex, 4> amp = psi.amplitudes();
    for (const Complex& a : amp) {
        const double mag = std::abs(a);
        if (mag > 1e-12) {
            const Complex factor = std::conj(a) / mag;
            for (Complex& b : amp) {
                b *= factor;
            }
            break;
        }
    }
    return PureTwoQubitState{amp};
}

Complex expectation_value(const ComplexMatrix& m, const PureTwoQubitState& psi) {
    if (m.dim() != 4) {
        throw ConstraintError("expectation value requires a 4x4 operator");
    }
    Complex acc = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < 4; ++c) {
            row += m(r, c) * psi[c];
        }
        acc += std::conj(psi[r]) * row;
    }
    return acc;
}

PureTwoQubitState SchmidtForm::reconstruct() const {
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    std::array<Complex, 4> amp{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            amp[2 * i + j] = ca * basis_a[0][i] * basis_b[0][j] + sa * basis_a[1][i] * basis_b[1][j];
        }
    }
    return PureTwoQubitState{amp};
}

SchmidtForm schmidt_decompose(const PureTwoQubitState& psi) {
    // Amplitude matrix C(i, j) = <ij|psi>; the reduced state C C^dagger fixes
    // Alice's basis and the coefficients.
    ComplexMatrix c(2);
    c(0, 0) = psi[0];
    c(0, 1) = psi[1];
    c(1, 0) = psi[2];
    c(1, 1) = psi[3];

    ComplexMatrix rho_a = c * c.adjoint();
    const SpectrumResult spec = hermitian_spectrum(rho_a);
    // Ascending order: column 1 carries the larger weight cos^2(alpha).
    const double lam_large = std::max(0.0, std::min(1.0, spec.eigenvalues[1]));
    const double lam_small = std::max(0.0, std::min(1.0, spec.eigenvalues[0]));
    const double s1 = std::sqrt(lam_large);
    const double s2 = std::sqrt(lam_small);

    SchmidtForm form;
    form.alpha = std::atan2(s2, s1);

    std::array<Complex, 2> u1{spec.eigenvectors(0, 1), spec.eigenvectors(1, 1)};
    std::array<Complex, 2> u2{spec.eigenvectors(0, 0), spec.eigenvectors(1, 0)};

    // Bob's first vector: w1 = C^T conj(u1) / s1. s1 >= 1/sqrt(2), so the
    // division is well conditioned.
    std::array<Complex, 2> w1{
        (c(0, 0) * std::conj(u1[0]) + c(1, 0) * std::conj(u1[1])) / s1,
        (c(0, 1) * std::conj(u1[0]) + c(1, 1) * std::conj(u1[1])) / s1,
    };
    const double w1n = std::sqrt(std::norm(w1[0]) + std::norm(w1[1]));
    w1[0] /= w1n;
    w1[1] /= w1n;

    // Bob's second vector is the orthonormal complement of w1; its phase is
    // aligned with the raw projection C^T conj(u2) so the reconstruction
    // reproduces the state even when s2 is tiny.
    std::array<Complex, 2> w2{-std::conj(w1[1]), std::conj(w1[0])};
    const std::array<Complex, 2> raw2{
        c(0, 0) * std::conj(u2[0]) + c(1, 0) * std::conj(u2[1]),
        c(0, 1) * std::conj(u2[0]) + c(1, 1) * std::conj(u2[1]),
    };
    const Complex overlap = std::conj(w2[0]) * raw2[0] + std::conj(w2[1]) * raw2[1];
    if (std::abs(overlap) > 1e-15) {
        const Complex factor = overlap / std::abs(overlap);
        w2[0] *= factor;
        w2[1] *= factor;
    }

    form.basis_a = {u1, u2};
    form.basis_b = {w1, w2};
    return form;
}

double concurrence(const PureTwoQubitState& psi) {
    const ComplexMatrix yy = tensor_product(pauli_y(), pauli_y());
    Complex acc = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < 4; ++c) {
            row += yy(r, c) * std::conj(psi[c]);
        }
        acc += std::conj(psi[r]) * row;
    }
    return std::abs(acc);
}

PureTwoQubitState mes_from_parameters(const std::array<double, 3>& xi) {
    const double c = std::cos(xi[0]);
    const double s = std::sin(xi[0]);
    const Complex e1 = std::polar(1.0, xi[1]);
    const Complex e2 = std::polar(1.0, xi[2]);
    const Complex u00 = c * e1;
    const Complex u01 = s * e2;
    const Complex u10 = -s * std::conj(e2);
    const Complex u11 = c * std::conj(e1);
    return PureTwoQubitState{
        {kInvSqrt2 * u00, kInvSqrt2 * u10, kInvSqrt2 * u01, kInvSqrt2 * u11}};
}

}  // namespace steering
