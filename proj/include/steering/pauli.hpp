#pragma once

#include <optional>

#include "steering/complex_matrix.hpp"
#include "steering/vec3.hpp"

namespace steering {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// u . sigma: traceless Hermitian with eigenvalues +1 and -1.
ComplexMatrix pauli_observable(const UnitVector3& u);

// [a.sigma, b.sigma] = 2i sin(theta) (n.sigma) with n = (a x b)/|a x b|.
// axis is empty when |a x b| <= 1e-12 (parallel directions).
struct CommutatorDirection {
    std::optional<UnitVector3> axis;
    double sin_theta = 0.0;  // |a x b|, in [0, 1]
};

CommutatorDirection commutator_direction(const UnitVector3& a, const UnitVector3& b);

// {a.sigma, b.sigma} = 2 (a.b) I; returns a.b.
double anticommutator_scalar(const UnitVector3& a, const UnitVector3& b);

}  // namespace steering
