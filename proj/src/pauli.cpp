#include "steering/pauli.hpp"

#include <cmath>

namespace steering {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m(0, 1) = Complex{0.0, -1.0};
    m(1, 0) = Complex{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix pauli_observable(const UnitVector3& u) {
    ComplexMatrix m(2);
    m(0, 0) = u.z();
    m(0, 1) = Complex{u.x(), -u.y()};
    m(1, 0) = Complex{u.x(), u.y()};
    m(1, 1) = -u.z();
    return m;
}

CommutatorDirection commutator_direction(const UnitVector3& a, const UnitVector3& b) {
    const Vec3 c = cross(a, b);
    const double s = c.norm();
    CommutatorDirection out;
    out.sin_theta = s;
    if (s > 1e-12) {
        out.axis = UnitVector3{c.x, c.y, c.z};
    }
    return out;
}

double anticommutator_scalar(const UnitVector3& a, const UnitVector3& b) { return dot(a, b); }

}  // namespace steering
