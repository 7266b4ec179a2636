#pragma once

#include <vector>

#include "steering/vec3.hpp"

namespace steering {

// Polar/azimuthal pair for a measurement direction, interpreted against an
// OrthogonalTriad: theta is measured from m3, phi from m1 toward m2.
struct ObservableAngles {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi)
};

// Right-handed orthonormal frame on the Bloch sphere. Pairwise dot products
// must vanish within 1e-12 and det[m1 m2 m3] must be +1.
class OrthogonalTriad {
  public:
    OrthogonalTriad(const UnitVector3& m1, const UnitVector3& m2, const UnitVector3& m3);

    const UnitVector3& m1() const { return m1_; }
    const UnitVector3& m2() const { return m2_; }
    const UnitVector3& m3() const { return m3_; }

  private:
    UnitVector3 m1_;
    UnitVector3 m2_;
    UnitVector3 m3_;
};

// The reference frame used by the closed-form functional:
// m1 = (0,0,1), m2 = (1,0,0), m3 = (0,1,0), i.e. the Pauli observables
// m1.sigma = |0><0|-|1><1|, m2.sigma = |+><+|-|-><-|, m3.sigma with the
// +i-phase circular basis.
const OrthogonalTriad& canonical_triad();

// sin(theta)cos(phi) m1 + sin(theta)sin(phi) m2 + cos(theta) m3.
UnitVector3 direction_from_angles(const ObservableAngles& angles, const OrthogonalTriad& triad);

// Inverse chart; phi is wrapped to [0, 2*pi) and set to 0 at the poles.
ObservableAngles angles_from_direction(const UnitVector3& d, const OrthogonalTriad& triad);

}  // namespace steering
