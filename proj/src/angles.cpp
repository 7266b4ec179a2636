#include "steering/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steering/errors.hpp"

namespace steering {

namespace {

double triple_product(const UnitVector3& a, const UnitVector3& b, const UnitVector3& c) {
    return dot(cross(a, b), c.vec());
}

}  // namespace

OrthogonalTriad::OrthogonalTriad(const UnitVector3& m1, const UnitVector3& m2,
                                 const UnitVector3& m3)
    : m1_(m1), m2_(m2), m3_(m3) {
    if (std::abs(dot(m1, m2)) > 1e-12 || std::abs(dot(m1, m3)) > 1e-12 ||
        std::abs(dot(m2, m3)) > 1e-12) {
        throw ConstraintError("triad directions are not pairwise orthogonal within 1e-12");
    }
    if (std::abs(triple_product(m1_, m2_, m3_) - 1.0) > 1e-9) {
        throw ConstraintError("triad is not right-handed (det must be +1)");
    }
}

const OrthogonalTriad& canonical_triad() {
    static const OrthogonalTriad triad{z_axis(), x_axis(), y_axis()};
    return triad;
}

UnitVector3 direction_from_angles(const ObservableAngles& angles, const OrthogonalTriad& triad) {
    const double st = std::sin(angles.theta);
    const Vec3 d = st * std::cos(angles.phi) * triad.m1().vec() +
                   st * std::sin(angles.phi) * triad.m2().vec() +
                   std::cos(angles.theta) * triad.m3().vec();
    return {d.x, d.y, d.z};
}

ObservableAngles angles_from_direction(const UnitVector3& d, const OrthogonalTriad& triad) {
    const double c3 = std::clamp(dot(d, triad.m3()), -1.0, 1.0);
    ObservableAngles out;
    out.theta = std::acos(c3);
    const double c1 = dot(d, triad.m1());
    const double c2 = dot(d, triad.m2());
    if (std::abs(c1) < 1e-15 && std::abs(c2) < 1e-15) {
        out.phi = 0.0;
        return out;
    }
    out.phi = std::atan2(c2, c1);
    if (out.phi < 0.0) {
        out.phi += 2.0 * std::numbers::pi;
    }
    return out;
}

}  // namespace steering
