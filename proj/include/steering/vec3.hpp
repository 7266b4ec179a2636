#pragma once

#include <cmath>

#include "steering/errors.hpp"

namespace steering {

// Plain real 3-vector for intermediate geometry.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Measurement direction on the Bloch sphere. Renormalized on construction;
// inputs with norm below 1e-9 are rejected as degenerate.
class UnitVector3 {
  public:
    UnitVector3(double x, double y, double z) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n < 1e-9) {
            throw ConstraintError("direction vector norm below 1e-9, cannot normalize");
        }
        x_ = x / n;
        y_ = y / n;
        z_ = z / n;
    }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }
    Vec3 vec() const { return {x_, y_, z_}; }

  private:
    double x_;
    double y_;
    double z_;
};

inline double dot(const UnitVector3& a, const UnitVector3& b) { return dot(a.vec(), b.vec()); }
inline Vec3 cross(const UnitVector3& a, const UnitVector3& b) { return cross(a.vec(), b.vec()); }
inline UnitVector3 operator-(const UnitVector3& v) { return {-v.x(), -v.y(), -v.z()}; }

// Standard spherical chart with polar axis z.
inline UnitVector3 from_spherical(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

inline UnitVector3 x_axis() { return {1.0, 0.0, 0.0}; }
inline UnitVector3 y_axis() { return {0.0, 1.0, 0.0}; }
inline UnitVector3 z_axis() { return {0.0, 0.0, 1.0}; }

}  // namespace steering
