#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "steering/vec3.hpp"

namespace steering {

// Deterministic random source. All draws go through hand-rolled transforms so
// that a given seed produces the same sequence on every platform.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    // [0, 1)
    double uniform();
    // (0, 1]; safe as a log argument
    double uniform_open();
    // standard normal via Box-Muller
    double normal();

    // Uniform on the sphere: three normals, normalized. Degenerate draws
    // (norm below 1e-12) are retried.
    UnitVector3 unit_vector();

    // Uniform SO(3) rotation from a normalized random quaternion, as a
    // row-major 3x3 matrix.
    std::array<std::array<double, 3>, 3> rotation();

  private:
    std::mt19937_64 gen_;
};

// Decorrelated per-trial seed: splitmix64(seed ^ splitmix64(index)).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// Radical-inverse (Halton) sequence member in [0, 1).
double halton(std::uint64_t index, unsigned base);

Vec3 apply_rotation(const std::array<std::array<double, 3>, 3>& r, const Vec3& v);

// Random orthonormal direction set for n <= 3: a uniformly random rotation
// applied to the canonical triad, truncated to n entries.
std::vector<UnitVector3> random_orthonormal_set(RandomStream& rng, std::size_t n);

}  // namespace steering
