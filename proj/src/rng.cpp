#include "steering/rng.hpp"

#include <cmath>
#include <numbers>

#include "steering/angles.hpp"
#include "steering/errors.hpp"

namespace steering {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

double RandomStream::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double RandomStream::uniform_open() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::normal() {
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

UnitVector3 RandomStream::unit_vector() {
    for (;;) {
        const double x = normal();
        const double y = normal();
        const double z = normal();
        if (std::sqrt(x * x + y * y + z * z) >= 1e-12) {
            return {x, y, z};
        }
    }
}

std::array<std::array<double, 3>, 3> RandomStream::rotation() {
    double w, x, y, z, n;
    do {
        w = normal();
        x = normal();
        y = normal();
        z = normal();
        n = std::sqrt(w * w + x * x + y * y + z * z);
    } while (n < 1e-12);
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    return {{{1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)},
             {2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)},
             {2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)}}};
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index));
}

double halton(std::uint64_t index, unsigned base) {
    double f = 1.0;
    double r = 0.0;
    while (index > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

Vec3 apply_rotation(const std::array<std::array<double, 3>, 3>& r, const Vec3& v) {
    return {r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
            r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
            r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z};
}

std::vector<UnitVector3> random_orthonormal_set(RandomStream& rng, std::size_t n) {
    if (n > 3) {
        throw ConstraintError("orthonormal direction sets exist only for n <= 3");
    }
    const auto r = rng.rotation();
    const OrthogonalTriad& triad = canonical_triad();
    const std::array<Vec3, 3> frame = {triad.m1().vec(), triad.m2().vec(), triad.m3().vec()};
    std::vector<UnitVector3> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 v = apply_rotation(r, frame[i]);
        out.emplace_back(v.x, v.y, v.z);
    }
    return out;
}

}  // namespace steering
