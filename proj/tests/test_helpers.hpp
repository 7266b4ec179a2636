#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <utility>

#include "steering/complex_matrix.hpp"

// Test-side oracles, independent of the library numerics: plain-loop
// Kronecker products, the quadratic formula for 2x2 Hermitian eigenvalues,
// Gram-Schmidt unitaries, and std::mt19937 sampling (the library uses its
// own mt19937_64 stream, so agreement is never an artifact of shared code).
namespace oracle {

using steering::Complex;
using steering::ComplexMatrix;

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    double real(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(gen);
    }
    Complex cplx() { return {real(-1.0, 1.0), real(-1.0, 1.0)}; }
    std::array<double, 3> gauss3() {
        std::normal_distribution<double> d(0.0, 1.0);
        return {d(gen), d(gen), d(gen)};
    }
    // unit 3-vector; rejects degenerate draws
    std::array<double, 3> unit3() {
        for (;;) {
            const auto g = gauss3();
            const double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
            if (n > 1e-6) {
                return {g[0] / n, g[1] / n, g[2] / n};
            }
        }
    }
};

// Ascending eigenvalues of [[a, b], [conj(b), c]].
inline std::pair<double, double> eig2(double a, Complex b, double c) {
    const double mid = 0.5 * (a + c);
    const double rad = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
    return {mid - rad, mid + rad};
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t ad = a.dim();
    const std::size_t bd = b.dim();
    ComplexMatrix out(ad * bd);
    for (std::size_t i = 0; i < ad; ++i) {
        for (std::size_t j = 0; j < ad; ++j) {
            for (std::size_t k = 0; k < bd; ++k) {
                for (std::size_t l = 0; l < bd; ++l) {
                    out(i * bd + k, j * bd + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = rng.cplx();
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
    const ComplexMatrix m = random_matrix(rng, n);
    ComplexMatrix h(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    return h;
}

// Gram-Schmidt on random columns; degenerate draws retried.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
    for (;;) {
        ComplexMatrix m = random_matrix(rng, n);
        bool ok = true;
        for (std::size_t c = 0; c < n && ok; ++c) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                Complex overlap{0.0, 0.0};
                for (std::size_t r = 0; r < n; ++r) {
                    overlap += std::conj(m(r, prev)) * m(r, c);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    m(r, c) -= overlap * m(r, prev);
                }
            }
            double nrm = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                nrm += std::norm(m(r, c));
            }
            nrm = std::sqrt(nrm);
            if (nrm < 1e-6) {
                ok = false;
                break;
            }
            for (std::size_t r = 0; r < n; ++r) {
                m(r, c) /= nrm;
            }
        }
        if (ok) {
            return m;
        }
    }
}

}  // namespace oracle
