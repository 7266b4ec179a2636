#include "steering/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "steering/errors.hpp"
#include "steering/tolerances.hpp"

namespace steering {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = r + 1; c < a.dim(); ++c) {
            sum += std::norm(a(r, c));
        }
    }
    return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            sum += std::norm(a(r, c));
        }
    }
    return std::sqrt(sum);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation
//   U(p,p) = c .. U(p,q) = -s e^{i arg}, U(q,p) = s e^{-i arg}, U(q,q) = c
// is applied as A <- U^dagger A U and accumulated into V <- V U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) {
        return;
    }
    const Complex phase = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    // Annihilation condition for this rotation convention: t^2 - 2 tau t = 1;
    // the small-magnitude root keeps c >= 1/sqrt(2).
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    a(p, p) = app + t * mag;
    a(q, q) = aqq - t * mag;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i == p || i == q) {
            continue;
        }
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c * aip + s * std::conj(phase) * aiq;
        a(i, q) = -s * phase * aip + c * aiq;
        a(p, i) = std::conj(a(i, p));
        a(q, i) = std::conj(a(i, q));
    }
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = c * vip + s * std::conj(phase) * viq;
        v(i, q) = -s * phase * vip + c * viq;
    }
}

// Multiplies each column by a unit phase so its first nonzero entry is real
// and positive. Entries below 1e-12 count as zero.
void normalize_column_phases(ComplexMatrix& v) {
    for (std::size_t c = 0; c < v.dim(); ++c) {
        for (std::size_t r = 0; r < v.dim(); ++r) {
            const double mag = std::abs(v(r, c));
            if (mag > 1e-12) {
                const Complex factor = std::conj(v(r, c)) / mag;
                for (std::size_t i = 0; i < v.dim(); ++i) {
                    v(i, c) *= factor;
                }
                break;
            }
        }
    }
}

}  // namespace

SpectrumResult hermitian_spectrum(const ComplexMatrix& m) {
    if (m.hermiticity_defect() > tol::kHermitian) {
        throw ConstraintError("matrix is not Hermitian within 1e-10");
    }

    const std::size_t n = m.dim();
    ComplexMatrix a = m;
    // Drop the Hermiticity defect so the iteration works on an exactly
    // Hermitian copy with a real diagonal.
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = Complex{a(r, r).real(), 0.0};
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = 1e-15 * (1.0 + frobenius_norm(a));
    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= stop) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    SpectrumResult result(n);
    result.eigenvalues.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        result.eigenvalues[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) {
            result.eigenvectors(r, c) = v(r, order[c]);
        }
    }
    normalize_column_phases(result.eigenvectors);

    std::size_t first = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || result.eigenvalues[i] - result.eigenvalues[i - 1] > tol::kCluster) {
            result.clusters.emplace_back(first, i);
            first = i;
        }
    }
    return result;
}

}  // namespace steering
