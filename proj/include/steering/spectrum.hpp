#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "steering/complex_matrix.hpp"

namespace steering {

// Full eigendecomposition of a Hermitian matrix.
//
// Invariants on the result:
//   - eigenvalues ascending
//   - eigenvector columns orthonormal within 1e-10
//   - residual ||M v - lambda v|| below 1e-10 per pair
//   - each column's first nonzero entry is real and positive
//   - clusters partition the index range; eigenvalues closer than 1e-9 share one cluster
struct SpectrumResult {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;                             // columns, same order as eigenvalues
    std::vector<std::pair<std::size_t, std::size_t>> clusters;  // half-open [first, last) ranges

    explicit SpectrumResult(std::size_t dim) : eigenvectors(dim) {}
};

// Cyclic Jacobi sweeps with complex rotations. Inputs with a Hermiticity
// defect above 1e-10 are rejected.
SpectrumResult hermitian_spectrum(const ComplexMatrix& m);

}  // namespace steering
