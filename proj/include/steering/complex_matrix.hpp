#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace steering {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Dimensions in this library are 2
// (single-qubit operators) or 4 (two-qubit operators).
class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    // Largest |a(i,j) - conj(a(j,i))| over all entries.
    double hermiticity_defect() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

  private:
    std::size_t dim_;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

// Kronecker product in the basis ordering {|00>, |01>, |10>, |11>}:
// (A (x) B)(2i+k, 2j+l) = A(i,j) * B(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> mat_vec(const ComplexMatrix& m, const std::vector<Complex>& v);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace steering
