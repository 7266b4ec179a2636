#include "steering/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "steering/errors.hpp"

namespace steering {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw ConstraintError("matrix dimension mismatch");
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t i = 0; i < a_.size(); ++i) {
        a_[i] += rhs.a_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t i = 0; i < a_.size(); ++i) {
        a_[i] -= rhs.a_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& v : a_) {
        v *= s;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out(nb * i + k, nb * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

std::vector<Complex> mat_vec(const ComplexMatrix& m, const std::vector<Complex>& v) {
    if (v.size() != m.dim()) {
        throw ConstraintError("matrix-vector dimension mismatch");
    }
    std::vector<Complex> out(m.dim(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

}  // namespace steering
