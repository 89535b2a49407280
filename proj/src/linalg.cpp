#include "wlbeam/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace wlbeam {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = std::conj(entries_[k]);
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const { return conjugate().transpose(); }

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product dimension mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

ComplexVector ComplexMatrix::operator*(const ComplexVector& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector dimension mismatch");
    ComplexVector out(rows_, Complex(0.0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum dimension mismatch");
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += rhs.entries_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference dimension mismatch");
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= rhs.entries_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scale) const {
    ComplexMatrix out = *this;
    for (auto& e : out.entries_) e *= scale;
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

Complex dot(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product dimension mismatch");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm2(const ComplexVector& v) { return std::sqrt(std::real(dot(v, v))); }

namespace {

constexpr double kPivotTol = 1e-12;

// In-place LU with partial pivoting on [A | rhs].
ComplexMatrix lu_solve_impl(ComplexMatrix a, ComplexMatrix rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("lu_solve requires a square matrix");
    if (rhs.rows() != n) throw DimensionMismatch("lu_solve rhs row count mismatch");

    double max_initial_pivot = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_initial_pivot = std::max(max_initial_pivot, std::abs(a(i, 0)));
    max_initial_pivot = std::max(max_initial_pivot, a.max_abs());

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best < kPivotTol * max_initial_pivot)
            throw SingularMatrix("pivot magnitude below 1e-12 of largest initial pivot");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(col, j), rhs(piv, j));
        }
        const Complex d = a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / d;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(r, j) -= f * rhs(col, j);
        }
    }
    // back substitution
    for (std::size_t ci = n; ci-- > 0;) {
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            Complex acc = rhs(ci, j);
            for (std::size_t k = ci + 1; k < n; ++k) acc -= a(ci, k) * rhs(k, j);
            rhs(ci, j) = acc / a(ci, ci);
        }
    }
    return rhs;
}

}  // namespace

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& rhs) {
    return lu_solve_impl(a, rhs);
}

ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& rhs) {
    ComplexMatrix b(rhs.size(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
    ComplexMatrix y = lu_solve_impl(a, b);
    ComplexVector out(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = y(i, 0);
    return out;
}

ComplexMatrix invert(const ComplexMatrix& a) {
    return lu_solve_impl(a, ComplexMatrix::identity(a.rows()));
}

ComplexVector hermitian_solve(const ComplexMatrix& a, const ComplexVector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("hermitian_solve requires a square matrix");
    if (b.size() != n) throw DimensionMismatch("hermitian_solve rhs size mismatch");
    const double scale = a.max_abs();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > 1e-10 * scale)
                throw DimensionMismatch("matrix is not Hermitian within tolerance");
    return lu_solve(a, b);
}

Complex quadratic_form(const ComplexVector& a, const ComplexMatrix& m, const ComplexVector& b) {
    if (m.rows() != a.size() || m.cols() != b.size())
        throw DimensionMismatch("quadratic_form dimension mismatch");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) row += m(i, j) * b[j];
        acc += std::conj(a[i]) * row;
    }
    return acc;
}

ComplexMatrix invert_2x2(const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch("invert_2x2 requires a 2x2 matrix");
    const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double nrm = m.max_abs();
    if (std::abs(det) <= 1e-14 * nrm * nrm) throw SingularMatrix("2x2 determinant too small");
    ComplexMatrix out(2, 2);
    out(0, 0) = m(1, 1) / det;
    out(0, 1) = -m(0, 1) / det;
    out(1, 0) = -m(1, 0) / det;
    out(1, 1) = m(0, 0) / det;
    return out;
}

}  // namespace wlbeam
