#pragma once

// Minimal dense complex kernels for small matrices (N up to a few hundred).
// Everything is value-semantic and pure; no aliasing assumptions.

#include <complex>
#include <vector>

#include "wlbeam/errors.hpp"

namespace wlbeam {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexVector operator*(const ComplexVector& v) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex scale) const;

    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;  // row-major
};

// a^H b
Complex dot(const ComplexVector& a, const ComplexVector& b);
double norm2(const ComplexVector& v);

// General LU solve with partial pivoting; rhs may have several columns.
// Throws SingularMatrix when a pivot falls below 1e-12 times the largest
// initial pivot candidate.
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& rhs);
ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& rhs);
ComplexMatrix invert(const ComplexMatrix& a);

// Solve A y = b for Hermitian A. Verifies Hermitian symmetry within 1e-10
// relative (max-entry norm) before solving.
ComplexVector hermitian_solve(const ComplexMatrix& a, const ComplexVector& b);

// a^H M b
Complex quadratic_form(const ComplexVector& a, const ComplexMatrix& m, const ComplexVector& b);

ComplexMatrix invert_2x2(const ComplexMatrix& m);

}  // namespace wlbeam
