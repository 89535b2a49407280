#include <random>

#include "doctest.h"
#include "wlbeam/linalg.hpp"

using namespace wlbeam;

namespace {

std::mt19937_64 engine(12345);

Complex rand_complex() {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return Complex(d(engine), d(engine));
}

ComplexMatrix random_hpd(std::size_t n) {
    // B B^H + n I is Hermitian positive definite and well conditioned.
    ComplexMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = rand_complex();
    ComplexMatrix m = b * b.adjoint();
    for (std::size_t i = 0; i < n; ++i) m(i, i) += Complex(static_cast<double>(n));
    return m;
}

ComplexVector random_vector(std::size_t n) {
    ComplexVector v(n);
    for (auto& e : v) e = rand_complex();
    return v;
}

double residual(const ComplexMatrix& a, const ComplexVector& y, const ComplexVector& b) {
    const ComplexVector ay = a * y;
    ComplexVector diff(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) diff[i] = ay[i] - b[i];
    return norm2(diff) / norm2(b);
}

}  // namespace

TEST_CASE("hermitian_solve handles identity and diagonal systems") {
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    const ComplexVector b{Complex(1.0, 0.0), Complex(0.0, 1.0)};
    const ComplexVector y = hermitian_solve(eye, b);
    CHECK(std::abs(y[0] - b[0]) < 1e-15);
    CHECK(std::abs(y[1] - b[1]) < 1e-15);

    ComplexMatrix diag(2, 2);
    diag(0, 0) = 2.0;
    diag(1, 1) = 4.0;
    const ComplexVector y2 = hermitian_solve(diag, ComplexVector{2.0, 4.0});
    CHECK(std::abs(y2[0] - 1.0) < 1e-15);
    CHECK(std::abs(y2[1] - 1.0) < 1e-15);
}

TEST_CASE("hermitian_solve meets the residual contract on random HPD systems") {
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_hpd(6);
        const ComplexVector b = random_vector(6);
        const ComplexVector y = hermitian_solve(a, b);
        CHECK(residual(a, y, b) < 1e-9);
    }
}

TEST_CASE("hermitian_solve rejects non-Hermitian and mismatched inputs") {
    ComplexMatrix m(2, 2);
    m(0, 1) = Complex(1.0, 0.5);
    m(1, 0) = Complex(1.0, 0.5);  // should be the conjugate
    m(0, 0) = m(1, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_solve(m, ComplexVector{1.0, 1.0}), DimensionMismatch);
    CHECK_THROWS_AS(hermitian_solve(ComplexMatrix::identity(2), ComplexVector{1.0, 1.0, 1.0}),
                    DimensionMismatch);
}

TEST_CASE("lu_solve flags singular matrices") {
    ComplexMatrix m(2, 2);
    m(0, 0) = m(0, 1) = 1.0;
    m(1, 0) = m(1, 1) = 1.0;
    CHECK_THROWS_AS(lu_solve(m, ComplexVector{1.0, 1.0}), SingularMatrix);
}

TEST_CASE("lu_solve round-trips on random well-conditioned systems") {
    for (int rep = 0; rep < 20; ++rep) {
        ComplexMatrix a(5, 5);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 5; ++j) a(i, j) = rand_complex();
            a(i, i) += 5.0;  // diagonal dominance keeps conditioning mild
        }
        const ComplexVector b = random_vector(5);
        CHECK(residual(a, lu_solve(a, b), b) < 1e-9);
    }
}

TEST_CASE("quadratic_form matches its definition") {
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    CHECK(std::abs(quadratic_form(ComplexVector{1.0, 0.0}, eye, ComplexVector{1.0, 0.0}) - 1.0) <
          1e-15);
    const ComplexVector aj{Complex(1.0, 0.0), Complex(0.0, 1.0)};
    CHECK(std::abs(quadratic_form(aj, eye, aj) - 2.0) < 1e-15);

    // Naive double-loop oracle on random inputs.
    for (int rep = 0; rep < 10; ++rep) {
        ComplexMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = rand_complex();
        const ComplexVector a = random_vector(4);
        const ComplexVector b = random_vector(4);
        Complex ref = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) ref += std::conj(a[i]) * m(i, j) * b[j];
        CHECK(std::abs(quadratic_form(a, m, b) - ref) < 1e-12);
    }
}

TEST_CASE("quadratic_form on HPD matrices is real and positive") {
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix m = random_hpd(5);
        const ComplexVector a = random_vector(5);
        const Complex q = quadratic_form(a, m, a);
        CHECK(q.real() > 0.0);
        CHECK(std::abs(q.imag()) <= 1e-10 * std::abs(q.real()));
    }
}

TEST_CASE("invert_2x2 trivial cases and residual") {
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    const ComplexMatrix inv_eye = invert_2x2(eye);
    CHECK((inv_eye - eye).max_abs() < 1e-15);

    ComplexMatrix diag(2, 2);
    diag(0, 0) = 2.0;
    diag(1, 1) = 0.5;
    const ComplexMatrix inv_diag = invert_2x2(diag);
    CHECK(std::abs(inv_diag(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(inv_diag(1, 1) - 2.0) < 1e-15);

    for (int rep = 0; rep < 10; ++rep) {
        ComplexMatrix m(2, 2);
        m(0, 0) = rand_complex() + 3.0;
        m(0, 1) = rand_complex();
        m(1, 0) = rand_complex();
        m(1, 1) = rand_complex() + 3.0;
        CHECK((m * invert_2x2(m) - ComplexMatrix::identity(2)).max_abs() < 1e-10);
    }
}

TEST_CASE("invert_2x2 flags singular matrices") {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 2.0;
    m(1, 0) = 1.0;
    m(1, 1) = 2.0;
    CHECK_THROWS_AS(invert_2x2(m), SingularMatrix);
}

TEST_CASE("invert produces a true inverse") {
    const ComplexMatrix a = random_hpd(6);
    const ComplexMatrix prod = a * invert(a);
    CHECK((prod - ComplexMatrix::identity(6)).max_abs() < 1e-9);
}
