#include "wlbeam/stats.hpp"

#include <cmath>

namespace wlbeam {

void fill_block_inverse(SecondOrderStats& stats) {
    const ComplexMatrix r_conj = stats.r.conjugate();
    const ComplexMatrix c_conj = stats.c.conjugate();
    // X = R*^-1 C*  via  R* X = C*
    const ComplexMatrix x = lu_solve(r_conj, c_conj);
    const ComplexMatrix schur = stats.r - stats.c * x;
    stats.a = invert(schur);
    // C R*^-1 = conj(X)^T for Hermitian R and symmetric C, so D = -A X^H.
    stats.d = (stats.a * x.adjoint()) * Complex(-1.0);
}

SecondOrderStats estimate_in_stats(const std::vector<ComplexVector>& in_ref) {
    if (in_ref.empty()) throw DimensionMismatch("estimate_in_stats requires snapshots");
    const std::size_t n = in_ref.front().size();
    const std::size_t t_count = in_ref.size();
    if (t_count < 2 * n) throw DegenerateStatistics("need T >= 2N snapshots for a usable estimate");
    SecondOrderStats stats;
    stats.r = ComplexMatrix(n, n);
    stats.c = ComplexMatrix(n, n);
    for (const auto& v : in_ref) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                stats.r(i, j) += v[i] * std::conj(v[j]);
                stats.c(i, j) += v[i] * v[j];
            }
    }
    const double inv_t = 1.0 / static_cast<double>(t_count);
    stats.r = stats.r * Complex(inv_t);
    stats.c = stats.c * Complex(inv_t);
    fill_block_inverse(stats);
    return stats;
}

SecondOrderStats population_in_stats(const ArrayScenario& sc) {
    sc.validate();
    const std::size_t n = sc.n_sensors;
    SecondOrderStats stats;
    stats.r = ComplexMatrix::identity(n) * Complex(sc.noise_power);
    stats.c = ComplexMatrix(n, n);
    const Complex gamma = sc.noncircularity.coefficient();
    for (const auto& itf : sc.interferences) {
        const ComplexVector jp = steering_vector(itf.doa_deg, n);
        const Complex rot2(std::cos(2.0 * itf.carrier_phase), std::sin(2.0 * itf.carrier_phase));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                stats.r(i, j) += itf.power * jp[i] * std::conj(jp[j]);
                stats.c(i, j) += itf.power * gamma * rot2 * jp[i] * jp[j];
            }
    }
    fill_block_inverse(stats);
    return stats;
}

AugmentedStats augment(const SecondOrderStats& stats) {
    const std::size_t n = stats.r.rows();
    AugmentedStats aug;
    aug.r_aug = ComplexMatrix(2 * n, 2 * n);
    aug.c_aug = ComplexMatrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex r = stats.r(i, j);
            const Complex c = stats.c(i, j);
            aug.r_aug(i, j) = r;
            aug.r_aug(i, j + n) = c;
            aug.r_aug(i + n, j) = std::conj(c);
            aug.r_aug(i + n, j + n) = std::conj(r);
            aug.c_aug(i, j) = c;
            aug.c_aug(i, j + n) = r;
            aug.c_aug(i + n, j) = std::conj(r);
            aug.c_aug(i + n, j + n) = std::conj(c);
        }
    return aug;
}

Complex scalar_noncircularity(const std::vector<Complex>& series) {
    if (series.empty()) throw ZeroPower("empty series");
    Complex sq = 0.0;
    double pw = 0.0;
    for (const auto& s : series) {
        sq += s * s;
        pw += std::norm(s);
    }
    if (pw <= 0.0) throw ZeroPower("series has zero power");
    return sq / pw;
}

}  // namespace wlbeam
