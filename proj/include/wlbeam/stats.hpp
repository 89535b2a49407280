#pragma once

// Time-averaged second-order statistics of the total interference-plus-noise:
// covariance R, complementary covariance C, and the block-inverse components
// A, D of the augmented covariance.

#include "wlbeam/scenario.hpp"
#include "wlbeam/signal.hpp"

namespace wlbeam {

struct SecondOrderStats {
    ComplexMatrix r;  // Hermitian
    ComplexMatrix c;  // symmetric, not Hermitian
    ComplexMatrix a;  // [R - C R*^-1 C*]^-1, Hermitian
    ComplexMatrix d;  // -A C R*^-1, symmetric

    std::size_t dim() const { return r.rows(); }
};

// Sample averages over T (divide by T; signals are zero-mean by construction).
SecondOrderStats estimate_in_stats(const std::vector<ComplexVector>& in_ref);

// Exact population statistics from scenario parameters.
SecondOrderStats population_in_stats(const ArrayScenario& sc);

// A, D from R, C via the block-inverse formulas.
void fill_block_inverse(SecondOrderStats& stats);

struct AugmentedStats {
    ComplexMatrix r_aug;  // [[R, C], [C*, R*]]
    ComplexMatrix c_aug;  // [[C, R], [R*, C*]]
};

AugmentedStats augment(const SecondOrderStats& stats);

// <series^2> / <|series|^2>
Complex scalar_noncircularity(const std::vector<Complex>& series);

}  // namespace wlbeam
