#pragma once

// Weight synthesis for the strictly linear Capon MVDR and the widely linear
// MVDR beamformers, plus filtering and output-IN extraction.

#include "wlbeam/signal.hpp"
#include "wlbeam/stats.hpp"

namespace wlbeam {

enum class WeightKind { StrictlyLinear, WidelyLinear };

struct BeamWeights {
    WeightKind kind = WeightKind::StrictlyLinear;
    ComplexVector w1;
    ComplexVector w2;  // zero vector when strictly linear
};

// omega = (s^H R^-1 s)^-1 R^-1 s
BeamWeights capon_weights(const SecondOrderStats& stats, const ComplexVector& s);

// omega_tilde = R_v~^-1 S [S^H R_v~^-1 S]^-1 f, S = [s1~, s2~], f = [1, 0]^T.
// Solved column-wise, never forming R_v~^-1.
BeamWeights wl_mvdr_weights(const SecondOrderStats& stats, const ComplexVector& s);

// y(t) = w1^H x(t) + w2^H x*(t)
std::vector<Complex> filter(const SnapshotBatch& batch, const BeamWeights& w);

// q(t) = w1^H v_T(t) + w2^H v_T*(t)
std::vector<Complex> output_in(const SnapshotBatch& batch, const BeamWeights& w);

}  // namespace wlbeam
