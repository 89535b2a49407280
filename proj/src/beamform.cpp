#include "wlbeam/beamform.hpp"

namespace wlbeam {

BeamWeights capon_weights(const SecondOrderStats& stats, const ComplexVector& s) {
    if (stats.dim() != s.size()) throw DimensionMismatch("capon_weights dimension mismatch");
    ComplexVector y = hermitian_solve(stats.r, s);
    const Complex denom = dot(s, y);
    BeamWeights w;
    w.kind = WeightKind::StrictlyLinear;
    w.w1.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) w.w1[i] = y[i] / denom;
    w.w2.assign(s.size(), Complex(0.0));
    return w;
}

BeamWeights wl_mvdr_weights(const SecondOrderStats& stats, const ComplexVector& s) {
    const std::size_t n = s.size();
    if (stats.dim() != n) throw DimensionMismatch("wl_mvdr_weights dimension mismatch");
    const AugmentedStats aug = augment(stats);

    // S columns: s1~ = [s; 0], s2~ = [0; s*]
    ComplexMatrix cols(2 * n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        cols(i, 0) = s[i];
        cols(i + n, 1) = std::conj(s[i]);
    }
    const ComplexMatrix y = lu_solve(aug.r_aug, cols);  // R_v~^-1 S

    ComplexMatrix k(2, 2);  // S^H R_v~^-1 S
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < 2 * n; ++i) acc += std::conj(cols(i, a)) * y(i, b);
            k(a, b) = acc;
        }
    const ComplexMatrix k_inv = invert_2x2(k);

    // omega~ = Y K^-1 f with f = [1, 0]^T, i.e. first column of Y K^-1.
    BeamWeights w;
    w.kind = WeightKind::WidelyLinear;
    w.w1.resize(n);
    w.w2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        w.w1[i] = y(i, 0) * k_inv(0, 0) + y(i, 1) * k_inv(1, 0);
        w.w2[i] = y(i + n, 0) * k_inv(0, 0) + y(i + n, 1) * k_inv(1, 0);
    }
    return w;
}

namespace {

std::vector<Complex> apply_weights(const std::vector<ComplexVector>& frames, const BeamWeights& w) {
    std::vector<Complex> out(frames.size());
    const std::size_t n = w.w1.size();
    for (std::size_t t = 0; t < frames.size(); ++t) {
        if (frames[t].size() != n) throw DimensionMismatch("filter dimension mismatch");
        Complex acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += std::conj(w.w1[i]) * frames[t][i];
            acc += std::conj(w.w2[i]) * std::conj(frames[t][i]);
        }
        out[t] = acc;
    }
    return out;
}

}  // namespace

std::vector<Complex> filter(const SnapshotBatch& batch, const BeamWeights& w) {
    return apply_weights(batch.data, w);
}

std::vector<Complex> output_in(const SnapshotBatch& batch, const BeamWeights& w) {
    return apply_weights(batch.in_ref, w);
}

}  // namespace wlbeam
