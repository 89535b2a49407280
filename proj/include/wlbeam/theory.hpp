#pragma once

// Closed-form SINRs, gains, noncircularity and distribution coefficients for
// uniform-power, mutually orthogonal noncircular interferences, plus the
// large-interference approximations and slope functions.

#include <vector>

#include "wlbeam/scenario.hpp"

namespace wlbeam {

struct TheoryInputs {
    double eps_s = 0.0;        // SOI-to-noise power ratio after array gain
    double eps = 0.0;          // interference-to-noise power ratio after array gain
    double alpha_is_sq = 0.0;  // |alpha_Is|^2
    Complex alpha_i_sq = 0.0;  // alpha_I^2 (complex sum)
    double alpha_w = 0.0;
    double gamma_rate = 0.0;   // |gamma| in [0, 1)
    double gamma_phase = 0.0;  // delta, radians

    void validate() const;
};

enum class BeamformerKind { Capon, Mvdr };
enum class SpecialCase { Orthogonal, Combination };
enum class ApproxTarget { SinrMvdr, G, LambdaI, LambdaQ, GI, GQ };
enum class Channel { I, Q };

TheoryInputs theory_inputs(const SpatialCoefficients& coeffs, const NoncircularitySpec& gamma);

double sinr_capon_closed(const TheoryInputs& t);
double sinr_mvdr_closed(const TheoryInputs& t);
double gain_closed(const TheoryInputs& t);
Complex gamma_q_closed(const TheoryInputs& t, BeamformerKind which);
double lambda_closed(const TheoryInputs& t, Channel which);

struct SpecialCaseBundle {
    double sinr_capon = 0.0;
    double sinr_mvdr = 0.0;
    Complex gamma_q = 0.0;  // shared by both beamformers in these cases
    double g = 0.0;
    double g_i = 0.0;
    double g_q = 0.0;
};

SpecialCaseBundle special_case(const TheoryInputs& t, SpecialCase which);

// Large-interference (eps >> 1) approximations; requires 0 < |alpha_Is|^2 < 1.
double approx(const TheoryInputs& t, ApproxTarget target);

// d(approx G_I)/d|gamma|; strictly positive on the open domain.
double gain_i_slope(const TheoryInputs& t);

struct DeltaPoint {
    double delta = 0.0;
    double g_i = 0.0;
    double g_q = 0.0;
};

// Recomputes alpha_w = |alpha_I^2| cos(delta + Delta) per grid point, then
// evaluates the approximate per-channel gains.
std::vector<DeltaPoint> delta_behavior(const TheoryInputs& t, const std::vector<double>& delta_grid);

}  // namespace wlbeam
