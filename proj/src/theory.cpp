#include "wlbeam/theory.hpp"

#include <cmath>

namespace wlbeam {

void TheoryInputs::validate() const {
    if (eps_s < 0.0 || eps < 0.0) throw DomainError("power ratios must be nonnegative");
    if (alpha_is_sq < 0.0 || alpha_is_sq > 1.0 + 1e-9)
        throw DomainError("|alpha_Is|^2 must lie in [0, 1]");
    if (std::abs(alpha_i_sq) > alpha_is_sq + 1e-12)
        throw DomainError("|alpha_I^2| must not exceed |alpha_Is|^2");
    if (std::abs(alpha_w) > alpha_is_sq + 1e-12)
        throw DomainError("|alpha_w| must not exceed |alpha_Is|^2");
    if (gamma_rate < 0.0 || gamma_rate >= 1.0)
        throw DomainError("noncircularity rate must lie in [0, 1)");
}

TheoryInputs theory_inputs(const SpatialCoefficients& coeffs, const NoncircularitySpec& gamma) {
    TheoryInputs t;
    t.eps_s = coeffs.eps_s;
    t.eps = coeffs.eps;
    t.alpha_is_sq = coeffs.alpha_is_sq;
    t.alpha_i_sq = coeffs.alpha_i_sq;
    t.alpha_w = coeffs.alpha_w;
    t.gamma_rate = gamma.rate;
    t.gamma_phase = gamma.phase;
    t.validate();
    return t;
}

namespace {

// Shared denominators of the closed forms.
double capon_poly(double eps, double ais2) {
    return 1.0 + (2.0 - ais2) * eps + (1.0 - ais2) * eps * eps;
}

double mvdr_poly(double eps, double ais2, double g2) {
    return 1.0 + (2.0 - ais2) * eps + (1.0 - ais2) * (1.0 - g2) * eps * eps;
}

}  // namespace

double sinr_capon_closed(const TheoryInputs& t) {
    t.validate();
    return t.eps_s * (1.0 - t.eps / (t.eps + 1.0) * t.alpha_is_sq);
}

double sinr_mvdr_closed(const TheoryInputs& t) {
    t.validate();
    const double eps = t.eps;
    const double ais2 = t.alpha_is_sq;
    const double g2 = t.gamma_rate * t.gamma_rate;
    const double ai4 = std::norm(t.alpha_i_sq);
    const double m = mvdr_poly(eps, ais2, g2);
    const double num = m * m - eps * eps * ai4 * g2;
    const double den = ((1.0 + eps) * (1.0 + eps) - eps * eps * g2) * m;
    return t.eps_s * num / den;
}

double gain_closed(const TheoryInputs& t) {
    t.validate();
    const double eps = t.eps;
    const double ais2 = t.alpha_is_sq;
    const double g2 = t.gamma_rate * t.gamma_rate;
    const double ai4 = std::norm(t.alpha_i_sq);
    const double circ = (1.0 + eps) * (1.0 + eps) - eps * eps * g2;
    const double num =
        g2 * eps * eps * ((1.0 - ais2) * ais2 * circ + (ais2 * ais2 - ai4) * (1.0 + eps));
    const double den = (1.0 + eps * (1.0 - ais2)) * circ * mvdr_poly(eps, ais2, g2);
    return 1.0 + num / den;
}

Complex gamma_q_closed(const TheoryInputs& t, BeamformerKind which) {
    t.validate();
    const Complex gamma =
        t.gamma_rate * Complex(std::cos(t.gamma_phase), std::sin(t.gamma_phase));
    const double g2 = t.gamma_rate * t.gamma_rate;
    const double den = (which == BeamformerKind::Capon)
                           ? capon_poly(t.eps, t.alpha_is_sq)
                           : mvdr_poly(t.eps, t.alpha_is_sq, g2);
    return gamma * t.eps * t.alpha_i_sq / den;
}

double lambda_closed(const TheoryInputs& t, Channel which) {
    t.validate();
    const double sign = (which == Channel::I) ? 1.0 : -1.0;
    const double eps = t.eps;
    const double ais2 = t.alpha_is_sq;
    const double g2 = t.gamma_rate * t.gamma_rate;
    const double shift = sign * t.gamma_rate * t.alpha_w * eps;
    const double dc = capon_poly(eps, ais2);
    const double dm = mvdr_poly(eps, ais2, g2);
    return (dc + shift) / (dm + shift) * dm / dc;
}

SpecialCaseBundle special_case(const TheoryInputs& t, SpecialCase which) {
    t.validate();
    SpecialCaseBundle out;
    if (which == SpecialCase::Orthogonal) {
        if (t.alpha_is_sq > 1e-12) throw CaseMismatch("orthogonal case requires |alpha_Is|^2 = 0");
        out.sinr_capon = t.eps_s;
        out.sinr_mvdr = t.eps_s;
        out.gamma_q = 0.0;
        out.g = out.g_i = out.g_q = 1.0;
        return out;
    }
    if (std::abs(t.alpha_is_sq - 1.0) > 1e-12)
        throw CaseMismatch("combination case requires |alpha_Is|^2 = 1");
    const double eps = t.eps;
    const double g2 = t.gamma_rate * t.gamma_rate;
    const double ai4 = std::norm(t.alpha_i_sq);
    const double circ = (1.0 + eps) * (1.0 + eps) - eps * eps * g2;
    out.sinr_capon = t.eps_s / (eps + 1.0);
    out.sinr_mvdr =
        t.eps_s * ((1.0 + eps) * (1.0 + eps) - eps * eps * ai4 * g2) / (circ * (1.0 + eps));
    const Complex gamma =
        t.gamma_rate * Complex(std::cos(t.gamma_phase), std::sin(t.gamma_phase));
    // Same coefficient for both beamformers; the common denominator is 1 + eps
    // (the general denominators with |alpha_Is|^2 = 1), which also keeps
    // |gamma_q| <= 1.
    out.gamma_q = gamma * eps * t.alpha_i_sq / (1.0 + eps);
    out.g = ai4 + (1.0 - ai4) * (1.0 + eps) * (1.0 + eps) / circ;
    out.g_i = out.g_q = out.g;
    return out;
}

double approx(const TheoryInputs& t, ApproxTarget target) {
    t.validate();
    const double ais2 = t.alpha_is_sq;
    if (ais2 <= 1e-12 || ais2 >= 1.0 - 1e-12)
        throw DomainError("approximations require 0 < |alpha_Is|^2 < 1");
    if (t.eps <= 0.0) throw DomainError("approximations require eps > 0");
    const double eps = t.eps;
    const double g = t.gamma_rate;
    const double g2 = g * g;
    switch (target) {
        case ApproxTarget::SinrMvdr:
            return t.eps_s *
                   (1.0 - ais2 + ais2 * (eps + 1.0) / ((1.0 - g2) * eps * eps + 2.0 * eps + 1.0));
        case ApproxTarget::G:
            return 1.0 + ais2 * g2 * eps /
                             ((1.0 - ais2) * (1.0 - g2) * eps * eps + (2.0 - ais2) * eps + 1.0);
        case ApproxTarget::LambdaI:
            return 1.0 - g * g2 * t.alpha_w / (eps * (1.0 - ais2) * (1.0 - g2));
        case ApproxTarget::LambdaQ:
            return 1.0 + g * g2 * t.alpha_w / (eps * (1.0 - ais2) * (1.0 - g2));
        case ApproxTarget::GI:
            return 1.0 + (-t.alpha_w * g * g2 + ais2 * g2) / (eps * (1.0 - ais2) * (1.0 - g2));
        case ApproxTarget::GQ:
            return 1.0 + (t.alpha_w * g * g2 + ais2 * g2) / (eps * (1.0 - ais2) * (1.0 - g2));
    }
    throw DomainError("unknown approximation target");
}

double gain_i_slope(const TheoryInputs& t) {
    t.validate();
    const double ais2 = t.alpha_is_sq;
    const double g = t.gamma_rate;
    if (ais2 <= 0.0 || ais2 >= 1.0 || g <= 0.0)
        throw DomainError("slope requires 0 < |alpha_Is|^2 < 1 and 0 < |gamma| < 1");
    const double num = t.alpha_w * g * g * g * g - 3.0 * t.alpha_w * g * g + 2.0 * ais2 * g;
    const double den = t.eps * (1.0 - ais2) * (1.0 - g * g) * (1.0 - g * g);
    return num / den;
}

std::vector<DeltaPoint> delta_behavior(const TheoryInputs& t, const std::vector<double>& delta_grid) {
    t.validate();
    const double w = std::abs(t.alpha_i_sq);
    const double offset = std::arg(t.alpha_i_sq);  // Delta
    std::vector<DeltaPoint> out;
    out.reserve(delta_grid.size());
    for (double delta : delta_grid) {
        TheoryInputs ti = t;
        ti.gamma_phase = delta;
        ti.alpha_w = w * std::cos(delta + offset);
        DeltaPoint pt;
        pt.delta = delta;
        pt.g_i = approx(ti, ApproxTarget::GI);
        pt.g_q = approx(ti, ApproxTarget::GQ);
        out.push_back(pt);
    }
    return out;
}

}  // namespace wlbeam
