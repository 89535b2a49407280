#include "wlbeam/analysis.hpp"

#include <cmath>

namespace wlbeam {

namespace {

void fill_iq_split(InCharacterization& ch) {
    ch.kappa_i = 0.5 * (ch.kappa + ch.kappa_tilde.real());
    ch.kappa_q = 0.5 * (ch.kappa - ch.kappa_tilde.real());
    ch.gamma_q = (ch.kappa > 0.0) ? ch.kappa_tilde / ch.kappa : Complex(0.0);
}

}  // namespace

InCharacterization characterize_mvdr(const SecondOrderStats& stats, const ComplexVector& s) {
    ComplexVector s_conj(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) s_conj[i] = std::conj(s[i]);
    const Complex s_a_s = quadratic_form(s, stats.a, s);
    const Complex s_d_sc = quadratic_form(s, stats.d, s_conj);
    const double denom = std::norm(s_a_s) - std::norm(s_d_sc);
    const double scale = std::max(std::norm(s_a_s), std::norm(s_d_sc));
    if (denom <= 1e-14 * scale)
        throw DegenerateStatistics("|s^H A s|^2 - |s^H D s*|^2 is not positive");
    InCharacterization ch;
    ch.kappa = s_a_s.real() / denom;
    ch.kappa_tilde = -s_d_sc / denom;
    fill_iq_split(ch);
    return ch;
}

InCharacterization characterize_capon(const SecondOrderStats& stats, const ComplexVector& s) {
    const ComplexVector y = hermitian_solve(stats.r, s);  // R^-1 s
    ComplexVector y_conj(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) y_conj[i] = std::conj(y[i]);
    const double s_r_s = dot(s, y).real();
    if (s_r_s <= 0.0) throw SingularMatrix("s^H R^-1 s must be positive");
    InCharacterization ch;
    ch.kappa = 1.0 / s_r_s;
    // s^H R^-1 C R*^-1 s* = y^H C y*
    ch.kappa_tilde = quadratic_form(y, stats.c, y_conj) * (ch.kappa * ch.kappa);
    fill_iq_split(ch);
    return ch;
}

InCharacterization characterize_empirical(const std::vector<Complex>& q) {
    if (q.size() < 2) throw ZeroPower("need at least two samples");
    InCharacterization ch;
    Complex sq = 0.0;
    double pw = 0.0, re2 = 0.0, im2 = 0.0;
    for (const auto& v : q) {
        pw += std::norm(v);
        sq += v * v;
        re2 += v.real() * v.real();
        im2 += v.imag() * v.imag();
    }
    const double inv_t = 1.0 / static_cast<double>(q.size());
    if (pw <= 0.0) throw ZeroPower("output IN stream has zero power");
    ch.kappa = pw * inv_t;
    ch.kappa_tilde = sq * inv_t;
    ch.kappa_i = re2 * inv_t;
    ch.kappa_q = im2 * inv_t;
    ch.gamma_q = ch.kappa_tilde / ch.kappa;
    return ch;
}

GainReport gain_report(const InCharacterization& mvdr, const InCharacterization& capon,
                       double pi_s) {
    if (mvdr.kappa <= 0.0 || capon.kappa <= 0.0)
        throw DegenerateStatistics("output IN powers must be positive");
    GainReport rep;
    rep.sinr_mvdr = pi_s / mvdr.kappa;
    rep.sinr_capon = pi_s / capon.kappa;
    rep.g = capon.kappa / mvdr.kappa;
    const double floor_mvdr = 1e-14 * mvdr.kappa;
    const double floor_capon = 1e-14 * capon.kappa;
    if (mvdr.kappa_i > floor_mvdr && capon.kappa_i > floor_capon) {
        rep.g_i = capon.kappa_i / mvdr.kappa_i;
        rep.lambda_i = (1.0 + capon.gamma_q.real()) / (1.0 + mvdr.gamma_q.real());
    }
    if (mvdr.kappa_q > floor_mvdr && capon.kappa_q > floor_capon) {
        rep.g_q = capon.kappa_q / mvdr.kappa_q;
        rep.lambda_q = (1.0 - capon.gamma_q.real()) / (1.0 - mvdr.gamma_q.real());
    }
    return rep;
}

}  // namespace wlbeam
