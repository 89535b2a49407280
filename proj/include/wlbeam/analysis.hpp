#pragma once

// Full second-order characterization of the output IN and the gain
// decomposition across I and Q channels.

#include <optional>

#include "wlbeam/stats.hpp"

namespace wlbeam {

struct InCharacterization {
    double kappa = 0.0;          // <|q|^2>
    Complex kappa_tilde = 0.0;   // <q^2>
    double kappa_i = 0.0;        // <(Re q)^2> = (kappa + Re kappa_tilde)/2
    double kappa_q = 0.0;        // <(Im q)^2> = (kappa - Re kappa_tilde)/2
    Complex gamma_q = 0.0;       // kappa_tilde / kappa
};

struct GainReport {
    double sinr_mvdr = 0.0;
    double sinr_capon = 0.0;
    double g = 0.0;
    // Per-channel gains are absent when a channel power degenerates to ~0.
    std::optional<double> g_i;
    std::optional<double> g_q;
    std::optional<double> lambda_i;
    std::optional<double> lambda_q;
};

// Matrix route for the WL MVDR output IN (A/D quadratic forms).
InCharacterization characterize_mvdr(const SecondOrderStats& stats, const ComplexVector& s);

// Matrix route for the Capon output IN.
InCharacterization characterize_capon(const SecondOrderStats& stats, const ComplexVector& s);

// Sample-average route from an output-IN stream.
InCharacterization characterize_empirical(const std::vector<Complex>& q);

GainReport gain_report(const InCharacterization& mvdr, const InCharacterization& capon,
                       double pi_s);

}  // namespace wlbeam
