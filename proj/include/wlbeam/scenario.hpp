#pragma once

// Array geometry and the scalar spatial/power coefficients that drive the
// closed-form SINR analysis.

#include <vector>

#include "wlbeam/linalg.hpp"

namespace wlbeam {

struct NoncircularitySpec {
    double rate = 0.0;   // |gamma| in [0, 1]
    double phase = 0.0;  // delta, radians

    Complex coefficient() const;  // |gamma| e^{j delta}
};

struct Interference {
    double doa_deg = 0.0;
    double power = 0.0;
    double carrier_phase = 0.0;  // radians
};

struct ArrayScenario {
    std::size_t n_sensors = 1;
    double soi_doa_deg = 0.0;
    double soi_power = 0.0;
    double soi_phase = 0.0;  // radians
    std::vector<Interference> interferences;
    double noise_power = 1.0;
    // Shared by all interferences (Assumption 1).
    NoncircularitySpec noncircularity;

    void validate() const;
};

struct SpatialCoefficients {
    double eps_s = 0.0;                  // N pi_s / eta
    double eps = 0.0;                    // N pi / eta
    std::vector<Complex> alpha_ps;       // per-interference spatial correlation
    double alpha_is_sq = 0.0;            // sum |alpha_ps|^2
    Complex alpha_i_sq = 0.0;            // sum |alpha_ps|^2 e^{j 2 beta_p}
    double alpha_w = 0.0;                // sum |alpha_ps|^2 cos(delta + 2 beta_p)
    double delta_offset = 0.0;           // Delta with alpha_w = |alpha_i_sq| cos(delta + Delta)
};

struct AssumptionReport {
    bool uniform_power = true;
    // Worst |j_i^H j_j| / N over interference pairs; 0 when P <= 1.
    double worst_orthogonality = 0.0;
    bool holds(double tol) const { return uniform_power && worst_orthogonality <= tol; }
};

// Half-wavelength ULA response, entry k = exp(-j pi k sin theta), k = 0..N-1.
ComplexVector steering_vector(double doa_deg, std::size_t n_sensors);

// j_p^H s normalized by both norms; modulus in [0, 1].
Complex spatial_correlation(const ComplexVector& j_p, const ComplexVector& s);

SpatialCoefficients spatial_coefficients(const ArrayScenario& sc);

AssumptionReport check_assumptions(const ArrayScenario& sc);

// Nearest DOA (degrees) whose sine lies on the 2/N orthogonality grid.
double snap_doa(double doa_deg, std::size_t n_sensors);

}  // namespace wlbeam
