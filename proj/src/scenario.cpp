#include "wlbeam/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace wlbeam {

namespace {
constexpr double kPi = 3.14159265358979323846;
double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }
}  // namespace

Complex NoncircularitySpec::coefficient() const {
    return rate * Complex(std::cos(phase), std::sin(phase));
}

void ArrayScenario::validate() const {
    if (n_sensors < 1) throw ConfigError("scenario requires at least one sensor");
    if (noise_power <= 0.0) throw ConfigError("noise power must be positive");
    if (soi_power < 0.0) throw ConfigError("SOI power must be nonnegative");
    for (const auto& itf : interferences)
        if (itf.power < 0.0) throw ConfigError("interference power must be nonnegative");
    if (noncircularity.rate < 0.0 || noncircularity.rate > 1.0)
        throw InvalidRate("noncircularity rate must lie in [0, 1]");
}

ComplexVector steering_vector(double doa_deg, std::size_t n_sensors) {
    if (doa_deg < -90.0 || doa_deg > 90.0)
        throw InvalidAngle("DOA must lie in [-90, 90] degrees");
    const double u = std::sin(deg2rad(doa_deg));
    ComplexVector s(n_sensors);
    for (std::size_t k = 0; k < n_sensors; ++k) {
        const double phase = -kPi * static_cast<double>(k) * u;
        s[k] = Complex(std::cos(phase), std::sin(phase));
    }
    return s;
}

Complex spatial_correlation(const ComplexVector& j_p, const ComplexVector& s) {
    if (j_p.size() != s.size()) throw DimensionMismatch("spatial_correlation length mismatch");
    const double nj = norm2(j_p);
    const double ns = norm2(s);
    if (nj == 0.0 || ns == 0.0) throw ZeroVector("spatial_correlation requires nonzero vectors");
    return dot(j_p, s) / (nj * ns);
}

SpatialCoefficients spatial_coefficients(const ArrayScenario& sc) {
    sc.validate();
    const std::size_t n = sc.n_sensors;
    const double eta = sc.noise_power;
    SpatialCoefficients out;
    out.eps_s = static_cast<double>(n) * sc.soi_power / eta;

    if (sc.interferences.empty()) return out;

    // Assumption 1: uniform interference power.
    const double pi0 = sc.interferences.front().power;
    for (const auto& itf : sc.interferences) {
        const double ref = std::max(std::abs(pi0), std::abs(itf.power));
        if (ref > 0.0 && std::abs(itf.power - pi0) > 1e-9 * ref)
            throw AssumptionViolated("interference powers differ by more than 1e-9 relative");
    }
    out.eps = static_cast<double>(n) * pi0 / eta;

    const ComplexVector s = steering_vector(sc.soi_doa_deg, n);
    const double delta = sc.noncircularity.phase;
    double cos_sum = 0.0, sin_sum = 0.0;
    for (const auto& itf : sc.interferences) {
        const ComplexVector jp = steering_vector(itf.doa_deg, n);
        const Complex a = spatial_correlation(jp, s);
        out.alpha_ps.push_back(a);
        const double mag2 = std::norm(a);
        // beta_p = phi_p - arg(alpha_ps); when alpha_ps = 0 the term is inert.
        const double beta = itf.carrier_phase - (mag2 > 0.0 ? std::arg(a) : 0.0);
        out.alpha_is_sq += mag2;
        out.alpha_i_sq += mag2 * Complex(std::cos(2.0 * beta), std::sin(2.0 * beta));
        out.alpha_w += mag2 * std::cos(delta + 2.0 * beta);
        cos_sum += mag2 * std::cos(2.0 * beta);
        sin_sum += mag2 * std::sin(2.0 * beta);
    }
    out.delta_offset = (cos_sum == 0.0 && sin_sum == 0.0) ? 0.0 : std::atan2(sin_sum, cos_sum);
    return out;
}

AssumptionReport check_assumptions(const ArrayScenario& sc) {
    AssumptionReport rep;
    if (sc.interferences.empty()) return rep;
    const double pi0 = sc.interferences.front().power;
    for (const auto& itf : sc.interferences) {
        const double ref = std::max(std::abs(pi0), std::abs(itf.power));
        if (ref > 0.0 && std::abs(itf.power - pi0) > 1e-9 * ref) rep.uniform_power = false;
    }
    const std::size_t n = sc.n_sensors;
    std::vector<ComplexVector> steers;
    for (const auto& itf : sc.interferences) steers.push_back(steering_vector(itf.doa_deg, n));
    for (std::size_t i = 0; i < steers.size(); ++i)
        for (std::size_t j = i + 1; j < steers.size(); ++j)
            rep.worst_orthogonality =
                std::max(rep.worst_orthogonality, std::abs(dot(steers[i], steers[j])) / static_cast<double>(n));
    return rep;
}

double snap_doa(double doa_deg, std::size_t n_sensors) {
    if (doa_deg < -90.0 || doa_deg > 90.0)
        throw InvalidAngle("DOA must lie in [-90, 90] degrees");
    const double u = std::sin(deg2rad(doa_deg));
    const double step = 2.0 / static_cast<double>(n_sensors);
    double snapped = std::round(u / step) * step;
    snapped = std::clamp(snapped, -1.0, 1.0);
    return rad2deg(std::asin(snapped));
}

}  // namespace wlbeam
