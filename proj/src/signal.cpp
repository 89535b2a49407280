#include "wlbeam/signal.hpp"

#include <cmath>

namespace wlbeam {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::sign() { return (engine_() & 1u) ? 1.0 : -1.0; }

double Rng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(kTwoPi * u2);
    has_cached_ = true;
    return r * std::cos(kTwoPi * u2);
}

std::uint64_t Rng::substream(std::uint64_t seed, std::uint64_t stream_id) {
    return splitmix64(seed ^ splitmix64(stream_id + 0x632be59bd9b4e019ULL));
}

std::vector<Complex> gen_uqpsk(double xi, double delta, std::size_t n_symbols, std::uint64_t seed) {
    if (xi < 0.0 || xi > 1.0) throw InvalidXi("xi must lie in [0, 1]");
    Rng rng(seed);
    const double norm = std::sqrt(xi * xi + (1.0 - xi) * (1.0 - xi));
    const Complex rot(std::cos(delta / 2.0), std::sin(delta / 2.0));
    std::vector<Complex> out(n_symbols);
    for (auto& s : out) {
        const double rho = rng.sign();
        const double sig = rng.sign();
        s = Complex(xi * rho, (1.0 - xi) * sig) * rot / norm;
    }
    return out;
}

double uqpsk_rate(double xi) {
    return (2.0 * xi - 1.0) / (2.0 * xi * xi - 2.0 * xi + 1.0);
}

double xi_for_rate(double target_rate) {
    if (target_rate < 0.0 || target_rate >= 1.0)
        throw InvalidRate("target noncircularity rate must lie in [0, 1)");
    if (target_rate == 0.0) return 0.5;
    const double r = target_rate;
    return (1.0 + r - std::sqrt((1.0 + r) * (1.0 - r))) / (2.0 * r);
}

std::vector<ComplexVector> gen_circular_noise(double eta, std::size_t n_sensors,
                                              std::size_t n_snapshots, std::uint64_t seed) {
    if (eta <= 0.0) throw ConfigError("noise power must be positive");
    Rng rng(seed);
    const double sd = std::sqrt(eta / 2.0);
    std::vector<ComplexVector> out(n_snapshots, ComplexVector(n_sensors));
    for (auto& v : out)
        for (auto& e : v) {
            const double re = sd * rng.gaussian();
            const double im = sd * rng.gaussian();
            e = Complex(re, im);
        }
    return out;
}

SnapshotBatch synthesize(const ArrayScenario& sc, std::size_t n_snapshots, std::uint64_t seed) {
    sc.validate();
    const std::size_t n = sc.n_sensors;
    const std::size_t t_count = n_snapshots;
    if (sc.noncircularity.rate >= 1.0)
        throw InvalidRate("synthesis requires noncircularity rate < 1");
    const double xi = xi_for_rate(sc.noncircularity.rate);
    const double delta = sc.noncircularity.phase;

    SnapshotBatch batch;
    batch.n_sensors = n;
    batch.in_ref = gen_circular_noise(sc.noise_power, n, t_count, Rng::substream(seed, 0));

    const ComplexVector s = steering_vector(sc.soi_doa_deg, n);
    const Complex soi_rot(std::cos(sc.soi_phase), std::sin(sc.soi_phase));
    const double soi_amp = std::sqrt(sc.soi_power);
    const auto soi_env = gen_uqpsk(xi, delta, t_count, Rng::substream(seed, 1));
    batch.soi_ref.resize(t_count);
    for (std::size_t t = 0; t < t_count; ++t) batch.soi_ref[t] = soi_amp * soi_env[t] * soi_rot;

    for (std::size_t p = 0; p < sc.interferences.size(); ++p) {
        const auto& itf = sc.interferences[p];
        const ComplexVector jp = steering_vector(itf.doa_deg, n);
        const Complex rot(std::cos(itf.carrier_phase), std::sin(itf.carrier_phase));
        const double amp = std::sqrt(itf.power);
        const auto env = gen_uqpsk(xi, delta, t_count, Rng::substream(seed, 2 + p));
        for (std::size_t t = 0; t < t_count; ++t) {
            const Complex c = amp * env[t] * rot;
            for (std::size_t k = 0; k < n; ++k) batch.in_ref[t][k] += c * jp[k];
        }
    }

    batch.data.resize(t_count, ComplexVector(n));
    for (std::size_t t = 0; t < t_count; ++t)
        for (std::size_t k = 0; k < n; ++k)
            batch.data[t][k] = batch.soi_ref[t] * s[k] + batch.in_ref[t][k];
    return batch;
}

std::pair<Complex, Complex> iq_mu_nu(const IqImbalance& imb) {
    if (imb.g <= 0.0) throw ConfigError("I/Q amplitude ratio must be positive");
    const Complex em(std::cos(imb.zeta), -std::sin(imb.zeta));
    const Complex ep(std::cos(imb.zeta), std::sin(imb.zeta));
    return {(1.0 + imb.g * em) / 2.0, (1.0 - imb.g * ep) / 2.0};
}

Complex iq_noncircularity(const IqImbalance& imb) {
    const auto [mu, nu] = iq_mu_nu(imb);
    return 2.0 * mu * nu / (std::norm(mu) + std::norm(nu));
}

SnapshotBatch apply_iq_imbalance(const SnapshotBatch& batch, const IqImbalance& imb) {
    const auto [mu, nu] = iq_mu_nu(imb);
    SnapshotBatch out;
    out.n_sensors = batch.n_sensors;
    const std::size_t t_count = batch.n_snapshots();
    out.soi_ref.resize(t_count);
    out.in_ref.resize(t_count, ComplexVector(batch.n_sensors));
    out.data.resize(t_count, ComplexVector(batch.n_sensors));
    for (std::size_t t = 0; t < t_count; ++t) {
        out.soi_ref[t] = mu * batch.soi_ref[t];
        for (std::size_t k = 0; k < batch.n_sensors; ++k) {
            const Complex x = batch.data[t][k];
            out.data[t][k] = mu * x + nu * std::conj(x);
            // data = soi_ref * s + in_ref is preserved; the SOI conjugate
            // image lands in in_ref.
            out.in_ref[t][k] = mu * batch.in_ref[t][k] + nu * std::conj(x);
        }
    }
    return out;
}

}  // namespace wlbeam
