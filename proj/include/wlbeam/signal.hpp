#pragma once

// Waveform and snapshot synthesis: UQPSK sources, circular white noise,
// the I/Q imbalance transform, and assembly of the received data.

#include <cstdint>
#include <random>
#include <vector>

#include "wlbeam/scenario.hpp"

namespace wlbeam {

// Deterministic stream of uniforms / Gaussians on top of mt19937_64, whose
// output sequence is pinned by the standard. Box-Muller keeps the Gaussian
// mapping implementation-independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01();      // [0, 1)
    double sign();           // -1 or +1, equiprobable
    double gaussian();       // standard normal

    // Derive an independent substream seed for a named source.
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t stream_id);

private:
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

struct SnapshotBatch {
    std::size_t n_sensors = 0;
    std::vector<Complex> soi_ref;             // T entries, s_c(t) e^{j phi_s}
    std::vector<ComplexVector> in_ref;        // T vectors, v_T(t)
    std::vector<ComplexVector> data;          // T vectors, x(t)

    std::size_t n_snapshots() const { return data.size(); }
};

struct IqImbalance {
    double g = 1.0;      // amplitude ratio
    double zeta = 0.0;   // phase error, radians
};

// UQPSK complex baseband symbols (rectangular pulse, one sample per symbol),
// normalized to unit mean power.
std::vector<Complex> gen_uqpsk(double xi, double delta, std::size_t n_symbols, std::uint64_t seed);

// Noncircularity coefficient of a gen_uqpsk stream: (2xi-1)/(2xi^2-2xi+1) e^{j delta}.
double uqpsk_rate(double xi);

// Inverse of uqpsk_rate on [0.5, 1); closed-form quadratic root.
double xi_for_rate(double target_rate);

// i.i.d. circular complex Gaussian vectors, per-entry variance eta.
std::vector<ComplexVector> gen_circular_noise(double eta, std::size_t n_sensors,
                                              std::size_t n_snapshots, std::uint64_t seed);

SnapshotBatch synthesize(const ArrayScenario& sc, std::size_t n_snapshots, std::uint64_t seed);

std::pair<Complex, Complex> iq_mu_nu(const IqImbalance& imb);

// Equivalent noncircularity coefficient 2*mu*nu / (|mu|^2 + |nu|^2).
Complex iq_noncircularity(const IqImbalance& imb);

// x -> mu x + nu x*; references transformed so that
// data = soi_ref * s + in_ref still holds (SOI conjugate image goes to in_ref).
SnapshotBatch apply_iq_imbalance(const SnapshotBatch& batch, const IqImbalance& imb);

}  // namespace wlbeam
