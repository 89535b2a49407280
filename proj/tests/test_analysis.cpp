#include <cmath>

#include "doctest.h"
#include "wlbeam/analysis.hpp"
#include "wlbeam/beamform.hpp"

using namespace wlbeam;

namespace {
constexpr double kPi = 3.14159265358979323846;

ArrayScenario two_sensor_scenario() {
    ArrayScenario sc;
    sc.n_sensors = 2;
    sc.soi_doa_deg = 25.0;
    sc.soi_power = 10.0;
    sc.noise_power = 1.0;
    sc.interferences = {{0.0, 100.0, 0.0}, {90.0, 100.0, 0.0}};
    sc.noncircularity = {0.8, kPi * 150.0 / 180.0};
    return sc;
}
}  // namespace

TEST_CASE("circular statistics give a circular output IN") {
    ArrayScenario sc = two_sensor_scenario();
    sc.noncircularity = {0.0, 0.0};
    const SecondOrderStats st = population_in_stats(sc);
    const ComplexVector s = steering_vector(sc.soi_doa_deg, 2);

    const InCharacterization mvdr = characterize_mvdr(st, s);
    CHECK(std::abs(mvdr.kappa_tilde) < 1e-12 * mvdr.kappa);
    CHECK(std::abs(mvdr.gamma_q) < 1e-12);
    CHECK(mvdr.kappa_i == doctest::Approx(mvdr.kappa_q).epsilon(1e-12));

    // kappa matches the Capon closed value (s^H R^-1 s)^-1.
    const InCharacterization capon = characterize_capon(st, s);
    CHECK(std::abs(capon.kappa_tilde) < 1e-12 * capon.kappa);
    CHECK(mvdr.kappa == doctest::Approx(capon.kappa).epsilon(1e-10));
}

TEST_CASE("capon characterization in plain white noise") {
    const std::size_t n = 4;
    SecondOrderStats st;
    st.r = ComplexMatrix::identity(n) * Complex(2.0);
    st.c = ComplexMatrix(n, n);
    fill_block_inverse(st);
    const ComplexVector s = steering_vector(0.0, n);
    const InCharacterization ch = characterize_capon(st, s);
    CHECK(ch.kappa == doctest::Approx(2.0 / static_cast<double>(n)).epsilon(1e-12));
    CHECK(std::abs(ch.kappa_tilde) < 1e-15);
}

TEST_CASE("characterize_empirical follows its definitions") {
    // Real-valued stream: all power in the I channel.
    const InCharacterization real_ch = characterize_empirical({1.0, -2.0, 0.5, 1.5});
    CHECK(real_ch.kappa_q == 0.0);
    CHECK(std::abs(real_ch.gamma_q - 1.0) < 1e-15);

    // Balanced quadrature pairs: circular.
    const InCharacterization circ = characterize_empirical(
        {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0), Complex(0.0, -1.0)});
    CHECK(std::abs(circ.kappa_tilde) < 1e-15);
    CHECK(circ.kappa_i == doctest::Approx(circ.kappa_q));

    CHECK_THROWS_AS(characterize_empirical({Complex(1.0, 0.0)}), ZeroPower);
}

TEST_CASE("characterizations keep the I/Q split consistent") {
    const SecondOrderStats st = population_in_stats(two_sensor_scenario());
    const ComplexVector s = steering_vector(25.0, 2);
    for (const InCharacterization& ch : {characterize_mvdr(st, s), characterize_capon(st, s)}) {
        CHECK(ch.kappa_i + ch.kappa_q == doctest::Approx(ch.kappa).epsilon(1e-12));
        CHECK(ch.kappa_i - ch.kappa_q == doctest::Approx(ch.kappa_tilde.real()).epsilon(1e-12));
        CHECK(std::abs(ch.gamma_q) <= 1.0 + 1e-12);
    }
}

TEST_CASE("matrix and empirical routes agree at Monte Carlo scale") {
    const ArrayScenario sc = two_sensor_scenario();
    const std::size_t t_count = 20000;
    const SnapshotBatch batch = synthesize(sc, t_count, 77);
    const SecondOrderStats pop = population_in_stats(sc);
    const ComplexVector s = steering_vector(sc.soi_doa_deg, 2);

    const BeamWeights wl = wl_mvdr_weights(pop, s);
    const BeamWeights capon = capon_weights(pop, s);
    const InCharacterization emp_m = characterize_empirical(output_in(batch, wl));
    const InCharacterization emp_c = characterize_empirical(output_in(batch, capon));
    const InCharacterization th_m = characterize_mvdr(pop, s);
    const InCharacterization th_c = characterize_capon(pop, s);

    CHECK(emp_m.kappa == doctest::Approx(th_m.kappa).epsilon(0.05));
    CHECK(emp_c.kappa == doctest::Approx(th_c.kappa).epsilon(0.05));
    CHECK(std::abs(emp_m.kappa_tilde - th_m.kappa_tilde) < 0.05 * th_m.kappa);
    CHECK(std::abs(emp_c.kappa_tilde - th_c.kappa_tilde) < 0.05 * th_c.kappa);
}

TEST_CASE("gain_report identities") {
    const SecondOrderStats st = population_in_stats(two_sensor_scenario());
    const ComplexVector s = steering_vector(25.0, 2);
    const InCharacterization mvdr = characterize_mvdr(st, s);
    const InCharacterization capon = characterize_capon(st, s);

    // Identical characterizations: every ratio is one.
    const GainReport unit = gain_report(mvdr, mvdr, 10.0);
    CHECK(unit.g == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*unit.g_i == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*unit.g_q == doctest::Approx(1.0).epsilon(1e-12));

    const GainReport rep = gain_report(mvdr, capon, 10.0);
    CHECK(rep.g == doctest::Approx(capon.kappa / mvdr.kappa).epsilon(1e-12));
    CHECK(rep.sinr_mvdr == doctest::Approx(10.0 / mvdr.kappa).epsilon(1e-12));
    CHECK(rep.sinr_capon == doctest::Approx(10.0 / capon.kappa).epsilon(1e-12));
    REQUIRE(rep.g_i.has_value());
    REQUIRE(rep.lambda_i.has_value());
    CHECK(*rep.g_i == doctest::Approx(*rep.lambda_i * rep.g).epsilon(1e-12));
    CHECK(*rep.g_q == doctest::Approx(*rep.lambda_q * rep.g).epsilon(1e-12));
    CHECK(*rep.lambda_i > 0.0);
    CHECK(*rep.lambda_q > 0.0);
    CHECK(rep.g >= 1.0 - 1e-12);
}

TEST_CASE("orthogonal SOI leaves no gain on the table") {
    ArrayScenario sc;
    sc.n_sensors = 6;
    sc.soi_doa_deg = 90.0;
    sc.soi_power = 10.0;
    sc.noise_power = 1.0;
    sc.interferences = {{snap_doa(19.0, 6), 100.0, 0.0}, {snap_doa(42.0, 6), 100.0, 0.0}};
    sc.noncircularity = {0.8, 1.0};
    const SecondOrderStats st = population_in_stats(sc);
    const ComplexVector s = steering_vector(90.0, 6);
    const GainReport rep =
        gain_report(characterize_mvdr(st, s), characterize_capon(st, s), sc.soi_power);
    CHECK(rep.g == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(*rep.g_i == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(*rep.g_q == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("spanning interferences split the gain evenly") {
    const SecondOrderStats st = population_in_stats(two_sensor_scenario());
    const ComplexVector s = steering_vector(25.0, 2);
    const GainReport rep =
        gain_report(characterize_mvdr(st, s), characterize_capon(st, s), 10.0);
    CHECK(*rep.lambda_i == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(*rep.lambda_q == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(*rep.g_i == doctest::Approx(rep.g).epsilon(1e-10));
    CHECK(*rep.g_q == doctest::Approx(rep.g).epsilon(1e-10));
}
