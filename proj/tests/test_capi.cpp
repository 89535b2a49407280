#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "doctest.h"
#include "wlbeam.h"

TEST_CASE("C API: preset lifecycle and error reporting") {
    wlbeam_config* cfg = nullptr;
    CHECK(wlbeam_config_preset("no-such-preset", &cfg) == WLBEAM_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(wlbeam_last_error()) > 0);
    CHECK(wlbeam_config_preset(nullptr, &cfg) == WLBEAM_ERR_INVALID_ARGUMENT);

    REQUIRE(wlbeam_config_preset("fig2a", &cfg) == WLBEAM_OK);
    REQUIRE(cfg != nullptr);
    const char* text = nullptr;
    CHECK(wlbeam_config_dump(cfg, &text) == WLBEAM_OK);
    CHECK(std::string(text).find("n_sensors = 6") != std::string::npos);
    wlbeam_config_free(cfg);

    const std::string names = wlbeam_preset_names();
    CHECK(names.find("fig2a") != std::string::npos);
    CHECK(names.find("fig6c") != std::string::npos);
    CHECK(std::strlen(wlbeam_version()) > 0);
}

TEST_CASE("C API: theory run and row access") {
    wlbeam_config* cfg = nullptr;
    REQUIRE(wlbeam_config_preset("fig1", &cfg) == WLBEAM_OK);

    wlbeam_results* res = nullptr;
    REQUIRE(wlbeam_run_theory(cfg, &res) == WLBEAM_OK);
    REQUIRE(wlbeam_results_size(res) == 20);  // exact rows only (P = N boundary)

    wlbeam_row row;
    REQUIRE(wlbeam_results_row(res, 0, &row) == WLBEAM_OK);
    CHECK(std::string(row.source) == "theory-exact");
    CHECK(std::isfinite(row.g_db));
    CHECK(row.trials == 0);
    CHECK(wlbeam_results_row(res, 999, &row) == WLBEAM_ERR_INVALID_ARGUMENT);

    wlbeam_results_free(res);
    wlbeam_config_free(cfg);
}

TEST_CASE("C API: simulation, compare, and CSV output") {
    wlbeam_config* cfg = nullptr;
    REQUIRE(wlbeam_config_preset("fig2a", &cfg) == WLBEAM_OK);
    CHECK(wlbeam_config_set_seed(cfg, 7) == WLBEAM_OK);
    CHECK(wlbeam_config_set_trials(cfg, 1) == WLBEAM_OK);
    CHECK(wlbeam_config_set_snapshots(cfg, 2000) == WLBEAM_OK);
    CHECK(wlbeam_config_set_trials(cfg, 0) == WLBEAM_ERR_INVALID_ARGUMENT);

    // Shrink the grid for speed: parse a config equivalent to the preset.
    const char* dumped = nullptr;
    REQUIRE(wlbeam_config_dump(cfg, &dumped) == WLBEAM_OK);
    std::string text = dumped;
    const auto pos = text.find("sweep_values =");
    REQUIRE(pos != std::string::npos);
    const auto eol = text.find('\n', pos);
    text.replace(pos, eol - pos, "sweep_values = 0.3, 0.8");
    wlbeam_config_free(cfg);
    REQUIRE(wlbeam_config_parse(text.c_str(), &cfg) == WLBEAM_OK);

    wlbeam_results* theory = nullptr;
    wlbeam_results* sim = nullptr;
    REQUIRE(wlbeam_run_theory(cfg, &theory) == WLBEAM_OK);
    REQUIRE(wlbeam_run_simulation(cfg, &sim) == WLBEAM_OK);
    CHECK(wlbeam_results_size(sim) == 2);

    wlbeam_compare_report rep;
    REQUIRE(wlbeam_compare(theory, sim, &rep) == WLBEAM_OK);
    CHECK(rep.points_compared == 2);
    CHECK(rep.max_g_db < 1.0);

    const char* path = "capi_out.csv";
    REQUIRE(wlbeam_results_write(sim, path, "csv") == WLBEAM_OK);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "sweep_value,source,G_dB,GI_dB,GQ_dB,lambda_I,lambda_Q,SINR_MVDR_dB,SINR_Capon_dB,"
          "trials,snapshots");
    in.close();
    std::remove(path);

    CHECK(wlbeam_results_write(sim, path, "xml") == WLBEAM_ERR_INVALID_ARGUMENT);

    wlbeam_results_free(theory);
    wlbeam_results_free(sim);
    wlbeam_config_free(cfg);
}

TEST_CASE("C API: assumption checking") {
    wlbeam_config* cfg = nullptr;
    REQUIRE(wlbeam_config_preset("fig2a", &cfg) == WLBEAM_OK);
    double worst = -1.0;
    CHECK(wlbeam_check(cfg, 1e-6, &worst) == WLBEAM_OK);
    CHECK(worst >= 0.0);
    CHECK(worst < 1e-6);

    // Without snapping, the rounded DOAs miss the orthogonality grid.
    CHECK(wlbeam_config_set_snap_doas(cfg, 0) == WLBEAM_OK);
    CHECK(wlbeam_check(cfg, 1e-6, &worst) == WLBEAM_ERR_ASSUMPTION);
    CHECK(worst > 1e-6);
    wlbeam_config_free(cfg);
}

TEST_CASE("C API: SOI DOA override bounds") {
    wlbeam_config* cfg = nullptr;
    REQUIRE(wlbeam_config_preset("fig2a", &cfg) == WLBEAM_OK);
    CHECK(wlbeam_config_set_soi_doa(cfg, -75.0) == WLBEAM_OK);
    CHECK(wlbeam_config_set_soi_doa(cfg, 95.0) == WLBEAM_ERR_INVALID_ARGUMENT);
    wlbeam_config_free(cfg);
}
