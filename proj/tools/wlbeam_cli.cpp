// Command-line front end for the widely linear beamforming analysis library.
// Talks to the shared library exclusively through the C interface.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "wlbeam.h"

namespace {

struct ConfigDeleter {
    void operator()(wlbeam_config* c) const { wlbeam_config_free(c); }
};
struct ResultsDeleter {
    void operator()(wlbeam_results* r) const { wlbeam_results_free(r); }
};
using ConfigPtr = std::unique_ptr<wlbeam_config, ConfigDeleter>;
using ResultsPtr = std::unique_ptr<wlbeam_results, ResultsDeleter>;

[[noreturn]] void die(const std::string& context) {
    std::fprintf(stderr, "error: %s: %s\n", context.c_str(), wlbeam_last_error());
    std::exit(1);
}

struct CommonOpts {
    std::string config_path;
    std::string preset;
    std::string out;
    std::string format = "csv";
    bool no_snap = false;
    bool use_data_stats = false;
    double soi_doa = std::nan("");
    std::uint64_t seed = 0;
    std::size_t snapshots = 0;
    std::size_t trials = 0;
    bool have_seed = false, have_snapshots = false, have_trials = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "config file (key = value lines)");
    cmd->add_option("--preset", o.preset, "named figure preset (see 'preset --list')");
    cmd->add_option("--out", o.out, "output path (default: stdout CSV)");
    cmd->add_option("--format", o.format, "output format: csv or plot")
        ->check(CLI::IsMember({"csv", "plot"}));
    cmd->add_option("--seed", o.seed, "RNG seed")->each([&](const std::string&) {
        o.have_seed = true;
    });
    cmd->add_option("--snapshots", o.snapshots, "snapshots per trial")
        ->each([&](const std::string&) { o.have_snapshots = true; });
    cmd->add_option("--trials", o.trials, "Monte Carlo trials per grid point")
        ->each([&](const std::string&) { o.have_trials = true; });
    cmd->add_flag("--no-snap-doas", o.no_snap,
                  "do not snap interference DOAs to the orthogonal grid");
    cmd->add_option("--soi-doa", o.soi_doa, "override the SOI DOA (degrees)");
    cmd->add_flag("--use-data-stats", o.use_data_stats,
                  "also report weight deviation from full-observation statistics");
}

ConfigPtr build_config(const CommonOpts& o) {
    if (o.config_path.empty() == o.preset.empty()) {
        std::fprintf(stderr, "error: exactly one of --config or --preset is required\n");
        std::exit(1);
    }
    wlbeam_config* raw = nullptr;
    if (!o.preset.empty()) {
        if (wlbeam_config_preset(o.preset.c_str(), &raw)) die("loading preset " + o.preset);
    } else {
        if (wlbeam_config_load(o.config_path.c_str(), &raw)) die("loading " + o.config_path);
    }
    ConfigPtr cfg(raw);
    if (o.have_seed && wlbeam_config_set_seed(cfg.get(), o.seed)) die("--seed");
    if (o.have_snapshots && wlbeam_config_set_snapshots(cfg.get(), o.snapshots))
        die("--snapshots");
    if (o.have_trials && wlbeam_config_set_trials(cfg.get(), o.trials)) die("--trials");
    if (o.no_snap && wlbeam_config_set_snap_doas(cfg.get(), 0)) die("--no-snap-doas");
    if (!std::isnan(o.soi_doa) && wlbeam_config_set_soi_doa(cfg.get(), o.soi_doa))
        die("--soi-doa");
    if (o.use_data_stats && wlbeam_config_set_use_data_stats(cfg.get(), 1))
        die("--use-data-stats");
    return cfg;
}

std::string resolve_out(const std::string& out) {
    if (out.empty()) return out;
    if (out.find('/') != std::string::npos) return out;  // explicit path wins
    if (const char* dir = std::getenv("WLBEAM_OUT_DIR"))
        if (*dir) return std::string(dir) + "/" + out;
    return out;
}

void write_results(const wlbeam_results* res, const CommonOpts& o) {
    const std::string out = resolve_out(o.out);
    if (out.empty()) {
        // stdout: always CSV, via a temp-free in-memory path is not available
        // through the C surface, so print row by row.
        std::printf(
            "sweep_value,source,G_dB,GI_dB,GQ_dB,lambda_I,lambda_Q,SINR_MVDR_dB,"
            "SINR_Capon_dB,trials,snapshots\n");
        auto field = [](double v) {
            if (std::isnan(v)) return std::string();
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12g", v);
            return std::string(buf);
        };
        for (size_t i = 0; i < wlbeam_results_size(res); ++i) {
            wlbeam_row r;
            if (wlbeam_results_row(res, i, &r)) die("reading result row");
            std::printf("%.12g,%s,%s,%s,%s,%s,%s,%s,%s,%zu,%zu\n", r.sweep_value, r.source,
                        field(r.g_db).c_str(), field(r.g_i_db).c_str(), field(r.g_q_db).c_str(),
                        field(r.lambda_i).c_str(), field(r.lambda_q).c_str(),
                        field(r.sinr_mvdr_db).c_str(), field(r.sinr_capon_db).c_str(), r.trials,
                        r.snapshots);
        }
        return;
    }
    if (wlbeam_results_write(res, out.c_str(), o.format.c_str())) die("writing " + out);
    std::fprintf(stderr, "wrote %s\n", out.c_str());
}

ResultsPtr run(const wlbeam_config* cfg, bool simulate) {
    wlbeam_results* raw = nullptr;
    const wlbeam_status st =
        simulate ? wlbeam_run_simulation(cfg, &raw) : wlbeam_run_theory(cfg, &raw);
    if (st) die(simulate ? "simulation run" : "theory run");
    return ResultsPtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Widely linear vs strictly linear MVDR beamformer analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wlbeam_version()));

    CommonOpts theory_opts, sim_opts, cmp_opts, check_opts;
    CLI::App* theory = app.add_subcommand("theory", "evaluate the closed-form predictions");
    add_common(theory, theory_opts);
    CLI::App* simulate = app.add_subcommand("simulate", "run the Monte Carlo experiment");
    add_common(simulate, sim_opts);
    CLI::App* compare =
        app.add_subcommand("compare", "run both and report worst theory/simulation deviations");
    add_common(compare, cmp_opts);
    CLI::App* check =
        app.add_subcommand("check", "validate a config against the theory assumptions");
    add_common(check, check_opts);
    double check_tol = 1e-6;
    check->add_option("--tol", check_tol, "orthogonality tolerance");

    CLI::App* preset = app.add_subcommand("preset", "list presets or dump one as config text");
    std::string preset_name;
    bool list_presets = false;
    preset->add_flag("--list", list_presets, "list preset names");
    preset->add_option("name", preset_name, "preset to dump");

    CLI11_PARSE(app, argc, argv);

    if (theory->parsed()) {
        ConfigPtr cfg = build_config(theory_opts);
        write_results(run(cfg.get(), false).get(), theory_opts);
        return 0;
    }
    if (simulate->parsed()) {
        ConfigPtr cfg = build_config(sim_opts);
        write_results(run(cfg.get(), true).get(), sim_opts);
        return 0;
    }
    if (compare->parsed()) {
        ConfigPtr cfg = build_config(cmp_opts);
        ResultsPtr th = run(cfg.get(), false);
        ResultsPtr sim = run(cfg.get(), true);
        wlbeam_compare_report rep;
        if (wlbeam_compare(th.get(), sim.get(), &rep)) die("compare");
        std::printf("points_compared: %zu\n", rep.points_compared);
        std::printf("max |G| deviation:          %.6f dB\n", rep.max_g_db);
        std::printf("max |G_I| deviation:        %.6f dB\n", rep.max_g_i_db);
        std::printf("max |G_Q| deviation:        %.6f dB\n", rep.max_g_q_db);
        std::printf("max |SINR_MVDR| deviation:  %.6f dB\n", rep.max_sinr_mvdr_db);
        std::printf("max |SINR_Capon| deviation: %.6f dB\n", rep.max_sinr_capon_db);
        if (!cmp_opts.out.empty()) {
            const std::string base = resolve_out(cmp_opts.out);
            if (wlbeam_results_write(th.get(), (base + ".theory.csv").c_str(), "csv"))
                die("writing theory CSV");
            if (wlbeam_results_write(sim.get(), (base + ".sim.csv").c_str(), "csv"))
                die("writing simulation CSV");
            std::fprintf(stderr, "wrote %s.theory.csv and %s.sim.csv\n", base.c_str(),
                         base.c_str());
        }
        return 0;
    }
    if (check->parsed()) {
        ConfigPtr cfg = build_config(check_opts);
        double worst = 0.0;
        const wlbeam_status st = wlbeam_check(cfg.get(), check_tol, &worst);
        if (st == WLBEAM_OK) {
            std::printf("ok: assumptions hold (worst orthogonality %.3e)\n", worst);
            return 0;
        }
        std::fprintf(stderr, "check failed: %s\n", wlbeam_last_error());
        return 1;
    }
    if (preset->parsed()) {
        if (list_presets || preset_name.empty()) {
            std::printf("%s\n", wlbeam_preset_names());
            return 0;
        }
        wlbeam_config* raw = nullptr;
        if (wlbeam_config_preset(preset_name.c_str(), &raw)) die("loading preset " + preset_name);
        ConfigPtr cfg(raw);
        const char* text = nullptr;
        if (wlbeam_config_dump(cfg.get(), &text)) die("dumping preset");
        std::fputs(text, stdout);
        return 0;
    }
    return 0;
}
