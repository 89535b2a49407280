#include "wlbeam.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "wlbeam/experiment.hpp"

struct wlbeam_config {
    wlbeam::ExperimentConfig cfg;
    std::string dump_buffer;
};

struct wlbeam_results {
    std::vector<wlbeam::ResultRow> rows;
};

namespace {

thread_local std::string g_last_error = "no error";

wlbeam_status fail(wlbeam_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Translate the library's exception hierarchy to status codes.
template <typename Fn>
wlbeam_status guarded(Fn&& fn) {
    using namespace wlbeam;
    try {
        fn();
        return WLBEAM_OK;
    } catch (const AssumptionViolated& e) {
        return fail(WLBEAM_ERR_ASSUMPTION, e.what());
    } catch (const SingularMatrix& e) {
        return fail(WLBEAM_ERR_SINGULAR, e.what());
    } catch (const DegenerateStatistics& e) {
        return fail(WLBEAM_ERR_SINGULAR, e.what());
    } catch (const IoError& e) {
        return fail(WLBEAM_ERR_IO, e.what());
    } catch (const ConfigError& e) {
        return fail(WLBEAM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const UnknownPreset& e) {
        return fail(WLBEAM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const Error& e) {
        return fail(WLBEAM_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(WLBEAM_ERR_INTERNAL, e.what());
    }
}

wlbeam_status require(bool ok, const char* what) {
    return ok ? WLBEAM_OK : fail(WLBEAM_ERR_INVALID_ARGUMENT, what);
}

double opt_or_nan(const std::optional<double>& v) {
    return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

extern "C" {

const char* wlbeam_last_error(void) { return g_last_error.c_str(); }

const char* wlbeam_version(void) { return "1.0.0"; }

wlbeam_status wlbeam_config_preset(const char* name, wlbeam_config** out) {
    if (auto st = require(name && out, "null argument")) return st;
    return guarded([&] { *out = new wlbeam_config{wlbeam::figure_preset(name), {}}; });
}

wlbeam_status wlbeam_config_parse(const char* text, wlbeam_config** out) {
    if (auto st = require(text && out, "null argument")) return st;
    return guarded([&] { *out = new wlbeam_config{wlbeam::parse_config(text), {}}; });
}

wlbeam_status wlbeam_config_load(const char* path, wlbeam_config** out) {
    if (auto st = require(path && out, "null argument")) return st;
    return guarded([&] { *out = new wlbeam_config{wlbeam::load_config(path), {}}; });
}

void wlbeam_config_free(wlbeam_config* cfg) { delete cfg; }

wlbeam_status wlbeam_config_dump(wlbeam_config* cfg, const char** out_text) {
    if (auto st = require(cfg && out_text, "null argument")) return st;
    return guarded([&] {
        cfg->dump_buffer = wlbeam::dump_config(cfg->cfg);
        *out_text = cfg->dump_buffer.c_str();
    });
}

wlbeam_status wlbeam_config_set_seed(wlbeam_config* cfg, uint64_t seed) {
    if (auto st = require(cfg != nullptr, "null config")) return st;
    cfg->cfg.seed = seed;
    return WLBEAM_OK;
}

wlbeam_status wlbeam_config_set_trials(wlbeam_config* cfg, size_t trials) {
    if (auto st = require(cfg != nullptr, "null config")) return st;
    if (auto st = require(trials >= 1, "trials must be >= 1")) return st;
    cfg->cfg.trials = trials;
    return WLBEAM_OK;
}

wlbeam_status wlbeam_config_set_snapshots(wlbeam_config* cfg, size_t snapshots) {
    if (auto st = require(cfg != nullptr, "null config")) return st;
    if (auto st = require(snapshots >= 2, "snapshots must be >= 2")) return st;
    cfg->cfg.snapshots = snapshots;
    return WLBEAM_OK;
}

wlbeam_status wlbeam_config_set_snap_doas(wlbeam_config* cfg, int enable) {
    if (auto st = require(cfg != nullptr, "null config")) return st;
    cfg->cfg.snap_doas = enable != 0;
    return WLBEAM_OK;
}

wlbeam_status wlbeam_config_set_soi_doa(wlbeam_config* cfg, double doa_deg) {
    if (auto st = require(cfg != nullptr, "null config")) return st;
    if (auto st = require(doa_deg >= -90.0 && doa_deg <= 90.0, "DOA must be in [-90, 90]"))
        return st;
    cfg->cfg.scenario.soi_doa_deg = doa_deg;
    return WLBEAM_OK;
}

wlbeam_status wlbeam_config_set_use_data_stats(wlbeam_config* cfg, int enable) {
    if (auto st = require(cfg != nullptr, "null config")) return st;
    cfg->cfg.use_data_stats = enable != 0;
    return WLBEAM_OK;
}

const char* wlbeam_preset_names(void) {
    static const std::string names = [] {
        std::string s;
        for (const auto& n : wlbeam::preset_names()) s += (s.empty() ? "" : ",") + n;
        return s;
    }();
    return names.c_str();
}

wlbeam_status wlbeam_run_theory(const wlbeam_config* cfg, wlbeam_results** out) {
    if (auto st = require(cfg && out, "null argument")) return st;
    return guarded([&] { *out = new wlbeam_results{wlbeam::run_theory(cfg->cfg)}; });
}

wlbeam_status wlbeam_run_simulation(const wlbeam_config* cfg, wlbeam_results** out) {
    if (auto st = require(cfg && out, "null argument")) return st;
    return guarded([&] { *out = new wlbeam_results{wlbeam::run_simulation(cfg->cfg)}; });
}

void wlbeam_results_free(wlbeam_results* res) { delete res; }

size_t wlbeam_results_size(const wlbeam_results* res) { return res ? res->rows.size() : 0; }

wlbeam_status wlbeam_results_row(const wlbeam_results* res, size_t index, wlbeam_row* out) {
    if (auto st = require(res && out, "null argument")) return st;
    if (auto st = require(index < res->rows.size(), "row index out of range")) return st;
    const wlbeam::ResultRow& r = res->rows[index];
    out->sweep_value = r.sweep_value;
    out->source = wlbeam::row_source_name(r.source);
    out->g_db = r.g_db;
    out->g_i_db = opt_or_nan(r.g_i_db);
    out->g_q_db = opt_or_nan(r.g_q_db);
    out->lambda_i = opt_or_nan(r.lambda_i);
    out->lambda_q = opt_or_nan(r.lambda_q);
    out->sinr_mvdr_db = r.sinr_mvdr_db;
    out->sinr_capon_db = r.sinr_capon_db;
    out->trials = r.trials_used;
    out->snapshots = r.snapshots_used;
    return WLBEAM_OK;
}

wlbeam_status wlbeam_results_write(const wlbeam_results* res, const char* path,
                                   const char* format) {
    if (auto st = require(res && path && format, "null argument")) return st;
    wlbeam::EmitFormat fmt;
    if (std::strcmp(format, "csv") == 0) fmt = wlbeam::EmitFormat::Csv;
    else if (std::strcmp(format, "plot") == 0) fmt = wlbeam::EmitFormat::PlotScript;
    else return fail(WLBEAM_ERR_INVALID_ARGUMENT, std::string("unknown format: ") + format);
    return guarded([&] { wlbeam::emit(res->rows, path, fmt); });
}

wlbeam_status wlbeam_compare(const wlbeam_results* theory, const wlbeam_results* simulation,
                             wlbeam_compare_report* out) {
    if (auto st = require(theory && simulation && out, "null argument")) return st;
    return guarded([&] {
        const wlbeam::CompareReport rep = wlbeam::compare_rows(theory->rows, simulation->rows);
        out->points_compared = rep.points_compared;
        out->max_g_db = rep.max_g_db;
        out->max_g_i_db = rep.max_g_i_db;
        out->max_g_q_db = rep.max_g_q_db;
        out->max_sinr_mvdr_db = rep.max_sinr_mvdr_db;
        out->max_sinr_capon_db = rep.max_sinr_capon_db;
    });
}

wlbeam_status wlbeam_check(const wlbeam_config* cfg, double tol, double* worst) {
    if (auto st = require(cfg != nullptr, "null config")) return st;
    double worst_seen = 0.0;
    bool uniform = true;
    const wlbeam_status st = guarded([&] {
        cfg->cfg.validate();
        for (std::size_t i = 0; i < cfg->cfg.sweep.size(); ++i) {
            const wlbeam::AssumptionReport rep =
                wlbeam::check_assumptions(wlbeam::scenario_at(cfg->cfg, i));
            worst_seen = std::max(worst_seen, rep.worst_orthogonality);
            uniform = uniform && rep.uniform_power;
        }
    });
    if (worst) *worst = worst_seen;
    if (st != WLBEAM_OK) return st;
    if (!uniform) return fail(WLBEAM_ERR_ASSUMPTION, "interference powers are not uniform");
    if (worst_seen > tol) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "interference steering vectors are not orthogonal (worst %.3e > tol %.3e)",
                      worst_seen, tol);
        return fail(WLBEAM_ERR_ASSUMPTION, buf);
    }
    return WLBEAM_OK;
}

}  // extern "C"
