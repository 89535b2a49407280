#ifndef WLBEAM_H
#define WLBEAM_H

/*
 * C interface to the widely linear MVDR beamforming analysis library.
 *
 * All entry points return a wlbeam_status; 0 means success. On failure the
 * thread-local message from wlbeam_last_error() describes what went wrong.
 * Objects are opaque handles created and destroyed through this interface.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wlbeam_status {
    WLBEAM_OK = 0,
    WLBEAM_ERR_INVALID_ARGUMENT = 1, /* bad pointer, unknown name, config error */
    WLBEAM_ERR_DOMAIN = 2,           /* value outside the mathematical domain */
    WLBEAM_ERR_SINGULAR = 3,         /* singular or degenerate statistics */
    WLBEAM_ERR_ASSUMPTION = 4,       /* scenario violates the theory assumptions */
    WLBEAM_ERR_IO = 5,               /* file read/write failure */
    WLBEAM_ERR_INTERNAL = 6          /* unexpected failure */
} wlbeam_status;

/* Last error message for the calling thread; never NULL. */
const char* wlbeam_last_error(void);

const char* wlbeam_version(void);

/* ------------------------------------------------------------------ */
/* Configuration                                                       */

typedef struct wlbeam_config wlbeam_config;

wlbeam_status wlbeam_config_preset(const char* name, wlbeam_config** out);
wlbeam_status wlbeam_config_parse(const char* text, wlbeam_config** out);
wlbeam_status wlbeam_config_load(const char* path, wlbeam_config** out);
void wlbeam_config_free(wlbeam_config* cfg);

/* Serialize back to config text. The returned string lives until the next
 * call that returns a string on this config, or until the config is freed. */
wlbeam_status wlbeam_config_dump(wlbeam_config* cfg, const char** out_text);

wlbeam_status wlbeam_config_set_seed(wlbeam_config* cfg, uint64_t seed);
wlbeam_status wlbeam_config_set_trials(wlbeam_config* cfg, size_t trials);
wlbeam_status wlbeam_config_set_snapshots(wlbeam_config* cfg, size_t snapshots);
wlbeam_status wlbeam_config_set_snap_doas(wlbeam_config* cfg, int enable);
wlbeam_status wlbeam_config_set_soi_doa(wlbeam_config* cfg, double doa_deg);
wlbeam_status wlbeam_config_set_use_data_stats(wlbeam_config* cfg, int enable);

/* Comma-separated preset names; static storage. */
const char* wlbeam_preset_names(void);

/* ------------------------------------------------------------------ */
/* Runs and results                                                    */

typedef struct wlbeam_results wlbeam_results;

wlbeam_status wlbeam_run_theory(const wlbeam_config* cfg, wlbeam_results** out);
wlbeam_status wlbeam_run_simulation(const wlbeam_config* cfg, wlbeam_results** out);
void wlbeam_results_free(wlbeam_results* res);

typedef struct wlbeam_row {
    double sweep_value;
    const char* source;   /* "theory-exact", "theory-approx", "simulated" */
    double g_db;
    double g_i_db;        /* NaN when undefined */
    double g_q_db;        /* NaN when undefined */
    double lambda_i;      /* NaN when undefined */
    double lambda_q;      /* NaN when undefined */
    double sinr_mvdr_db;
    double sinr_capon_db;
    size_t trials;
    size_t snapshots;
} wlbeam_row;

size_t wlbeam_results_size(const wlbeam_results* res);
wlbeam_status wlbeam_results_row(const wlbeam_results* res, size_t index, wlbeam_row* out);

/* format: "csv" or "plot". */
wlbeam_status wlbeam_results_write(const wlbeam_results* res, const char* path,
                                   const char* format);

typedef struct wlbeam_compare_report {
    size_t points_compared;
    double max_g_db;
    double max_g_i_db;
    double max_g_q_db;
    double max_sinr_mvdr_db;
    double max_sinr_capon_db;
} wlbeam_compare_report;

wlbeam_status wlbeam_compare(const wlbeam_results* theory, const wlbeam_results* simulation,
                             wlbeam_compare_report* out);

/* Validate a config and check the theory assumptions at every sweep point.
 * Writes the worst normalized interference inner product to *worst (may be
 * NULL). Returns WLBEAM_ERR_ASSUMPTION when they do not hold within tol. */
wlbeam_status wlbeam_check(const wlbeam_config* cfg, double tol, double* worst);

#ifdef __cplusplus
}
#endif

#endif /* WLBEAM_H */
