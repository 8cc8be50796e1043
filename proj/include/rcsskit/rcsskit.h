/* rcsskit - RoboCup 2D soccer simulation log toolkit.
 *
 * C interface of the shared library: opaque handles plus status codes.
 * Every function returns RCSSKIT_OK (0) on success; on failure it returns
 * a nonzero status and rcsskit_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap-allocated and
 * must be released with rcsskit_string_free().
 */
#ifndef RCSSKIT_H
#define RCSSKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcsskit_status {
    RCSSKIT_OK = 0,
    RCSSKIT_ERR_USAGE = 1,    /* bad arguments or unusable input */
    RCSSKIT_ERR_PARSE = 2,    /* malformed log data (strict mode) */
    RCSSKIT_ERR_IO = 3,       /* reserved for callers mapping file errors */
    RCSSKIT_ERR_INTERNAL = 4  /* invariant violation inside the library */
} rcsskit_status;

const char* rcsskit_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* rcsskit_last_error(void);

void rcsskit_string_free(char* s);

/* ---- parsed logs ---------------------------------------------------- */

typedef struct rcsskit_match rcsskit_match;
typedef struct rcsskit_cmdlog rcsskit_cmdlog;

rcsskit_status rcsskit_match_parse(const char* text, size_t len, int strict,
                                   rcsskit_match** out);
void rcsskit_match_free(rcsskit_match* m);

int rcsskit_match_version(const rcsskit_match* m);
long rcsskit_match_frames(const rcsskit_match* m);
long rcsskit_match_skipped(const rcsskit_match* m);

/* Serializes the parsed match back to rcg text. */
rcsskit_status rcsskit_match_serialize(const rcsskit_match* m, char** out);

/* Parses an rcl command log and resolves team names against the match. */
rcsskit_status rcsskit_cmdlog_parse(const char* text, size_t len, int strict,
                                    const rcsskit_match* match, rcsskit_cmdlog** out);
void rcsskit_cmdlog_free(rcsskit_cmdlog* c);
long rcsskit_cmdlog_records(const rcsskit_cmdlog* c);
long rcsskit_cmdlog_skipped(const rcsskit_cmdlog* c);

/* ---- analysis ------------------------------------------------------- */

typedef struct rcsskit_report rcsskit_report;

typedef struct rcsskit_rect {
    double x1, y1, x2, y2;
} rcsskit_rect;

typedef struct rcsskit_analyze_params {
    double epsilon_touch;    /* velocity residual threshold, default 0.05 */
    long max_pass_window;    /* cycles, default 40 */
    double shot_min_speed;   /* m/cycle, default 1.5 */
    double shot_y_tolerance; /* m, default 1.0 */
    const char* only_player; /* "l7" filter or NULL */
} rcsskit_analyze_params;

void rcsskit_analyze_params_init(rcsskit_analyze_params* p);

/* Runs event inference and aggregation. cmdlog may be NULL (tackle and
 * catch scoring then stay empty). regions may be NULL when n_regions is 0. */
rcsskit_status rcsskit_analyze(const rcsskit_match* match, const rcsskit_cmdlog* cmdlog,
                               const rcsskit_analyze_params* params,
                               const rcsskit_rect* regions, size_t n_regions,
                               rcsskit_report** out);
void rcsskit_report_free(rcsskit_report* r);

/* format: "json" or "text". */
rcsskit_status rcsskit_report_render(const rcsskit_report* r, const char* format, char** out);

/* ---- localization filter -------------------------------------------- */

typedef struct rcsskit_filter_params {
    double dt;          /* default 1.0 */
    double sigma_a;     /* process-noise accel std, default 0.05 */
    double sigma_z;     /* measurement std, default 0.3 */
    double initial_cov; /* diffuse prior scale, default 100.0 */
} rcsskit_filter_params;

void rcsskit_filter_params_init(rcsskit_filter_params* p);

typedef struct rcsskit_filter rcsskit_filter;

rcsskit_status rcsskit_filter_new(const rcsskit_filter_params* params, double init_x,
                                  double init_y, rcsskit_filter** out);
void rcsskit_filter_free(rcsskit_filter* f);

/* One predict(+update) cycle. obs_xy: pointer to {x,y} or NULL for a
 * missing measurement. est_xy (out, may be NULL): posterior position.
 * gamma (out, may be NULL): mean position gain of the two axes. */
rcsskit_status rcsskit_filter_step(rcsskit_filter* f, const double* obs_xy, double* est_xy,
                                   double* gamma);

rcsskit_status rcsskit_steady_state_gain(const rcsskit_filter_params* params, double* out);

typedef struct rcsskit_sim_params {
    long cycles;       /* default 1000 */
    uint64_t seed;     /* default 0 */
    long segment_len;  /* default 50 */
    double accel_mag;  /* default 0.05 */
    double dropout;    /* default 0.0 */
} rcsskit_sim_params;

void rcsskit_sim_params_init(rcsskit_sim_params* p);

typedef struct rcsskit_sim_summary {
    double rmse_observed;
    double rmse_estimated;
    double final_gamma;
    double steady_gain;
} rcsskit_sim_summary;

/* Synthetic trajectory + filter run; csv_out gets the full series
 * (time,truth_x,truth_y,obs_x,obs_y,est_x,est_y,gamma). */
rcsskit_status rcsskit_kalman_sim(const rcsskit_filter_params* fp,
                                  const rcsskit_sim_params* sp, char** csv_out,
                                  rcsskit_sim_summary* summary);

/* ---- world-model dumps ---------------------------------------------- */

typedef struct rcsskit_wm rcsskit_wm;

typedef enum rcsskit_fill_policy {
    RCSSKIT_FILL_REAL = 0,
    RCSSKIT_FILL_HOLD = 1,
    RCSSKIT_FILL_SKIP = 2
} rcsskit_fill_policy;

rcsskit_status rcsskit_wm_parse(const char* text, size_t len, int strict, rcsskit_wm** out);
void rcsskit_wm_free(rcsskit_wm* w);

/* Owner identity as side char ('l'/'r') and uniform number. */
rcsskit_status rcsskit_wm_owner(const rcsskit_wm* w, char* side, int* unum);

/* Converts the dump to replayable rcg text. truth is required for
 * RCSSKIT_FILL_REAL and, when present, supplies the horizon and the
 * playmode/team lines. */
rcsskit_status rcsskit_wm_to_rcg(const rcsskit_wm* w, const rcsskit_match* truth,
                                 rcsskit_fill_policy policy, char** rcg_out);

/* Belief-vs-truth error table as CSV (time,object,err_pos,err_vel,flag). */
rcsskit_status rcsskit_wm_diff(const rcsskit_wm* w, const rcsskit_match* truth,
                               char** csv_out);

/* ---- synthetic corpus ------------------------------------------------ */

/* script_json describes the labeled events; outputs are rcg text, rcl
 * text and the labels JSON. Any output pointer may be NULL. */
rcsskit_status rcsskit_generate(const char* script_json, size_t len, char** rcg_out,
                                char** rcl_out, char** labels_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RCSSKIT_H */
