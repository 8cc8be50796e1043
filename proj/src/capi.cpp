#include "rcsskit/rcsskit.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "analytics.hpp"
#include "corpus.hpp"
#include "error.hpp"
#include "events.hpp"
#include "kalman.hpp"
#include "rcg.hpp"
#include "rcl.hpp"
#include "wmv.hpp"

using namespace rcsskit;

namespace {

thread_local std::string g_last_error = "no error";

rcsskit_status fail(rcsskit_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

rcsskit_status from_exception() {
    try {
        throw;
    } catch (const Error& e) {
        g_last_error = e.what();
        switch (e.code()) {
        case ErrorCode::usage: return RCSSKIT_ERR_USAGE;
        case ErrorCode::parse: return RCSSKIT_ERR_PARSE;
        case ErrorCode::io: return RCSSKIT_ERR_IO;
        default: return RCSSKIT_ERR_INTERNAL;
        }
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RCSSKIT_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return RCSSKIT_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

struct rcsskit_match {
    rcg::MatchRecord record;
};

struct rcsskit_cmdlog {
    rcl::CommandLog log;
};

struct rcsskit_report {
    analytics::MatchReport report;
};

struct rcsskit_filter {
    kalman::FilterConfig config;
    kalman::FilterState state;
};

struct rcsskit_wm {
    wmv::WmSeries series;
};

extern "C" {

const char* rcsskit_version(void) { return "1.0.0"; }

const char* rcsskit_last_error(void) { return g_last_error.c_str(); }

void rcsskit_string_free(char* s) { delete[] s; }

rcsskit_status rcsskit_match_parse(const char* text, size_t len, int strict,
                                   rcsskit_match** out) {
    if (!text || !out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    *out = nullptr;
    try {
        auto m = new rcsskit_match{rcg::parse_rcg({text, len}, {strict != 0})};
        *out = m;
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

void rcsskit_match_free(rcsskit_match* m) { delete m; }

int rcsskit_match_version(const rcsskit_match* m) { return m ? m->record.version : 0; }

long rcsskit_match_frames(const rcsskit_match* m) {
    return m ? static_cast<long>(m->record.frame_count()) : 0;
}

long rcsskit_match_skipped(const rcsskit_match* m) {
    return m ? static_cast<long>(m->record.skipped_lines) : 0;
}

rcsskit_status rcsskit_match_serialize(const rcsskit_match* m, char** out) {
    if (!m || !out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    try {
        *out = dup_string(rcg::serialize_match(m->record));
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

rcsskit_status rcsskit_cmdlog_parse(const char* text, size_t len, int strict,
                                    const rcsskit_match* match, rcsskit_cmdlog** out) {
    if (!text || !out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    *out = nullptr;
    try {
        auto c = std::make_unique<rcsskit_cmdlog>();
        c->log = rcl::parse_rcl({text, len}, {strict != 0});
        if (match) rcl::bind_sides(c->log, match->record);
        *out = c.release();
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

void rcsskit_cmdlog_free(rcsskit_cmdlog* c) { delete c; }

long rcsskit_cmdlog_records(const rcsskit_cmdlog* c) {
    return c ? static_cast<long>(c->log.records.size()) : 0;
}

long rcsskit_cmdlog_skipped(const rcsskit_cmdlog* c) {
    return c ? static_cast<long>(c->log.skipped_lines) : 0;
}

void rcsskit_analyze_params_init(rcsskit_analyze_params* p) {
    if (!p) return;
    events::EventConfig defaults;
    p->epsilon_touch = defaults.epsilon_touch;
    p->max_pass_window = defaults.max_pass_window;
    p->shot_min_speed = defaults.shot_min_speed;
    p->shot_y_tolerance = defaults.shot_y_tolerance;
    p->only_player = nullptr;
}

rcsskit_status rcsskit_analyze(const rcsskit_match* match, const rcsskit_cmdlog* cmdlog,
                               const rcsskit_analyze_params* params,
                               const rcsskit_rect* regions, size_t n_regions,
                               rcsskit_report** out) {
    if (!match || !out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    if (n_regions > 0 && !regions) return fail(RCSSKIT_ERR_USAGE, "null region list");
    *out = nullptr;
    try {
        events::EventConfig cfg;
        std::optional<PlayerId> only;
        if (params) {
            cfg.epsilon_touch = params->epsilon_touch;
            cfg.max_pass_window = params->max_pass_window;
            cfg.shot_min_speed = params->shot_min_speed;
            cfg.shot_y_tolerance = params->shot_y_tolerance;
            if (params->only_player) {
                only = parse_player_id(params->only_player);
                if (!only)
                    return fail(RCSSKIT_ERR_USAGE,
                                std::string("bad player id '") + params->only_player + "'");
            }
        }
        std::vector<Region> regs;
        for (size_t i = 0; i < n_regions; ++i) {
            Region r{{regions[i].x1, regions[i].y1}, {regions[i].x2, regions[i].y2}};
            if (!r.valid())
                return fail(RCSSKIT_ERR_USAGE,
                            "invalid region " + std::to_string(i) + " (min must be <= max)");
            regs.push_back(r);
        }
        FieldSpec spec = rcg::field_spec_from(match->record);
        events::EventLog log =
            events::build_event_log(match->record, cmdlog ? &cmdlog->log : nullptr, spec, cfg);
        auto rep = new rcsskit_report{analytics::build_report(
            match->record, log, regs, only,
            cmdlog ? static_cast<long>(cmdlog->log.skipped_lines) : 0)};
        *out = rep;
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

void rcsskit_report_free(rcsskit_report* r) { delete r; }

rcsskit_status rcsskit_report_render(const rcsskit_report* r, const char* format, char** out) {
    if (!r || !format || !out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    try {
        std::string f = format;
        if (f == "json") *out = dup_string(analytics::render_json(r->report));
        else if (f == "text") *out = dup_string(analytics::render_text(r->report));
        else return fail(RCSSKIT_ERR_USAGE, "unknown report format '" + f + "'");
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

void rcsskit_filter_params_init(rcsskit_filter_params* p) {
    if (!p) return;
    kalman::FilterConfig d;
    p->dt = d.dt;
    p->sigma_a = d.sigma_a;
    p->sigma_z = d.sigma_z;
    p->initial_cov = d.initial_cov;
}

namespace {

kalman::FilterConfig to_config(const rcsskit_filter_params* p) {
    kalman::FilterConfig c;
    if (p) {
        c.dt = p->dt;
        c.sigma_a = p->sigma_a;
        c.sigma_z = p->sigma_z;
        c.initial_cov = p->initial_cov;
    }
    return c;
}

} // namespace

rcsskit_status rcsskit_filter_new(const rcsskit_filter_params* params, double init_x,
                                  double init_y, rcsskit_filter** out) {
    if (!out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    *out = nullptr;
    kalman::FilterConfig c = to_config(params);
    if (!c.valid()) return fail(RCSSKIT_ERR_USAGE, "invalid filter parameters");
    auto f = new rcsskit_filter{c, kalman::FilterState::init({init_x, init_y}, c)};
    *out = f;
    return RCSSKIT_OK;
}

void rcsskit_filter_free(rcsskit_filter* f) { delete f; }

rcsskit_status rcsskit_filter_step(rcsskit_filter* f, const double* obs_xy, double* est_xy,
                                   double* gamma) {
    if (!f) return fail(RCSSKIT_ERR_USAGE, "null filter");
    try {
        std::optional<Vec2> obs;
        if (obs_xy) obs = Vec2{obs_xy[0], obs_xy[1]};
        f->state = kalman::step(f->state, obs, f->config);
        if (est_xy) {
            est_xy[0] = f->state.x.mean(0);
            est_xy[1] = f->state.y.mean(0);
        }
        if (gamma) *gamma = f->state.gamma();
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

rcsskit_status rcsskit_steady_state_gain(const rcsskit_filter_params* params, double* out) {
    if (!out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    try {
        kalman::FilterConfig c = to_config(params);
        if (!c.valid()) return fail(RCSSKIT_ERR_USAGE, "invalid filter parameters");
        *out = kalman::steady_state_gain(c);
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

void rcsskit_sim_params_init(rcsskit_sim_params* p) {
    if (!p) return;
    kalman::SimParams d;
    p->cycles = d.cycles;
    p->seed = d.seed;
    p->segment_len = d.segment_len;
    p->accel_mag = d.accel_mag;
    p->dropout = d.dropout;
}

rcsskit_status rcsskit_kalman_sim(const rcsskit_filter_params* fp, const rcsskit_sim_params* sp,
                                  char** csv_out, rcsskit_sim_summary* summary) {
    try {
        kalman::FilterConfig c = to_config(fp);
        kalman::SimParams p;
        if (sp) {
            p.cycles = sp->cycles;
            p.seed = sp->seed;
            p.segment_len = sp->segment_len;
            p.accel_mag = sp->accel_mag;
            p.dropout = sp->dropout;
        }
        auto samples = kalman::simulate(c, p);
        kalman::SimSummary s = kalman::attach_estimates(samples, c);
        if (csv_out) *csv_out = dup_string(kalman::to_csv(samples));
        if (summary) {
            summary->rmse_observed = s.rmse_observed;
            summary->rmse_estimated = s.rmse_estimated;
            summary->final_gamma = s.final_gamma;
            summary->steady_gain = s.steady_gain;
        }
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

rcsskit_status rcsskit_wm_parse(const char* text, size_t len, int strict, rcsskit_wm** out) {
    if (!text || !out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    *out = nullptr;
    try {
        auto w = new rcsskit_wm{wmv::parse_wm_dump({text, len}, {strict != 0})};
        *out = w;
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

void rcsskit_wm_free(rcsskit_wm* w) { delete w; }

rcsskit_status rcsskit_wm_owner(const rcsskit_wm* w, char* side, int* unum) {
    if (!w) return fail(RCSSKIT_ERR_USAGE, "null argument");
    if (side) *side = side_char(w->series.owner.side);
    if (unum) *unum = w->series.owner.unum;
    return RCSSKIT_OK;
}

rcsskit_status rcsskit_wm_to_rcg(const rcsskit_wm* w, const rcsskit_match* truth,
                                 rcsskit_fill_policy policy, char** rcg_out) {
    if (!w || !rcg_out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    try {
        wmv::FillPolicy fp = policy == RCSSKIT_FILL_REAL ? wmv::FillPolicy::real
                             : policy == RCSSKIT_FILL_HOLD ? wmv::FillPolicy::hold
                                                           : wmv::FillPolicy::skip;
        long from = 0, to = 0;
        if (truth && truth->record.frame_count() > 0) {
            from = truth->record.frame(0).time;
            to = truth->record.frame(truth->record.frame_count() - 1).time;
        } else if (!w->series.cycles.empty()) {
            from = w->series.cycles.front().time;
            to = w->series.cycles.back().time;
        }
        wmv::WmSeries dense =
            wmv::fill_missing(w->series, truth ? &truth->record : nullptr, fp, from, to);
        *rcg_out = dup_string(wmv::emit_rcg(dense, truth ? &truth->record : nullptr));
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

rcsskit_status rcsskit_wm_diff(const rcsskit_wm* w, const rcsskit_match* truth,
                               char** csv_out) {
    if (!w || !truth || !csv_out) return fail(RCSSKIT_ERR_USAGE, "null argument");
    try {
        auto rows = wmv::diff_vs_truth(w->series, truth->record);
        *csv_out = dup_string(wmv::diff_csv(rows));
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

rcsskit_status rcsskit_generate(const char* script_json, size_t len, char** rcg_out,
                                char** rcl_out, char** labels_out) {
    if (!script_json) return fail(RCSSKIT_ERR_USAGE, "null script");
    try {
        corpus::Script script = corpus::parse_script_json({script_json, len});
        corpus::GeneratedMatch m = corpus::generate_match(script);
        if (rcg_out) *rcg_out = dup_string(m.rcg);
        if (rcl_out) *rcl_out = dup_string(m.rcl);
        if (labels_out) *labels_out = dup_string(m.labels_json);
        return RCSSKIT_OK;
    } catch (...) {
        return from_exception();
    }
}

} // extern "C"
