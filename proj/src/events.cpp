#include "events.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace rcsskit::events {

namespace {

struct CommandAt {
    PlayerId player;
    TouchKind kind;
};

TouchKind touch_kind_of(rcl::CommandKind k) {
    switch (k) {
    case rcl::CommandKind::tackle: return TouchKind::tackle;
    case rcl::CommandKind::catch_ball: return TouchKind::catch_ball;
    default: return TouchKind::kick;
    }
}

// command range: kickable area for kicks, tackle distance otherwise
double range_of(TouchKind k, const FieldSpec& spec) {
    return k == TouchKind::kick ? spec.kickable_area : spec.tackle_dist;
}

bool closer(const rcg::PlayerSnapshot& a, const rcg::PlayerSnapshot& b, Vec2 ball) {
    double da = dist(a.pos, ball), db = dist(b.pos, ball);
    if (da != db) return da < db;
    return a.id < b.id;  // left side first, then lower unum
}

// first playmode entry strictly after `from` with kind != play_on;
// returns its time or nullopt
std::optional<long> next_stoppage(const rcg::MatchRecord& match, long from, long until) {
    for (const auto& [t, m] : match.playmodes) {
        if (t <= from) continue;
        if (t > until) break;
        if (m.kind != PlayModeKind::play_on) return t;
    }
    return std::nullopt;
}

} // namespace

std::vector<Touch> detect_touches(const rcg::MatchRecord& match, const rcl::CommandLog* cmds,
                                  const FieldSpec& spec, const EventConfig& cfg) {
    std::vector<Touch> touches;
    if (match.frame_count() == 0) return touches;

    // recv kick/tackle/catch commands indexed by cycle
    std::multimap<long, CommandAt> by_time;
    if (cmds) {
        for (const auto& rec : cmds->records) {
            if (rec.direction != rcl::Direction::recv) continue;
            auto k = rec.command.kind;
            if (k != rcl::CommandKind::kick && k != rcl::CommandKind::tackle &&
                k != rcl::CommandKind::catch_ball)
                continue;
            auto id = cmds->player_of(rec);
            if (!id) continue;
            by_time.emplace(rec.time, CommandAt{*id, touch_kind_of(k)});
        }
    }

    for (std::size_t i = 0; i < match.frame_count(); ++i) {
        const rcg::ShowFrame& f = match.frame(i);
        const rcg::ShowFrame* next = i + 1 < match.frame_count() ? &match.frame(i + 1) : nullptr;
        bool consecutive = next && next->time == f.time + 1;

        double residual = 0.0;
        if (consecutive) {
            Vec2 predicted = f.ball.vel * spec.ball_decay;
            residual = (next->ball.vel - predicted).norm();
        }
        bool deviated = consecutive && residual > cfg.epsilon_touch;

        // command evidence first
        const rcg::PlayerSnapshot* best = nullptr;
        TouchKind best_kind = TouchKind::kick;
        auto [lo, hi] = by_time.equal_range(f.time);
        for (auto it = lo; it != hi; ++it) {
            const auto& cand = it->second;
            const rcg::PlayerSnapshot* p = f.player(cand.player);
            if (!p) continue;
            if (dist(p->pos, f.ball.pos) > range_of(cand.kind, spec)) continue;
            if (!best || closer(*p, *best, f.ball.pos)) {
                best = p;
                best_kind = cand.kind;
            }
        }
        if (best) {
            touches.push_back({f.time, best->id, best_kind, f.ball.pos,
                               deviated ? Evidence::both : Evidence::command});
            continue;
        }

        // kinematic evidence: deviation with someone in kickable range
        if (!deviated) continue;
        for (const auto& p : f.players) {
            if (dist(p.pos, f.ball.pos) > spec.kickable_area) continue;
            if (!best || closer(p, *best, f.ball.pos)) best = &p;
        }
        if (best)
            touches.push_back({f.time, best->id, TouchKind::kick, f.ball.pos, Evidence::velocity});
    }
    return touches;
}

std::vector<PassEvent> detect_passes(std::span<const Touch> touches,
                                     const rcg::MatchRecord& match, const EventConfig& cfg,
                                     const std::set<long>& exclude_start_times) {
    std::vector<PassEvent> passes;
    for (std::size_t i = 0; i < touches.size(); ++i) {
        const Touch& kick = touches[i];
        if (kick.kind != TouchKind::kick) continue;
        if (exclude_start_times.contains(kick.time)) continue;

        long window_end = kick.time + cfg.max_pass_window;
        const Touch* closing = nullptr;
        for (std::size_t j = i + 1; j < touches.size(); ++j) {
            if (touches[j].time > window_end) break;
            closing = &touches[j];
            break;
        }
        auto stoppage = next_stoppage(match, kick.time,
                                      closing ? closing->time : window_end);

        PassEvent ev;
        ev.kicker = kick.player;
        ev.start_time = kick.time;
        if (const rcg::ShowFrame* f = match.frame_at(kick.time)) {
            if (const rcg::PlayerSnapshot* p = f->player(kick.player)) ev.kick_pos = p->pos;
            else ev.kick_pos = kick.ball_pos;
        } else {
            ev.kick_pos = kick.ball_pos;
        }

        if (stoppage && (!closing || *stoppage < closing->time)) {
            ev.outcome = PassOutcome::out_of_play;
            ev.end_time = *stoppage;
            passes.push_back(ev);
            continue;
        }
        if (!closing) {
            ev.outcome = PassOutcome::expired;
            ev.end_time = window_end;
            passes.push_back(ev);
            continue;
        }
        if (closing->player == kick.player) continue;  // dribble, not a pass
        ev.receiver = closing->player;
        ev.end_time = closing->time;
        ev.outcome = closing->player.side == kick.player.side ? PassOutcome::completed
                                                              : PassOutcome::intercepted;
        passes.push_back(ev);
    }
    return passes;
}

std::vector<ShotEvent> detect_shots(std::span<const Touch> touches,
                                    const rcg::MatchRecord& match, const FieldSpec& spec,
                                    const EventConfig& cfg) {
    std::vector<ShotEvent> shots;
    const double goal_x = spec.length / 2.0;
    const double band = spec.goal_half_width + cfg.shot_y_tolerance;

    for (std::size_t i = 0; i < touches.size(); ++i) {
        const Touch& kick = touches[i];
        if (kick.kind != TouchKind::kick) continue;
        const rcg::ShowFrame* f = match.frame_at(kick.time);
        const rcg::ShowFrame* next = match.frame_at(kick.time + 1);
        if (!f || !next) continue;

        Vec2 v = next->ball.pos - f->ball.pos;  // post-kick motion over one cycle
        double speed = v.norm();
        if (speed < cfg.shot_min_speed) continue;

        // ray-goal-line crossing
        Side target;
        double line_x;
        if (v.x > 0 && kick.ball_pos.x < goal_x) {
            target = Side::right;
            line_x = goal_x;
        } else if (v.x < 0 && kick.ball_pos.x > -goal_x) {
            target = Side::left;
            line_x = -goal_x;
        } else {
            continue;
        }
        double steps_to_line = (line_x - kick.ball_pos.x) / v.x;
        double y_at_line = kick.ball_pos.y + steps_to_line * v.y;
        if (std::abs(y_at_line) > band) continue;

        ShotEvent ev;
        ev.shooter = kick.player;
        ev.time = kick.time;
        ev.target_goal = target;
        ev.speed = speed;
        if (const rcg::PlayerSnapshot* p = f->player(kick.player)) ev.shot_pos = p->pos;
        else ev.shot_pos = kick.ball_pos;

        // crossing time under ball decay: first n with travel(n) >= distance
        double distance = std::hypot(line_x - kick.ball_pos.x, y_at_line - kick.ball_pos.y);
        double reach = speed / (1.0 - spec.ball_decay);
        long crossing;
        if (distance >= reach) {
            crossing = kick.time + cfg.max_pass_window;  // never arrives; cap the scan
        } else {
            double n = std::log(1.0 - distance * (1.0 - spec.ball_decay) / speed) /
                       std::log(spec.ball_decay);
            crossing = kick.time + static_cast<long>(std::ceil(n));
        }

        // first qualifying event in time order
        auto stoppage_time = [&]() -> std::optional<std::pair<long, PlayMode>> {
            for (const auto& [t, m] : match.playmodes) {
                if (t <= kick.time) continue;
                if (m.kind == PlayModeKind::play_on) continue;
                return std::pair{t, m};
            }
            return std::nullopt;
        }();

        long horizon = crossing + 2;
        if (stoppage_time) horizon = std::min(horizon, stoppage_time->first);

        ev.outcome = ShotOutcome::off_target;
        for (std::size_t j = i + 1; j < touches.size(); ++j) {
            const Touch& t = touches[j];
            if (t.time > horizon) break;
            if (t.player.side == kick.player.side) continue;
            ev.outcome =
                t.kind == TouchKind::catch_ball ? ShotOutcome::saved : ShotOutcome::blocked;
            break;
        }
        if (ev.outcome == ShotOutcome::off_target && stoppage_time &&
            stoppage_time->first <= crossing + 2 &&
            stoppage_time->second.kind == PlayModeKind::goal &&
            stoppage_time->second.side == kick.player.side) {
            ev.outcome = ShotOutcome::goal;
        }
        shots.push_back(ev);
    }
    return shots;
}

void score_tackles_catches(const rcl::CommandLog* cmds, const rcg::MatchRecord& match,
                           const FieldSpec& spec, const EventConfig& cfg,
                           std::vector<TackleRecord>& tackles, std::vector<CatchRecord>& catches) {
    if (!cmds)
        throw Error(ErrorCode::usage, "tackle/catch scoring requires a command log");

    auto deviated_within = [&](long from, long horizon) {
        for (long t = from; t < from + horizon; ++t) {
            const rcg::ShowFrame* f = match.frame_at(t);
            const rcg::ShowFrame* next = match.frame_at(t + 1);
            if (!f || !next) continue;
            Vec2 predicted = f->ball.vel * spec.ball_decay;
            if ((next->ball.vel - predicted).norm() > cfg.epsilon_touch) return true;
        }
        return false;
    };

    for (const auto& rec : cmds->records) {
        if (rec.direction != rcl::Direction::recv) continue;
        auto id = cmds->player_of(rec);
        if (!id) continue;
        const rcg::ShowFrame* f = match.frame_at(rec.time);
        if (!f) continue;

        if (rec.command.kind == rcl::CommandKind::tackle) {
            const rcg::PlayerSnapshot* p = f->player(*id);
            bool in_range = p && dist(p->pos, f->ball.pos) <= spec.tackle_dist;
            bool success = in_range && deviated_within(rec.time, 2);
            tackles.push_back({*id, rec.time, success, f->ball.pos});
        } else if (rec.command.kind == rcl::CommandKind::catch_ball) {
            bool success = false;
            for (const auto& [t, m] : match.playmodes) {
                if (t < rec.time) continue;
                if (t > rec.time + 2) break;
                if ((m.kind == PlayModeKind::goalie_catch_ball ||
                     m.kind == PlayModeKind::free_kick) &&
                    m.side == id->side) {
                    success = true;
                    break;
                }
            }
            catches.push_back({*id, rec.time, success, f->ball.pos});
        }
    }
}

EventLog build_event_log(const rcg::MatchRecord& match, const rcl::CommandLog* cmds,
                         const FieldSpec& spec, const EventConfig& cfg) {
    EventLog log;
    log.touches = detect_touches(match, cmds, spec, cfg);
    log.shots = detect_shots(log.touches, match, spec, cfg);
    std::set<long> shot_times;
    for (const auto& s : log.shots) shot_times.insert(s.time);
    log.passes = detect_passes(log.touches, match, cfg, shot_times);
    if (cmds) {
        score_tackles_catches(cmds, match, spec, cfg, log.tackles, log.catches);
        for (const auto& rec : cmds->records) {
            if (rec.direction != rcl::Direction::recv) continue;
            auto id = cmds->player_of(rec);
            if (!id) continue;
            auto& c = log.commands[*id];
            switch (rec.command.kind) {
            case rcl::CommandKind::kick: ++c.kicks; break;
            case rcl::CommandKind::dash: ++c.dashes; break;
            case rcl::CommandKind::turn: ++c.turns; break;
            case rcl::CommandKind::turn_neck: ++c.turn_necks; break;
            case rcl::CommandKind::say: ++c.says; break;
            default: break;
            }
        }
    }
    return log;
}

} // namespace rcsskit::events
