#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include <json.hpp>

#include "error.hpp"
#include "playmode.hpp"
#include "rcg.hpp"

namespace rcsskit::corpus {

using nlohmann::json;

namespace {

constexpr double kDecay = 0.94;
constexpr const char* kTeamLeft = "SYNTHA";
constexpr const char* kTeamRight = "SYNTHB";

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(uniform01(rng) * static_cast<double>(hi - lo + 1));
}

[[noreturn]] void unrealizable(std::size_t index, const std::string& why) {
    throw Error(ErrorCode::usage,
                "unrealizable script at event " + std::to_string(index) + ": " + why);
}

// roll distance of a ball kicked at speed w after n cycles of decay
double travelled(double w, long n) { return w * (1.0 - std::pow(kDecay, n)) / (1.0 - kDecay); }

struct MotionOp {
    enum class Kind { kick, place } kind = Kind::kick;
    Vec2 value;  // kick: ball motion over the next cycle; place: new position, velocity zeroed
};

struct Placement {
    long from = 0;
    long to = 0;
    Vec2 pos;
};

struct Command {
    long time = 0;
    PlayerId player;
    std::string text;
    int counter = 0;  // index into the (c ...) array
};

struct Build {
    const Script& script;
    std::mt19937_64 rng;
    std::map<long, MotionOp> ops;
    std::vector<std::pair<long, PlayMode>> playmodes;
    std::vector<std::pair<long, std::pair<int, int>>> team_updates;
    std::map<PlayerId, std::vector<Placement>> placements;
    std::vector<Command> commands;

    long cur_t = 0;  // ball state below is authoritative at this cycle
    Vec2 pos;
    Vec2 vel;
    PlayModeKind mode = PlayModeKind::before_kick_off;
    int score_left = 0, score_right = 0;

    explicit Build(const Script& s) : script(s), rng(s.seed) {}

    void roll_to(long t) {
        while (cur_t < t) {
            auto it = ops.find(cur_t);
            if (it != ops.end() && it->second.kind == MotionOp::Kind::kick) {
                pos = pos + it->second.value;
                vel = it->second.value * kDecay;
            } else {
                pos = pos + vel;
                vel = vel * kDecay;
            }
            ++cur_t;
            it = ops.find(cur_t);
            if (it != ops.end() && it->second.kind == MotionOp::Kind::place) {
                pos = it->second.value;
                vel = {0, 0};
            }
        }
    }

    void kick_at(long t, Vec2 motion) { ops[t] = {MotionOp::Kind::kick, motion}; }

    void place_at(long t, Vec2 p) {
        ops[t] = {MotionOp::Kind::place, p};
        if (t == cur_t) {
            pos = p;
            vel = {0, 0};
        }
    }

    void set_mode(long t, PlayModeKind kind, Side side) {
        playmodes.emplace_back(t, PlayMode{kind, side, {}});
        mode = kind;
    }

    void ensure_play_on(long t) {
        if (mode != PlayModeKind::play_on) set_mode(t, PlayModeKind::play_on, Side::neutral);
    }

    void place(PlayerId id, long from, long to, Vec2 p) {
        placements[id].push_back({from, to, p});
    }

    void command(long t, PlayerId id, std::string text, int counter) {
        commands.push_back({t, id, std::move(text), counter});
    }
};

Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

// point at the given distance from p inside the box |x|<=xmax, |y|<=ymax
Vec2 sample_target(std::mt19937_64& rng, Vec2 p, double distance, double xmax, double ymax,
                   std::size_t index) {
    for (int tries = 0; tries < 200; ++tries) {
        Vec2 q = p + unit(uniform(rng, 0.0, 2.0 * M_PI)) * distance;
        if (std::abs(q.x) <= xmax && std::abs(q.y) <= ymax) return q;
    }
    unrealizable(index, "no in-field target from (" + std::to_string(p.x) + "," +
                            std::to_string(p.y) + ")");
}

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// counter indices in the (c ...) clause
constexpr int kKick = 0, kDash = 1, kTurn = 2, kCatch = 3, kTurnNeck = 5, kSay = 7, kTackle = 8;

const char* kind_name(EventKind k) {
    switch (k) {
    case EventKind::pass: return "pass";
    case EventKind::shot: return "shot";
    case EventKind::tackle: return "tackle";
    default: return "catch";
    }
}

EventKind kind_of(const std::string& s) {
    if (s == "pass") return EventKind::pass;
    if (s == "shot") return EventKind::shot;
    if (s == "tackle") return EventKind::tackle;
    if (s == "catch") return EventKind::catch_ball;
    throw Error(ErrorCode::parse, "unknown event kind '" + s + "'");
}

// Each realize_* lays out one event and returns the first cycle at which
// the ball is settled again; the next event may not start earlier.

long realize_pass(Build& b, std::size_t i) {
    const ScriptedEvent& ev = b.script.events[i];
    const long T = ev.time;
    b.roll_to(T);
    b.ensure_play_on(T);
    const Vec2 p0 = b.pos;

    auto kicker_cmd = [&] {
        b.command(T, ev.actor, "(kick " + fmt_num(uniform(b.rng, 40, 100)) + " " +
                                   fmt_num(uniform(b.rng, -180, 180)) + ")",
                  kKick);
    };

    if (ev.outcome == "completed" || ev.outcome == "intercepted") {
        if (!ev.receiver) unrealizable(i, "pass needs a receiver");
        if (ev.outcome == "completed" && ev.receiver->side != ev.actor.side)
            unrealizable(i, "completed pass receiver must be a teammate");
        if (ev.outcome == "intercepted" && ev.receiver->side == ev.actor.side)
            unrealizable(i, "intercepted pass receiver must be an opponent");
        if (*ev.receiver == ev.actor) unrealizable(i, "pass to self");

        long n = uniform_int(b.rng, 6, 14);
        double geom = (1.0 - std::pow(kDecay, n)) / (1.0 - kDecay);
        double d = uniform(b.rng, 0.55 * geom, 1.40 * geom);
        Vec2 target = sample_target(b.rng, p0, d, 38.0, 22.0, i);
        Vec2 dir = (target - p0) * (1.0 / d);
        double w0 = d / geom;  // arrives in exactly n cycles
        b.kick_at(T, dir * w0);
        b.place(ev.actor, T - 2, T + 2, p0 - dir * 0.6);
        kicker_cmd();

        long arrival = T + n;
        b.place(*ev.receiver, arrival, arrival + 4, target);
        b.kick_at(arrival, Vec2{0, 0});  // trap: ball dead on the spot

        // a kick reception chains into the receiver's own next pass (the
        // later kick cancels the candidate); otherwise stop with a tackle
        bool chain = false;
        if (i + 1 < b.script.events.size()) {
            const ScriptedEvent& next = b.script.events[i + 1];
            chain = next.kind == EventKind::pass && next.actor == *ev.receiver &&
                    next.time - arrival >= 1 && next.time - arrival <= 38;
        }
        if (chain)
            b.command(arrival, *ev.receiver, "(kick 20 0)", kKick);
        else
            b.command(arrival, *ev.receiver,
                      "(tackle " + fmt_num(uniform(b.rng, 40, 90)) + ")", kTackle);
        return arrival + 1;
    }

    if (ev.outcome == "out_of_play" || ev.outcome == "expired") {
        double d = uniform(b.rng, 8.0, 18.0);
        Vec2 rest = sample_target(b.rng, p0, d, 40.0, 24.0, i);
        Vec2 dir = (rest - p0) * (1.0 / d);
        b.kick_at(T, (rest - p0) * (1.0 - kDecay));  // comes to rest exactly at `rest`
        b.place(ev.actor, T - 2, T + 2, p0 - dir * 0.6);
        kicker_cmd();
        if (ev.outcome == "out_of_play") {
            long whistle = T + uniform_int(b.rng, 4, 8);
            b.roll_to(whistle);
            b.place_at(whistle, b.pos);  // referee stops play, ball dead
            b.set_mode(whistle, PlayModeKind::foul_charge, opposite(ev.actor.side));
            return whistle + 1;
        }
        return T + 41;  // candidate expires at T + 40
    }
    unrealizable(i, "unknown pass outcome '" + ev.outcome + "'");
}

long realize_shot(Build& b, std::size_t i) {
    const ScriptedEvent& ev = b.script.events[i];
    const long T = ev.time;
    const Side att = ev.actor.side;
    const double line_x = att == Side::left ? 52.5 : -52.5;

    // teleport into the shooting zone via a free kick when needed
    b.roll_to(T - 3);
    Vec2 at_kick = [&] {
        Vec2 p = b.pos, v = b.vel;
        for (long c = b.cur_t; c < T; ++c) {
            p = p + v;
            v = v * kDecay;
        }
        return p;
    }();
    double zx = att == Side::left ? at_kick.x : -at_kick.x;
    bool in_zone = zx >= 34.0 && zx <= 45.5 && std::abs(at_kick.y) <= 9.0;
    if (!in_zone) {
        double sx = uniform(b.rng, 38.0, 45.0);
        Vec2 spot{att == Side::left ? sx : -sx, uniform(b.rng, -7.0, 7.0)};
        b.place_at(T - 3, spot);
        b.set_mode(T - 3, PlayModeKind::free_kick, att);
    }
    b.roll_to(T);
    b.ensure_play_on(T);
    const Vec2 p0 = b.pos;

    double y_line;
    if (ev.outcome == "off_target") {
        double sgn = uniform01(b.rng) < 0.5 ? -1.0 : 1.0;
        y_line = sgn * uniform(b.rng, 7.35, 7.8);
    } else {
        y_line = uniform(b.rng, -5.5, 5.5);
    }
    Vec2 target{line_x, y_line};
    double d = dist(p0, target);
    double w0 = std::max(1.7, d * (1.0 - kDecay) / 0.60);  // cross within ~15 cycles
    if (w0 > 2.8) unrealizable(i, "shot distance " + fmt_num(d) + " needs speed > 2.8");
    Vec2 dir = (target - p0) * (1.0 / d);
    b.kick_at(T, dir * w0);
    long crossing = 1;
    while (travelled(w0, crossing) < d && crossing < 60) ++crossing;
    crossing += T;

    b.place(ev.actor, T - 2, T + 2, p0 - dir * 0.6);
    b.command(T, ev.actor, "(kick 100 " + fmt_num(uniform(b.rng, -20, 20)) + ")", kKick);

    if (ev.outcome == "goal") {
        b.roll_to(crossing);
        b.place_at(crossing, b.pos);  // dead behind the line
        b.set_mode(crossing, PlayModeKind::goal, att);
        if (att == Side::left) ++b.score_left;
        else ++b.score_right;
        b.team_updates.emplace_back(crossing, std::pair{b.score_left, b.score_right});
        b.place_at(crossing + 2, Vec2{0, 0});  // kickoff spot
        b.set_mode(crossing + 2, PlayModeKind::kick_off, opposite(att));
        b.roll_to(crossing + 2);
        return crossing + 3;
    }
    if (ev.outcome == "saved") {
        long a = std::max(T + 2, crossing - 1);
        PlayerId keeper{opposite(att), 1};
        b.roll_to(a);
        b.place(keeper, a - 1, a + 6, b.pos);
        b.kick_at(a, Vec2{0, 0});  // held ball
        b.command(a, keeper, "(catch " + fmt_num(uniform(b.rng, -45, 45)) + ")", kCatch);
        b.set_mode(a + 1, PlayModeKind::goalie_catch_ball, opposite(att));
        return a + 2;
    }
    if (ev.outcome == "blocked") {
        long a = std::max(T + 2, crossing - 2);
        PlayerId blocker{opposite(att), static_cast<int>(uniform_int(b.rng, 2, 11))};
        if (ev.receiver) blocker = *ev.receiver;
        b.roll_to(a);
        Vec2 here = b.pos;
        double d2 = uniform(b.rng, 8.0, 18.0);
        Vec2 rest = sample_target(b.rng, here, d2, 30.0, 20.0, i);
        Vec2 dir2 = (rest - here) * (1.0 / d2);
        b.place(blocker, a - 1, a + 6, here - dir2 * 0.5);
        b.kick_at(a, (rest - here) * (1.0 - kDecay));
        b.command(a, blocker, "(tackle " + fmt_num(uniform(b.rng, 40, 90)) + ")", kTackle);
        return a + 1;
    }
    if (ev.outcome == "off_target") {
        b.roll_to(crossing);
        b.place_at(crossing, b.pos);
        b.set_mode(crossing, PlayModeKind::goal_kick, opposite(att));
        Vec2 spot{att == Side::left ? 43.0 : -43.0, y_line > 0 ? 9.0 : -9.0};
        b.place_at(crossing + 2, spot);
        b.roll_to(crossing + 2);
        return crossing + 3;
    }
    unrealizable(i, "unknown shot outcome '" + ev.outcome + "'");
}

long realize_tackle(Build& b, std::size_t i) {
    const ScriptedEvent& ev = b.script.events[i];
    const long T = ev.time;
    b.roll_to(T);
    b.ensure_play_on(T);
    const Vec2 p0 = b.pos;

    bool success = ev.outcome == "success";
    if (!success && ev.outcome != "failure")
        unrealizable(i, "unknown tackle outcome '" + ev.outcome + "'");

    if (success) {
        double d = uniform(b.rng, 8.0, 18.0);
        Vec2 rest = sample_target(b.rng, p0, d, 40.0, 24.0, i);
        Vec2 dir = (rest - p0) * (1.0 / d);
        b.place(ev.actor, T - 1, T + 4, p0 - dir * 1.5);  // behind the redirect
        b.kick_at(T, (rest - p0) * (1.0 - kDecay));
    } else {
        // half the failures are whiffs in range, half are out of range
        double off = uniform01(b.rng) < 0.5 ? 1.6 : 3.0;
        b.place(ev.actor, T - 1, T + 4, p0 + Vec2{off, 0.0});
    }
    b.command(T, ev.actor, "(tackle " + fmt_num(uniform(b.rng, 40, 90)) + ")", kTackle);
    return T + 3;
}

long realize_catch(Build& b, std::size_t i) {
    const ScriptedEvent& ev = b.script.events[i];
    const long T = ev.time;
    b.roll_to(T);
    b.ensure_play_on(T);

    bool success = ev.outcome == "success";
    if (!success && ev.outcome != "failure")
        unrealizable(i, "unknown catch outcome '" + ev.outcome + "'");

    b.place(ev.actor, T - 1, T + 6, b.pos + Vec2{0.8, 0.0});
    b.command(T, ev.actor, "(catch " + fmt_num(uniform(b.rng, -45, 45)) + ")", kCatch);
    if (success) {
        b.kick_at(T, Vec2{0, 0});  // held
        b.set_mode(T + 1, PlayModeKind::goalie_catch_ball, ev.actor.side);
        return T + 2;
    }
    return T + 3;
}

} // namespace

Script parse_script_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, std::string("bad script json: ") + e.what());
    }
    Script s;
    try {
        s.cycles = doc.at("cycles").get<long>();
        s.seed = doc.value("seed", 0ULL);
        for (const json& je : doc.at("events")) {
            ScriptedEvent ev;
            ev.kind = kind_of(je.at("kind").get<std::string>());
            ev.time = je.at("time").get<long>();
            auto actor = parse_player_id(je.at("actor").get<std::string>());
            if (!actor) throw Error(ErrorCode::parse, "bad actor id");
            ev.actor = *actor;
            if (je.contains("receiver") && !je.at("receiver").is_null()) {
                auto recv = parse_player_id(je.at("receiver").get<std::string>());
                if (!recv) throw Error(ErrorCode::parse, "bad receiver id");
                ev.receiver = *recv;
            }
            ev.outcome = je.at("outcome").get<std::string>();
            s.events.push_back(ev);
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, std::string("bad script json: ") + e.what());
    }
    return s;
}

std::string script_to_json(const Script& script) {
    json events = json::array();
    for (const auto& ev : script.events)
        events.push_back(json{{"kind", kind_name(ev.kind)},
                              {"time", ev.time},
                              {"actor", to_string(ev.actor)},
                              {"receiver", ev.receiver ? json(to_string(*ev.receiver)) : json()},
                              {"outcome", ev.outcome}});
    return json{{"cycles", script.cycles}, {"seed", script.seed}, {"events", events}}.dump(2) +
           "\n";
}

GeneratedMatch generate_match(const Script& script) {
    if (script.cycles < 20) throw Error(ErrorCode::usage, "script needs at least 20 cycles");
    for (std::size_t i = 0; i < script.events.size(); ++i) {
        const auto& ev = script.events[i];
        if (ev.actor.unum < 1 || ev.actor.unum > 11) unrealizable(i, "bad actor unum");
        if (ev.time < 10) unrealizable(i, "event before cycle 10");
        if (i > 0 && ev.time <= script.events[i - 1].time)
            unrealizable(i, "event times must be strictly increasing");
    }

    Build b(script);
    b.set_mode(0, PlayModeKind::before_kick_off, Side::neutral);
    b.set_mode(1, PlayModeKind::kick_off, Side::left);

    long settled = 2;
    for (std::size_t i = 0; i < script.events.size(); ++i) {
        const ScriptedEvent& ev = script.events[i];
        long lead = ev.kind == EventKind::shot ? 3 : 0;  // shots may teleport at T-3
        if (ev.time - lead < settled)
            unrealizable(i, "event overlaps the previous one (ball settles at cycle " +
                                std::to_string(settled) + ")");
        if (i > 0 && script.events[i - 1].kind == EventKind::pass &&
            script.events[i - 1].outcome == "expired" &&
            ev.time - lead <= script.events[i - 1].time + 44)
            unrealizable(i, "previous expired pass needs a clear window of 44 cycles");
        switch (ev.kind) {
        case EventKind::pass: settled = realize_pass(b, i); break;
        case EventKind::shot: settled = realize_shot(b, i); break;
        case EventKind::tackle: settled = realize_tackle(b, i); break;
        case EventKind::catch_ball: settled = realize_catch(b, i); break;
        }
        if (settled >= script.cycles - 2)
            unrealizable(i, "event resolution passes the end of the match");
    }

    // ---- emission ----------------------------------------------------
    std::stable_sort(b.playmodes.begin(), b.playmodes.end(),
                     [](const auto& a, const auto& c) { return a.first < c.first; });

    // background chatter so command counters move
    std::mt19937_64 noise(script.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Command> all_commands = b.commands;
    for (long t = 1; t < script.cycles; ++t) {
        for (int side = 0; side < 2; ++side) {
            for (int unum = 1; unum <= 11; ++unum) {
                if (uniform01(noise) >= 0.12) continue;
                PlayerId id{side == 0 ? Side::left : Side::right, unum};
                double pick = uniform01(noise);
                if (pick < 0.60)
                    all_commands.push_back(
                        {t, id, "(dash " + fmt_num(uniform(noise, 20, 100)) + ")", kDash});
                else if (pick < 0.85)
                    all_commands.push_back(
                        {t, id, "(turn " + fmt_num(uniform(noise, -90, 90)) + ")", kTurn});
                else if (pick < 0.95)
                    all_commands.push_back({t, id,
                                            "(turn_neck " + fmt_num(uniform(noise, -45, 45)) + ")",
                                            kTurnNeck});
                else
                    all_commands.push_back({t, id, "(say \"syn\")", kSay});
            }
        }
    }
    std::stable_sort(all_commands.begin(), all_commands.end(),
                     [](const Command& a, const Command& c) { return a.time < c.time; });

    // ball trajectory from the motion ops
    std::vector<Vec2> bpos(script.cycles), bvel(script.cycles);
    {
        Vec2 p{0, 0}, v{0, 0};
        for (long t = 0; t < script.cycles; ++t) {
            if (auto it = b.ops.find(t);
                it != b.ops.end() && it->second.kind == MotionOp::Kind::place) {
                p = it->second.value;
                v = {0, 0};
            }
            bpos[t] = p;
            bvel[t] = v;
            if (auto it = b.ops.find(t);
                it != b.ops.end() && it->second.kind == MotionOp::Kind::kick) {
                p = p + it->second.value;
                v = it->second.value * kDecay;
            } else {
                p = p + v;
                v = v * kDecay;
            }
        }
    }

    // players park on touchline rows unless placed near the action
    auto park = [](PlayerId id) -> Vec2 {
        double y = id.side == Side::left ? -31.5 : 31.5;
        return {-50.0 + 10.0 * (id.unum - 1), y};
    };
    auto pos_of = [&](PlayerId id, long t) -> Vec2 {
        auto it = b.placements.find(id);
        if (it != b.placements.end())
            for (auto pl = it->second.rbegin(); pl != it->second.rend(); ++pl)
                if (pl->from <= t && t <= pl->to) return pl->pos;
        return park(id);
    };

    // command counters: the frame at t covers commands with time < t
    std::array<std::array<std::array<long long, 11>, 11>, 2> counts{};
    std::size_t cmd_i = 0;

    std::string rcg = "ULG5\n";
    rcg += "(server_param (ball_decay 0.94)(ball_size 0.085)(player_size 0.3)(kickable_margin "
           "0.7)(tackle_dist 2)(goal_width 14.02))\n";
    std::size_t pm_i = 0;
    std::size_t team_i = 0;
    bool team_written = false;

    for (long t = 0; t < script.cycles; ++t) {
        while (pm_i < b.playmodes.size() && b.playmodes[pm_i].first <= t) {
            rcg += "(playmode " + std::to_string(b.playmodes[pm_i].first) + " " +
                   render_playmode(b.playmodes[pm_i].second) + ")\n";
            ++pm_i;
        }
        if (!team_written && t >= 1) {
            rcg += "(team 1 " + std::string(kTeamLeft) + " " + kTeamRight + " 0 0)\n";
            team_written = true;
        }
        while (team_i < b.team_updates.size() && b.team_updates[team_i].first <= t) {
            rcg += "(team " + std::to_string(b.team_updates[team_i].first) + " " + kTeamLeft +
                   " " + kTeamRight + " " + std::to_string(b.team_updates[team_i].second.first) +
                   " " + std::to_string(b.team_updates[team_i].second.second) + ")\n";
            ++team_i;
        }
        while (cmd_i < all_commands.size() && all_commands[cmd_i].time < t) {
            const Command& c = all_commands[cmd_i];
            ++counts[c.player.side == Side::left ? 0 : 1][c.player.unum - 1][c.counter];
            ++cmd_i;
        }

        rcg::ShowFrame f;
        f.time = t;
        f.ball = {bpos[t], bvel[t]};
        for (int side = 0; side < 2; ++side) {
            for (int unum = 1; unum <= 11; ++unum) {
                PlayerId id{side == 0 ? Side::left : Side::right, unum};
                rcg::PlayerSnapshot p;
                p.id = id;
                p.state = 0x1;
                p.pos = pos_of(id, t);
                p.stamina = 8000.0;
                p.stamina_capacity = 130600.0;
                const auto& cc = counts[side][unum - 1];
                for (int k = 0; k < 11; ++k) p.counts[k] = cc[k];
                f.players.push_back(std::move(p));
            }
        }
        rcg += rcg::serialize_entry(rcg::Entry{std::move(f)}, 5);
        rcg += '\n';
    }

    // rcl mirror: referee lines for every playmode change plus all commands
    std::string rcl;
    {
        std::size_t ri = 0, ci = 0;
        for (long t = 0; t < script.cycles; ++t) {
            while (ri < b.playmodes.size() && b.playmodes[ri].first == t) {
                rcl += std::to_string(t) + "\t(referee " +
                       render_playmode(b.playmodes[ri].second) + ")\n";
                ++ri;
            }
            while (ci < all_commands.size() && all_commands[ci].time == t) {
                const Command& c = all_commands[ci];
                rcl += std::to_string(t) + "\tRecv " +
                       (c.player.side == Side::left ? kTeamLeft : kTeamRight) + "_" +
                       std::to_string(c.player.unum) + ": " + c.text + "\n";
                ++ci;
            }
        }
    }

    GeneratedMatch out;
    out.rcg = std::move(rcg);
    out.rcl = std::move(rcl);
    out.labels = script;
    out.labels_json = script_to_json(script);
    return out;
}

Script make_random_script(std::uint64_t seed, int n_events) {
    std::mt19937_64 rng(seed);
    Script s;
    s.seed = seed;
    long t = 80;
    bool prev_chainable = false;
    PlayerId prev_receiver;

    for (int i = 0; i < n_events; ++i) {
        ScriptedEvent ev;
        ev.time = t;

        bool chain = prev_chainable && uniform01(rng) < 0.45;
        double pick = uniform01(rng);
        if (chain || pick < 0.55) {
            ev.kind = EventKind::pass;
            Side side;
            if (chain) {
                ev.actor = prev_receiver;
                side = ev.actor.side;
            } else {
                side = uniform01(rng) < 0.5 ? Side::left : Side::right;
                ev.actor = {side, static_cast<int>(uniform_int(rng, 2, 11))};
            }
            double po = uniform01(rng);
            if (po < 0.55) {
                ev.outcome = "completed";
                int r = static_cast<int>(uniform_int(rng, 2, 11));
                while (r == ev.actor.unum) r = static_cast<int>(uniform_int(rng, 2, 11));
                ev.receiver = PlayerId{side, r};
            } else if (po < 0.75) {
                ev.outcome = "intercepted";
                ev.receiver =
                    PlayerId{opposite(side), static_cast<int>(uniform_int(rng, 2, 11))};
            } else if (po < 0.87) {
                ev.outcome = "out_of_play";
            } else {
                ev.outcome = "expired";
            }
        } else if (pick < 0.77) {
            ev.kind = EventKind::shot;
            Side side = uniform01(rng) < 0.5 ? Side::left : Side::right;
            ev.actor = {side, static_cast<int>(uniform_int(rng, 2, 11))};
            double so = uniform01(rng);
            ev.outcome = so < 0.3 ? "goal" : so < 0.6 ? "saved" : so < 0.8 ? "blocked"
                                                                           : "off_target";
        } else if (pick < 0.9) {
            ev.kind = EventKind::tackle;
            Side side = uniform01(rng) < 0.5 ? Side::left : Side::right;
            ev.actor = {side, static_cast<int>(uniform_int(rng, 2, 11))};
            ev.outcome = uniform01(rng) < 0.6 ? "success" : "failure";
        } else {
            ev.kind = EventKind::catch_ball;
            Side side = uniform01(rng) < 0.5 ? Side::left : Side::right;
            ev.actor = {side, 1};
            ev.outcome = uniform01(rng) < 0.7 ? "success" : "failure";
        }

        prev_chainable = ev.kind == EventKind::pass && ev.outcome == "completed";
        if (prev_chainable) prev_receiver = *ev.receiver;

        s.events.push_back(ev);
        long gap = prev_chainable && uniform01(rng) < 0.45 ? uniform_int(rng, 24, 40)
                                                           : uniform_int(rng, 48, 68);
        if (ev.kind == EventKind::pass && ev.outcome == "expired") gap = std::max(gap, 50L);
        t += gap;
    }
    s.cycles = t + 80;
    return s;
}

} // namespace rcsskit::corpus
