#include "analytics.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "error.hpp"

namespace rcsskit::analytics {

using nlohmann::json;

std::string Share::decimal() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", value());
    return buf;
}

namespace {

std::optional<Share> ratio(long successes, long attempts) {
    if (attempts == 0) return std::nullopt;
    return Share{successes, attempts};
}

} // namespace

std::optional<Share> PlayerStats::pass_accuracy() const { return ratio(passes_completed, passes); }
std::optional<Share> PlayerStats::shot_accuracy() const { return ratio(shots_scored, shots); }
std::optional<Share> PlayerStats::tackle_accuracy() const { return ratio(tackles_won, tackles); }
std::optional<Share> PlayerStats::catch_accuracy() const { return ratio(catches_held, catches); }

PossessionReport possession(const rcg::MatchRecord& match, std::span<const events::Touch> touches,
                            const std::optional<Region>& region) {
    PossessionReport rep;
    rep.scope = region;

    long long left = 0, right = 0, contested = 0;
    std::map<PlayerId, long long> per_player;

    std::size_t touch_i = 0;             // touches consumed so far
    const events::Touch* holder = nullptr;
    std::size_t mode_i = 0;              // playmode timeline pointer
    PlayMode mode = parse_playmode("before_kick_off");
    long prev_time = -1;

    for (std::size_t i = 0; i < match.frame_count(); ++i) {
        const rcg::ShowFrame& f = match.frame(i);
        if (f.time == prev_time) continue;  // stopped sub-frames count once
        prev_time = f.time;

        while (mode_i < match.playmodes.size() && match.playmodes[mode_i].first <= f.time)
            mode = match.playmodes[mode_i++].second;
        while (touch_i < touches.size() && touches[touch_i].time <= f.time)
            holder = &touches[touch_i++];

        if (mode.kind != PlayModeKind::play_on) continue;
        if (region && !point_in_region(f.ball.pos, *region)) continue;

        ++rep.cycles_considered;
        if (!holder) {
            ++contested;
        } else if (holder->player.side == Side::left) {
            ++left;
            ++per_player[holder->player];
        } else {
            ++right;
            ++per_player[holder->player];
        }
    }

    if (rep.cycles_considered == 0) {
        rep.left = {0, 1};
        rep.right = {0, 1};
        rep.contested = {1, 1};
        return rep;
    }
    long long den = rep.cycles_considered;
    rep.left = {left, den};
    rep.right = {right, den};
    rep.contested = {contested, den};
    for (const auto& [id, n] : per_player) rep.per_player[id] = {n, den};
    return rep;
}

PlayerStats player_stats(const events::EventLog& log, PlayerId player) {
    PlayerStats s;
    s.player = player;
    for (const auto& p : log.passes) {
        if (p.kicker != player) continue;
        ++s.passes;
        if (p.outcome == events::PassOutcome::completed) ++s.passes_completed;
    }
    for (const auto& sh : log.shots) {
        if (sh.shooter != player) continue;
        ++s.shots;
        if (sh.outcome == events::ShotOutcome::goal) ++s.shots_scored;
    }
    for (const auto& t : log.tackles) {
        if (t.player != player) continue;
        ++s.tackles;
        if (t.success) ++s.tackles_won;
    }
    for (const auto& c : log.catches) {
        if (c.player != player) continue;
        ++s.catches;
        if (c.success) ++s.catches_held;
    }
    if (auto it = log.commands.find(player); it != log.commands.end()) {
        s.kicks = it->second.kicks;
        s.dashes = it->second.dashes;
        s.turns = it->second.turns;
        s.turn_necks = it->second.turn_necks;
        s.says = it->second.says;
    }
    return s;
}

RegionCounts region_event_counts(const events::EventLog& log, const Region& region) {
    RegionCounts c;
    for (const auto& t : log.touches)
        if (t.kind == events::TouchKind::kick && point_in_region(t.ball_pos, region)) ++c.kicks;
    for (const auto& t : log.tackles)
        if (point_in_region(t.ball_pos, region)) ++c.tackles;
    for (const auto& t : log.catches)
        if (point_in_region(t.ball_pos, region)) ++c.catches;
    for (const auto& p : log.passes)
        if (point_in_region(p.kick_pos, region)) ++c.passes;
    for (const auto& s : log.shots)
        if (point_in_region(s.shot_pos, region)) ++c.shots;
    return c;
}

MatchReport build_report(const rcg::MatchRecord& match, const events::EventLog& log,
                         std::span<const Region> regions, std::optional<PlayerId> only_player,
                         long skipped_rcl) {
    MatchReport rep;
    rep.version = match.version;
    rep.frames = static_cast<long>(match.frame_count());
    if (rep.frames > 0) {
        rep.first_cycle = match.frame(0).time;
        rep.last_cycle = match.frame(match.frame_count() - 1).time;
    }
    rep.skipped_rcg = static_cast<long>(match.skipped_lines);
    rep.skipped_rcl = skipped_rcl;
    if (match.teams) {
        rep.left.name = match.teams->name_left;
        rep.right.name = match.teams->name_right;
        rep.left.score = match.teams->score_left;
        rep.right.score = match.teams->score_right;
    }

    std::set<PlayerId> ids;
    for (std::size_t i = 0; i < match.frame_count(); ++i)
        for (const auto& p : match.frame(i).players) ids.insert(p.id);
    for (const auto& [id, n] : log.commands) ids.insert(id);

    for (PlayerId id : ids) {
        if (only_player && id != *only_player) continue;
        rep.players.push_back(player_stats(log, id));
    }
    for (const auto& ps : rep.players) {
        TeamStats& team = ps.player.side == Side::left ? rep.left : rep.right;
        team.passes += ps.passes;
        team.passes_completed += ps.passes_completed;
        team.shots += ps.shots;
        team.shots_scored += ps.shots_scored;
        team.tackles += ps.tackles;
        team.tackles_won += ps.tackles_won;
        team.catches += ps.catches;
        team.catches_held += ps.catches_held;
        team.kicks += ps.kicks;
        team.dashes += ps.dashes;
        team.turns += ps.turns;
        team.turn_necks += ps.turn_necks;
        team.says += ps.says;
    }

    rep.possession = possession(match, log.touches, std::nullopt);
    if (only_player) {
        auto it = rep.possession.per_player.find(*only_player);
        std::map<PlayerId, Share> filtered;
        if (it != rep.possession.per_player.end()) filtered[*only_player] = it->second;
        rep.possession.per_player = std::move(filtered);
    }
    for (const Region& r : regions) {
        RegionReport rr;
        rr.region = r;
        rr.possession = possession(match, log.touches, r);
        if (only_player) {
            auto it = rr.possession.per_player.find(*only_player);
            std::map<PlayerId, Share> filtered;
            if (it != rr.possession.per_player.end()) filtered[*only_player] = it->second;
            rr.possession.per_player = std::move(filtered);
        }
        rr.counts = region_event_counts(log, r);
        rep.regions.push_back(std::move(rr));
    }
    rep.events = log;
    return rep;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string fmt(const char* f, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

void render_possession_text(std::string& out, const PossessionReport& p, const char* indent) {
    out += indent;
    out += "cycles considered: " + std::to_string(p.cycles_considered) + "\n";
    auto line = [&](const char* label, const Share& s) {
        out += indent;
        out += label;
        out += " " + s.decimal() + " (" + std::to_string(s.num) + "/" + std::to_string(s.den) +
               ")\n";
    };
    line("left     ", p.left);
    line("right    ", p.right);
    line("contested", p.contested);
    for (const auto& [id, s] : p.per_player) {
        out += indent;
        out += "  " + to_string(id) + " " + s.decimal() + "\n";
    }
}

const char* outcome_name(events::PassOutcome o) {
    switch (o) {
    case events::PassOutcome::completed: return "completed";
    case events::PassOutcome::intercepted: return "intercepted";
    case events::PassOutcome::out_of_play: return "out_of_play";
    default: return "expired";
    }
}

const char* outcome_name(events::ShotOutcome o) {
    switch (o) {
    case events::ShotOutcome::goal: return "goal";
    case events::ShotOutcome::saved: return "saved";
    case events::ShotOutcome::blocked: return "blocked";
    default: return "off_target";
    }
}

events::PassOutcome pass_outcome_of(const std::string& s) {
    if (s == "completed") return events::PassOutcome::completed;
    if (s == "intercepted") return events::PassOutcome::intercepted;
    if (s == "out_of_play") return events::PassOutcome::out_of_play;
    if (s == "expired") return events::PassOutcome::expired;
    throw Error(ErrorCode::parse, "unknown pass outcome '" + s + "'");
}

events::ShotOutcome shot_outcome_of(const std::string& s) {
    if (s == "goal") return events::ShotOutcome::goal;
    if (s == "saved") return events::ShotOutcome::saved;
    if (s == "blocked") return events::ShotOutcome::blocked;
    if (s == "off_target") return events::ShotOutcome::off_target;
    throw Error(ErrorCode::parse, "unknown shot outcome '" + s + "'");
}

const char* touch_kind_name(events::TouchKind k) {
    switch (k) {
    case events::TouchKind::kick: return "kick";
    case events::TouchKind::tackle: return "tackle";
    default: return "catch";
    }
}

events::TouchKind touch_kind_of(const std::string& s) {
    if (s == "kick") return events::TouchKind::kick;
    if (s == "tackle") return events::TouchKind::tackle;
    if (s == "catch") return events::TouchKind::catch_ball;
    throw Error(ErrorCode::parse, "unknown touch kind '" + s + "'");
}

const char* evidence_name(events::Evidence e) {
    switch (e) {
    case events::Evidence::command: return "command";
    case events::Evidence::velocity: return "velocity";
    default: return "both";
    }
}

events::Evidence evidence_of(const std::string& s) {
    if (s == "command") return events::Evidence::command;
    if (s == "velocity") return events::Evidence::velocity;
    if (s == "both") return events::Evidence::both;
    throw Error(ErrorCode::parse, "unknown evidence '" + s + "'");
}

PlayerId id_of(const json& j) {
    auto id = parse_player_id(j.get<std::string>());
    if (!id) throw Error(ErrorCode::parse, "bad player id in report");
    return *id;
}

json share_json(const Share& s) {
    return json{{"num", s.num}, {"den", s.den}, {"share", s.decimal()}};
}

Share share_of(const json& j) {
    return Share{j.at("num").get<long long>(), j.at("den").get<long long>()};
}

json accuracy_json(const std::optional<Share>& s) {
    if (!s) return nullptr;
    return json{{"num", s->num}, {"den", s->den}, {"value", s->decimal()}};
}

json possession_json(const PossessionReport& p) {
    json players = json::object();
    for (const auto& [id, s] : p.per_player) players[to_string(id)] = share_json(s);
    json j{{"cycles", p.cycles_considered},
           {"left", share_json(p.left)},
           {"right", share_json(p.right)},
           {"contested", share_json(p.contested)},
           {"players", players}};
    if (p.scope)
        j["scope"] = json::array({p.scope->min.x, p.scope->min.y, p.scope->max.x, p.scope->max.y});
    return j;
}

PossessionReport possession_of(const json& j) {
    PossessionReport p;
    p.cycles_considered = j.at("cycles").get<long>();
    p.left = share_of(j.at("left"));
    p.right = share_of(j.at("right"));
    p.contested = share_of(j.at("contested"));
    for (auto it = j.at("players").begin(); it != j.at("players").end(); ++it) {
        auto id = parse_player_id(it.key());
        if (!id) throw Error(ErrorCode::parse, "bad player id in possession");
        p.per_player[*id] = share_of(it.value());
    }
    if (j.contains("scope")) {
        const auto& a = j.at("scope");
        p.scope = Region{{a.at(0).get<double>(), a.at(1).get<double>()},
                         {a.at(2).get<double>(), a.at(3).get<double>()}};
    }
    return p;
}

json team_json(const TeamStats& t) {
    return json{{"name", t.name},       {"score", t.score},
                {"passes", t.passes},   {"passes_completed", t.passes_completed},
                {"shots", t.shots},     {"shots_scored", t.shots_scored},
                {"tackles", t.tackles}, {"tackles_won", t.tackles_won},
                {"catches", t.catches}, {"catches_held", t.catches_held},
                {"kicks", t.kicks},     {"dashes", t.dashes},
                {"turns", t.turns},     {"turn_necks", t.turn_necks},
                {"says", t.says}};
}

TeamStats team_of(const json& j) {
    TeamStats t;
    t.name = j.at("name").get<std::string>();
    t.score = j.at("score").get<int>();
    t.passes = j.at("passes").get<long>();
    t.passes_completed = j.at("passes_completed").get<long>();
    t.shots = j.at("shots").get<long>();
    t.shots_scored = j.at("shots_scored").get<long>();
    t.tackles = j.at("tackles").get<long>();
    t.tackles_won = j.at("tackles_won").get<long>();
    t.catches = j.at("catches").get<long>();
    t.catches_held = j.at("catches_held").get<long>();
    t.kicks = j.at("kicks").get<long>();
    t.dashes = j.at("dashes").get<long>();
    t.turns = j.at("turns").get<long>();
    t.turn_necks = j.at("turn_necks").get<long>();
    t.says = j.at("says").get<long>();
    return t;
}

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }
Vec2 vec_of(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

} // namespace

std::string render_json(const MatchReport& r) {
    json players = json::object();
    for (const auto& p : r.players) {
        players[to_string(p.player)] =
            json{{"kicks", p.kicks},
                 {"dashes", p.dashes},
                 {"turns", p.turns},
                 {"turn_necks", p.turn_necks},
                 {"says", p.says},
                 {"passes", json{{"attempts", p.passes},
                                 {"successes", p.passes_completed},
                                 {"accuracy", accuracy_json(p.pass_accuracy())}}},
                 {"shots", json{{"attempts", p.shots},
                                {"successes", p.shots_scored},
                                {"accuracy", accuracy_json(p.shot_accuracy())}}},
                 {"tackles", json{{"attempts", p.tackles},
                                  {"successes", p.tackles_won},
                                  {"accuracy", accuracy_json(p.tackle_accuracy())}}},
                 {"catches", json{{"attempts", p.catches},
                                  {"successes", p.catches_held},
                                  {"accuracy", accuracy_json(p.catch_accuracy())}}}};
    }

    json touches = json::array();
    for (const auto& t : r.events.touches)
        touches.push_back(json{{"time", t.time},
                               {"player", to_string(t.player)},
                               {"kind", touch_kind_name(t.kind)},
                               {"ball", vec_json(t.ball_pos)},
                               {"evidence", evidence_name(t.evidence)}});
    json passes = json::array();
    for (const auto& p : r.events.passes)
        passes.push_back(json{{"kicker", to_string(p.kicker)},
                              {"receiver", p.receiver ? json(to_string(*p.receiver)) : json()},
                              {"start", p.start_time},
                              {"end", p.end_time},
                              {"outcome", outcome_name(p.outcome)},
                              {"pos", vec_json(p.kick_pos)}});
    json shots = json::array();
    for (const auto& s : r.events.shots)
        shots.push_back(json{{"shooter", to_string(s.shooter)},
                             {"time", s.time},
                             {"target", s.target_goal == Side::left ? "left" : "right"},
                             {"outcome", outcome_name(s.outcome)},
                             {"pos", vec_json(s.shot_pos)},
                             {"speed", s.speed}});
    json tackles = json::array();
    for (const auto& t : r.events.tackles)
        tackles.push_back(json{{"player", to_string(t.player)},
                               {"time", t.time},
                               {"success", t.success},
                               {"ball", vec_json(t.ball_pos)}});
    json catches = json::array();
    for (const auto& c : r.events.catches)
        catches.push_back(json{{"player", to_string(c.player)},
                               {"time", c.time},
                               {"success", c.success},
                               {"ball", vec_json(c.ball_pos)}});
    json commands = json::object();
    for (const auto& [id, c] : r.events.commands)
        commands[to_string(id)] = json{{"kicks", c.kicks},
                                       {"dashes", c.dashes},
                                       {"turns", c.turns},
                                       {"turn_necks", c.turn_necks},
                                       {"says", c.says}};

    json regions = json::array();
    for (const auto& rr : r.regions)
        regions.push_back(
            json{{"rect", json::array({rr.region.min.x, rr.region.min.y, rr.region.max.x,
                                       rr.region.max.y})},
                 {"possession", possession_json(rr.possession)},
                 {"events", json{{"kicks", rr.counts.kicks},
                                 {"tackles", rr.counts.tackles},
                                 {"catches", rr.counts.catches},
                                 {"passes", rr.counts.passes},
                                 {"shots", rr.counts.shots}}}});

    json doc{{"meta", json{{"version", r.version},
                           {"first_cycle", r.first_cycle},
                           {"last_cycle", r.last_cycle},
                           {"frames", r.frames},
                           {"skipped_rcg", r.skipped_rcg},
                           {"skipped_rcl", r.skipped_rcl}}},
             {"teams", json{{"left", team_json(r.left)}, {"right", team_json(r.right)}}},
             {"players", players},
             {"possession", possession_json(r.possession)},
             {"regions", regions},
             {"events", json{{"touches", touches},
                             {"passes", passes},
                             {"shots", shots},
                             {"tackles", tackles},
                             {"catches", catches},
                             {"commands", commands}}}};
    return doc.dump(2) + "\n";
}

MatchReport load_json(std::string_view text) {
    json doc = json::parse(text);
    MatchReport r;
    const json& meta = doc.at("meta");
    r.version = meta.at("version").get<int>();
    r.first_cycle = meta.at("first_cycle").get<long>();
    r.last_cycle = meta.at("last_cycle").get<long>();
    r.frames = meta.at("frames").get<long>();
    r.skipped_rcg = meta.at("skipped_rcg").get<long>();
    r.skipped_rcl = meta.at("skipped_rcl").get<long>();
    r.left = team_of(doc.at("teams").at("left"));
    r.right = team_of(doc.at("teams").at("right"));

    for (auto it = doc.at("players").begin(); it != doc.at("players").end(); ++it) {
        PlayerStats p;
        auto id = parse_player_id(it.key());
        if (!id) throw Error(ErrorCode::parse, "bad player id in report");
        p.player = *id;
        const json& v = it.value();
        p.kicks = v.at("kicks").get<long>();
        p.dashes = v.at("dashes").get<long>();
        p.turns = v.at("turns").get<long>();
        p.turn_necks = v.at("turn_necks").get<long>();
        p.says = v.at("says").get<long>();
        p.passes = v.at("passes").at("attempts").get<long>();
        p.passes_completed = v.at("passes").at("successes").get<long>();
        p.shots = v.at("shots").at("attempts").get<long>();
        p.shots_scored = v.at("shots").at("successes").get<long>();
        p.tackles = v.at("tackles").at("attempts").get<long>();
        p.tackles_won = v.at("tackles").at("successes").get<long>();
        p.catches = v.at("catches").at("attempts").get<long>();
        p.catches_held = v.at("catches").at("successes").get<long>();
        r.players.push_back(p);
    }
    std::sort(r.players.begin(), r.players.end(),
              [](const PlayerStats& a, const PlayerStats& b) { return a.player < b.player; });

    r.possession = possession_of(doc.at("possession"));
    for (const json& jr : doc.at("regions")) {
        RegionReport rr;
        const json& rect = jr.at("rect");
        rr.region = Region{{rect.at(0).get<double>(), rect.at(1).get<double>()},
                           {rect.at(2).get<double>(), rect.at(3).get<double>()}};
        rr.possession = possession_of(jr.at("possession"));
        const json& ev = jr.at("events");
        rr.counts = RegionCounts{ev.at("kicks").get<long>(), ev.at("tackles").get<long>(),
                                 ev.at("catches").get<long>(), ev.at("passes").get<long>(),
                                 ev.at("shots").get<long>()};
        r.regions.push_back(std::move(rr));
    }

    const json& ev = doc.at("events");
    for (const json& t : ev.at("touches"))
        r.events.touches.push_back({t.at("time").get<long>(), id_of(t.at("player")),
                                    touch_kind_of(t.at("kind").get<std::string>()),
                                    vec_of(t.at("ball")),
                                    evidence_of(t.at("evidence").get<std::string>())});
    for (const json& p : ev.at("passes")) {
        events::PassEvent e;
        e.kicker = id_of(p.at("kicker"));
        if (!p.at("receiver").is_null()) e.receiver = id_of(p.at("receiver"));
        e.start_time = p.at("start").get<long>();
        e.end_time = p.at("end").get<long>();
        e.outcome = pass_outcome_of(p.at("outcome").get<std::string>());
        e.kick_pos = vec_of(p.at("pos"));
        r.events.passes.push_back(e);
    }
    for (const json& s : ev.at("shots")) {
        events::ShotEvent e;
        e.shooter = id_of(s.at("shooter"));
        e.time = s.at("time").get<long>();
        e.target_goal = s.at("target").get<std::string>() == "left" ? Side::left : Side::right;
        e.outcome = shot_outcome_of(s.at("outcome").get<std::string>());
        e.shot_pos = vec_of(s.at("pos"));
        e.speed = s.at("speed").get<double>();
        r.events.shots.push_back(e);
    }
    for (const json& t : ev.at("tackles"))
        r.events.tackles.push_back({id_of(t.at("player")), t.at("time").get<long>(),
                                    t.at("success").get<bool>(), vec_of(t.at("ball"))});
    for (const json& c : ev.at("catches"))
        r.events.catches.push_back({id_of(c.at("player")), c.at("time").get<long>(),
                                    c.at("success").get<bool>(), vec_of(c.at("ball"))});
    for (auto it = ev.at("commands").begin(); it != ev.at("commands").end(); ++it) {
        auto id = parse_player_id(it.key());
        if (!id) throw Error(ErrorCode::parse, "bad player id in commands");
        const json& v = it.value();
        r.events.commands[*id] =
            events::CommandCounts{v.at("kicks").get<long>(), v.at("dashes").get<long>(),
                                  v.at("turns").get<long>(), v.at("turn_necks").get<long>(),
                                  v.at("says").get<long>()};
    }
    return r;
}

std::string render_text(const MatchReport& r) {
    std::string out;
    out += "match report\n";
    out += "============\n";
    if (r.frames == 0) {
        out += "no data\n";
        return out;
    }
    out += "teams: " + r.left.name + " " + std::to_string(r.left.score) + " - " +
           std::to_string(r.right.score) + " " + r.right.name + "\n";
    out += "cycles: " + std::to_string(r.first_cycle) + ".." + std::to_string(r.last_cycle) + " (" +
           std::to_string(r.frames) + " frames, rcg v" + std::to_string(r.version) + ")\n";
    out += "skipped lines: rcg " + std::to_string(r.skipped_rcg) + ", rcl " +
           std::to_string(r.skipped_rcl) + "\n";
    out += "\npossession (whole field)\n";
    render_possession_text(out, r.possession, "  ");

    out += "\nteam totals\n";
    out += "  side   passes compl  shots goals  tackles won  catches held  kicks  dashes turns\n";
    auto team_line = [&](const char* label, const TeamStats& t) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "  %-5s  %6ld %5ld  %5ld %5ld  %7ld %3ld  %7ld %4ld  %5ld %6ld %5ld\n",
                      label, t.passes, t.passes_completed, t.shots, t.shots_scored, t.tackles,
                      t.tackles_won, t.catches, t.catches_held, t.kicks, t.dashes, t.turns);
        out += buf;
    };
    team_line("left", r.left);
    team_line("right", r.right);

    out += "\nplayers\n";
    out += "  id   kicks dashes turns necks says | passes compl acc    | shots goals | tackles "
           "won | catches held\n";
    for (const auto& p : r.players) {
        char buf[200];
        std::string acc = p.pass_accuracy() ? p.pass_accuracy()->decimal() : "-";
        std::snprintf(buf, sizeof buf,
                      "  %-4s %5ld %6ld %5ld %5ld %4ld | %6ld %5ld %-6s | %5ld %5ld | %7ld %3ld | "
                      "%7ld %4ld\n",
                      to_string(p.player).c_str(), p.kicks, p.dashes, p.turns, p.turn_necks,
                      p.says, p.passes, p.passes_completed, acc.c_str(), p.shots, p.shots_scored,
                      p.tackles, p.tackles_won, p.catches, p.catches_held);
        out += buf;
    }

    for (const auto& rr : r.regions) {
        out += "\nregion [" + fmt("%.2f", rr.region.min.x) + "," + fmt("%.2f", rr.region.min.y) +
               "]..[" + fmt("%.2f", rr.region.max.x) + "," + fmt("%.2f", rr.region.max.y) + "]\n";
        render_possession_text(out, rr.possession, "  ");
        out += "  events: kicks " + std::to_string(rr.counts.kicks) + ", passes " +
               std::to_string(rr.counts.passes) + ", shots " + std::to_string(rr.counts.shots) +
               ", tackles " + std::to_string(rr.counts.tackles) + ", catches " +
               std::to_string(rr.counts.catches) + "\n";
    }

    out += "\nevents: " + std::to_string(r.events.touches.size()) + " touches, " +
           std::to_string(r.events.passes.size()) + " passes, " +
           std::to_string(r.events.shots.size()) + " shots, " +
           std::to_string(r.events.tackles.size()) + " tackles, " +
           std::to_string(r.events.catches.size()) + " catches\n";
    return out;
}

} // namespace rcsskit::analytics
