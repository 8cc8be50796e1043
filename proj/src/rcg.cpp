#include "rcg.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "sexpr.hpp"

namespace rcsskit::rcg {

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, p);
}

void append_ll(std::string& out, long long v) {
    char buf[24];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, p);
}

// "<time>" or "<time>,<stopped>"
std::pair<long, long> parse_time_token(TokenCursor& cur) {
    std::string_view tok = cur.atom();
    auto comma = tok.find(',');
    long t = 0, s = 0;
    std::string_view tpart = tok.substr(0, comma);
    auto [p1, e1] = std::from_chars(tpart.data(), tpart.data() + tpart.size(), t);
    if (e1 != std::errc{} || p1 != tpart.data() + tpart.size())
        cur.fail("bad time token '" + std::string(tok) + "'");
    if (comma != std::string_view::npos) {
        std::string_view spart = tok.substr(comma + 1);
        auto [p2, e2] = std::from_chars(spart.data(), spart.data() + spart.size(), s);
        if (e2 != std::errc{} || p2 != spart.data() + spart.size())
            cur.fail("bad stopped-time token '" + std::string(tok) + "'");
    }
    return {t, s};
}

void append_time(std::string& out, long time, long stopped) {
    append_ll(out, time);
    if (stopped > 0) {
        out += ',';
        append_ll(out, stopped);
    }
}

PlayerId parse_side_unum(TokenCursor& cur) {
    std::string_view side_tok = cur.atom();
    Side side;
    if (side_tok == "l") side = Side::left;
    else if (side_tok == "r") side = Side::right;
    else cur.fail("expected side 'l' or 'r', got '" + std::string(side_tok) + "'");
    long long unum = cur.integer();
    if (unum < 1 || unum > 11) cur.fail("unum out of range 1..11");
    return PlayerId{side, static_cast<int>(unum)};
}

PlayerSnapshot parse_player_clause(TokenCursor& cur, int version) {
    PlayerSnapshot p;
    // "((l 3) type 0xSTATE x y vx vy body neck [px py] (v h 90) (s ...) [(f ...)] (c ...))"
    // caller consumed the outer '(' and the inner "(l 3)" id clause
    p.type_id = static_cast<int>(cur.integer());
    p.state = cur.hex();
    p.pos.x = cur.number();
    p.pos.y = cur.number();
    p.vel.x = cur.number();
    p.vel.y = cur.number();
    p.body_dir = cur.number();
    p.neck_dir = cur.number();
    if (!cur.at_open() && !cur.at_close()) {
        Vec2 pt;
        pt.x = cur.number();
        pt.y = cur.number();
        p.pointto = pt;
    }
    while (cur.at_open()) {
        cur.expect_open();
        std::string_view head = cur.atom();
        if (head == "v") {
            std::string_view q = cur.atom();
            if (q == "h") p.view_quality = ViewQuality::high;
            else if (q == "l") p.view_quality = ViewQuality::low;
            else cur.fail("bad view quality");
            p.view_width = cur.number();
        } else if (head == "s") {
            p.stamina = cur.number();
            p.effort = cur.number();
            p.recovery = cur.number();
            if (!cur.at_close()) p.stamina_capacity = cur.number();
        } else if (head == "f") {
            p.focus = parse_side_unum(cur);
        } else if (head == "c") {
            for (auto& c : p.counts) c = cur.integer();
        } else {
            cur.fail("unknown player clause '" + std::string(head) + "'");
        }
        cur.expect_close();
    }
    cur.expect_close();
    (void)version;
    return p;
}

std::string serialize_show(const ShowFrame& f, int version) {
    std::string out = "(show ";
    append_time(out, f.time, f.stopped);
    out += " ((b) ";
    append_double(out, f.ball.pos.x);
    out += ' ';
    append_double(out, f.ball.pos.y);
    out += ' ';
    append_double(out, f.ball.vel.x);
    out += ' ';
    append_double(out, f.ball.vel.y);
    out += ')';
    for (const auto& p : f.players) {
        out += " ((";
        out += side_char(p.id.side);
        out += ' ';
        append_ll(out, p.id.unum);
        out += ") ";
        append_ll(out, p.type_id);
        out += ' ';
        char hexbuf[24];
        std::snprintf(hexbuf, sizeof hexbuf, "0x%llx", p.state);
        out += hexbuf;
        for (double v : {p.pos.x, p.pos.y, p.vel.x, p.vel.y, p.body_dir, p.neck_dir}) {
            out += ' ';
            append_double(out, v);
        }
        if (p.pointto) {
            out += ' ';
            append_double(out, p.pointto->x);
            out += ' ';
            append_double(out, p.pointto->y);
        }
        out += " (v ";
        out += p.view_quality == ViewQuality::high ? 'h' : 'l';
        out += ' ';
        append_double(out, p.view_width);
        out += ") (s ";
        append_double(out, p.stamina);
        out += ' ';
        append_double(out, p.effort);
        out += ' ';
        append_double(out, p.recovery);
        if (version >= 5 && p.stamina_capacity) {
            out += ' ';
            append_double(out, *p.stamina_capacity);
        }
        out += ')';
        if (p.focus) {
            out += " (f ";
            out += side_char(p.focus->side);
            out += ' ';
            append_ll(out, p.focus->unum);
            out += ')';
        }
        out += " (c";
        for (long long c : p.counts) {
            out += ' ';
            append_ll(out, c);
        }
        out += "))";
    }
    out += ')';
    return out;
}

PlayModeChange parse_playmode_line(std::string_view line, std::size_t line_no) {
    TokenCursor cur(line, line_no);
    cur.expect_open();
    if (cur.atom() != "playmode") cur.fail("not a playmode line");
    auto [t, s] = parse_time_token(cur);
    (void)s;
    std::string_view tok = cur.atom();
    PlayModeChange e{t, parse_playmode(tok)};
    cur.expect_close();
    return e;
}

TeamInfo parse_team_line(std::string_view line, std::size_t line_no) {
    TokenCursor cur(line, line_no);
    cur.expect_open();
    if (cur.atom() != "team") cur.fail("not a team line");
    TeamInfo e;
    auto [t, s] = parse_time_token(cur);
    (void)s;
    e.time = t;
    e.name_left = std::string(cur.atom());
    e.name_right = std::string(cur.atom());
    e.score_left = static_cast<int>(cur.integer());
    e.score_right = static_cast<int>(cur.integer());
    while (!cur.at_close()) e.penalty.push_back(cur.integer());
    cur.expect_close();
    return e;
}

Message parse_msg_line(std::string_view line, std::size_t line_no) {
    TokenCursor cur(line, line_no);
    cur.expect_open();
    if (cur.atom() != "msg") cur.fail("not a msg line");
    Message e;
    auto [t, s] = parse_time_token(cur);
    (void)s;
    e.time = t;
    e.board = static_cast<int>(cur.integer());
    // text is the last field: everything between the first quote and the
    // last quote of the remainder (payloads may embed parens)
    std::string_view tail = cur.rest();
    auto first = tail.find('"');
    auto last = tail.rfind('"');
    if (first == std::string_view::npos || last == first)
        cur.fail("msg text must be quoted");
    e.text = std::string(tail.substr(first + 1, last - first - 1));
    return e;
}

} // namespace

const PlayerSnapshot* ShowFrame::player(PlayerId id) const {
    for (const auto& p : players)
        if (p.id == id) return &p;
    return nullptr;
}

const ShowFrame* MatchRecord::frame_at(long time) const {
    auto it = frame_by_time_.find(time);
    if (it == frame_by_time_.end()) return nullptr;
    return &std::get<ShowFrame>(entries[it->second]);
}

PlayMode MatchRecord::mode_at(long time) const {
    PlayMode mode = parse_playmode("before_kick_off");
    for (const auto& [t, m] : playmodes) {
        if (t > time) break;
        mode = m;
    }
    return mode;
}

std::optional<double> MatchRecord::server_param(std::string_view key) const {
    for (const auto& entry : entries) {
        if (const auto* rp = std::get_if<RawParam>(&entry)) {
            if (rp->tag != "server_param") continue;
            if (auto v = lookup_param(rp->raw, key)) return v;
        }
    }
    return std::nullopt;
}

ShowFrame parse_show_line(std::string_view line, int version, std::size_t line_no) {
    TokenCursor cur(line, line_no);
    cur.expect_open();
    if (cur.atom() != "show") cur.fail("not a show line");
    ShowFrame f;
    auto [t, s] = parse_time_token(cur);
    f.time = t;
    f.stopped = s;
    bool saw_ball = false;
    while (cur.at_open()) {
        cur.expect_open();
        cur.expect_open();
        std::string_view head = cur.atom();
        if (head == "b") {
            cur.expect_close();
            f.ball.pos.x = cur.number();
            f.ball.pos.y = cur.number();
            f.ball.vel.x = cur.number();
            f.ball.vel.y = cur.number();
            cur.expect_close();
            saw_ball = true;
        } else if (head == "l" || head == "r") {
            Side side = head == "l" ? Side::left : Side::right;
            long long unum = cur.integer();
            if (unum < 1 || unum > 11) cur.fail("unum out of range 1..11");
            cur.expect_close();
            PlayerSnapshot p = parse_player_clause(cur, version);
            p.id = PlayerId{side, static_cast<int>(unum)};
            f.players.push_back(std::move(p));
        } else {
            cur.fail("unknown object clause '" + std::string(head) + "'");
        }
    }
    cur.expect_close();
    cur.expect_end();
    if (!saw_ball) {
        TokenCursor at(line, line_no);
        at.fail("show line missing ball clause");
    }
    for (std::size_t i = 0; i < f.players.size(); ++i)
        for (std::size_t j = i + 1; j < f.players.size(); ++j)
            if (f.players[i].id == f.players[j].id) {
                TokenCursor at(line, line_no);
                at.fail("duplicate player id " + to_string(f.players[i].id));
            }
    return f;
}

std::string serialize_entry(const Entry& entry, int version) {
    return std::visit(
        [&](const auto& e) -> std::string {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, ShowFrame>) {
                return serialize_show(e, version);
            } else if constexpr (std::is_same_v<T, PlayModeChange>) {
                std::string out = "(playmode ";
                append_ll(out, e.time);
                out += ' ';
                out += render_playmode(e.mode);
                out += ')';
                return out;
            } else if constexpr (std::is_same_v<T, TeamInfo>) {
                std::string out = "(team ";
                append_ll(out, e.time);
                out += ' ' + e.name_left + ' ' + e.name_right + ' ';
                append_ll(out, e.score_left);
                out += ' ';
                append_ll(out, e.score_right);
                for (long long v : e.penalty) {
                    out += ' ';
                    append_ll(out, v);
                }
                out += ')';
                return out;
            } else if constexpr (std::is_same_v<T, Message>) {
                std::string out = "(msg ";
                append_ll(out, e.time);
                out += ' ';
                append_ll(out, e.board);
                out += " \"" + e.text + "\")";
                return out;
            } else {
                return e.raw;  // RawParam: byte-identical passthrough
            }
        },
        entry);
}

std::string serialize_match(const MatchRecord& match) {
    std::string out = match.version == 4 ? "ULG4\n" : "ULG5\n";
    for (const auto& e : match.entries) {
        out += serialize_entry(e, match.version);
        out += '\n';
    }
    return out;
}

MatchRecord parse_rcg(std::string_view text, const ParseOptions& opts) {
    MatchRecord match;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    long last_show_time = -1;
    bool header_seen = false;

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        if (!header_seen) {
            if (line == "ULG4") match.version = 4;
            else if (line == "ULG5") match.version = 5;
            else throw ParseError("bad header '" + std::string(line.substr(0, 16)) +
                                      "': expected ULG4 or ULG5",
                                  line_no);
            header_seen = true;
        } else if (!line.empty()) {
            try {
                if (line.starts_with("(show ")) {
                    ShowFrame f = parse_show_line(line, match.version, line_no);
                    if (f.time < last_show_time)
                        match.warnings.push_back("line " + std::to_string(line_no) +
                                                 ": frame time " + std::to_string(f.time) +
                                                 " decreases (previous " +
                                                 std::to_string(last_show_time) + ")");
                    last_show_time = std::max(last_show_time, f.time);
                    std::size_t idx = match.entries.size();
                    match.show_index.push_back(idx);
                    match.frame_by_time_.emplace(f.time, idx);
                    match.entries.emplace_back(std::move(f));
                } else if (line.starts_with("(playmode ")) {
                    PlayModeChange e = parse_playmode_line(line, line_no);
                    match.playmodes.emplace_back(e.time, e.mode);
                    match.entries.emplace_back(std::move(e));
                } else if (line.starts_with("(team ")) {
                    TeamInfo e = parse_team_line(line, line_no);
                    match.teams = e;
                    match.entries.emplace_back(std::move(e));
                } else if (line.starts_with("(msg ")) {
                    match.entries.emplace_back(parse_msg_line(line, line_no));
                } else if (line.starts_with("(server_param ") || line.starts_with("(player_param ") ||
                           line.starts_with("(player_type ")) {
                    std::string tag(line.substr(1, line.find(' ') - 1));
                    match.entries.emplace_back(RawParam{std::move(tag), std::string(line)});
                } else {
                    throw ParseError("unrecognized line", line_no);
                }
            } catch (const ParseError&) {
                if (opts.strict) throw;
                ++match.skipped_lines;
            }
        }

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (!header_seen)
        throw ParseError("empty input: expected ULG4 or ULG5 header", 1);
    return match;
}

std::optional<double> lookup_param(std::string_view raw, std::string_view key) {
    std::string needle = "(" + std::string(key) + " ";
    auto at = raw.find(needle);
    if (at == std::string_view::npos) return std::nullopt;
    std::size_t start = at + needle.size();
    auto end = raw.find(')', start);
    if (end == std::string_view::npos) return std::nullopt;
    std::string_view value = raw.substr(start, end - start);
    double v = 0.0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size()) return std::nullopt;
    return v;
}

FieldSpec field_spec_from(const MatchRecord& match) {
    FieldSpec spec;
    if (auto v = match.server_param("ball_decay")) spec.ball_decay = *v;
    if (auto v = match.server_param("tackle_dist")) spec.tackle_dist = *v;
    if (auto v = match.server_param("goal_width")) spec.goal_half_width = *v / 2.0;
    double player_size = match.server_param("player_size").value_or(0.3);
    double ball_size = match.server_param("ball_size").value_or(0.085);
    double margin = match.server_param("kickable_margin").value_or(0.7);
    if (match.server_param("player_size") || match.server_param("ball_size") ||
        match.server_param("kickable_margin"))
        spec.kickable_area = player_size + ball_size + margin;
    return spec;
}

} // namespace rcsskit::rcg
