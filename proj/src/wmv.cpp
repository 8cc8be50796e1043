#include "wmv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>

#include "error.hpp"
#include "sexpr.hpp"

namespace rcsskit::wmv {

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, p);
}

PlayerId parse_side_unum(TokenCursor& cur) {
    std::string_view side_tok = cur.atom();
    Side side;
    if (side_tok == "l") side = Side::left;
    else if (side_tok == "r") side = Side::right;
    else cur.fail("expected side 'l' or 'r'");
    long long unum = cur.integer();
    if (unum < 1 || unum > 11) cur.fail("unum out of range 1..11");
    return PlayerId{side, static_cast<int>(unum)};
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace

const WmCycle* WmSeries::at(long time) const {
    auto it = std::lower_bound(cycles.begin(), cycles.end(), time,
                               [](const WmCycle& c, long t) { return c.time < t; });
    if (it == cycles.end() || it->time != time) return nullptr;
    return &*it;
}

WmSeries parse_wm_dump(std::string_view text, const rcg::ParseOptions& opts) {
    WmSeries wm;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool owner_seen = false;

    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        TokenCursor cur(line, line_no);
        if (cur.at_end()) continue;

        if (!owner_seen) {
            cur.expect_open();
            if (cur.atom() != "wm-owner")
                throw Error(ErrorCode::parse,
                            "line 1: dump must start with an (wm-owner <l|r> <unum>) header");
            wm.owner = parse_side_unum(cur);
            cur.expect_close();
            owner_seen = true;
            continue;
        }

        try {
            cur.expect_open();
            if (cur.atom() != "wm") cur.fail("expected (wm ...) line");
            WmCycle cycle;
            cycle.time = cur.integer();
            bool saw_self = false, saw_ball = false;
            while (cur.at_open()) {
                cur.expect_open();
                std::string_view head = cur.atom();
                WmObject obj;
                if (head == "self") {
                    if (saw_self) cur.fail("duplicate self clause");
                    saw_self = true;
                    obj.kind = WmObject::Kind::self;
                    obj.pos.x = cur.number();
                    obj.pos.y = cur.number();
                    Vec2 v;
                    v.x = cur.number();
                    v.y = cur.number();
                    obj.vel = v;
                    obj.body_dir = cur.number();
                    obj.confidence = 1.0;
                } else if (head == "b") {
                    if (saw_ball) cur.fail("duplicate ball clause");
                    saw_ball = true;
                    obj.kind = WmObject::Kind::ball;
                    obj.pos.x = cur.number();
                    obj.pos.y = cur.number();
                    Vec2 v;
                    v.x = cur.number();
                    v.y = cur.number();
                    obj.vel = v;
                    obj.confidence = cur.number();
                } else if (head == "p") {
                    obj.kind = WmObject::Kind::player;
                    obj.player = parse_side_unum(cur);
                    for (const auto& other : cycle.objects)
                        if (other.kind == WmObject::Kind::player && other.player == obj.player)
                            cur.fail("duplicate player " + to_string(obj.player));
                    obj.pos.x = cur.number();
                    obj.pos.y = cur.number();
                    Vec2 v;
                    v.x = cur.number();
                    v.y = cur.number();
                    obj.vel = v;
                    obj.confidence = cur.number();
                } else {
                    cur.fail("unknown wm clause '" + std::string(head) + "'");
                }
                if (obj.confidence < 0.0 || obj.confidence > 1.0)
                    cur.fail("confidence out of [0,1]");
                cur.expect_close();
                cycle.objects.push_back(std::move(obj));
            }
            cur.expect_close();
            if (!wm.cycles.empty() && cycle.time <= wm.cycles.back().time) {
                if (opts.strict) cur.fail("cycle time not increasing");
                ++wm.skipped_lines;  // tolerant: keep first
                continue;
            }
            wm.cycles.push_back(std::move(cycle));
        } catch (const ParseError&) {
            if (opts.strict) throw;
            ++wm.skipped_lines;
        }
    }
    if (!owner_seen)
        throw Error(ErrorCode::parse, "dump missing (wm-owner ...) header");
    return wm;
}

std::string render_wm_dump(const WmSeries& wm) {
    std::string out = "(wm-owner ";
    out += side_char(wm.owner.side);
    out += ' ';
    out += std::to_string(wm.owner.unum);
    out += ")\n";
    for (const auto& c : wm.cycles) {
        out += "(wm " + std::to_string(c.time);
        for (const auto& o : c.objects) {
            switch (o.kind) {
            case WmObject::Kind::self:
                out += " (self ";
                append_double(out, o.pos.x);
                out += ' ';
                append_double(out, o.pos.y);
                out += ' ';
                append_double(out, o.vel ? o.vel->x : 0.0);
                out += ' ';
                append_double(out, o.vel ? o.vel->y : 0.0);
                out += ' ';
                append_double(out, o.body_dir.value_or(0.0));
                out += ')';
                break;
            case WmObject::Kind::ball:
                out += " (b ";
                append_double(out, o.pos.x);
                out += ' ';
                append_double(out, o.pos.y);
                out += ' ';
                append_double(out, o.vel ? o.vel->x : 0.0);
                out += ' ';
                append_double(out, o.vel ? o.vel->y : 0.0);
                out += ' ';
                append_double(out, o.confidence);
                out += ')';
                break;
            case WmObject::Kind::player:
                out += " (p ";
                out += side_char(o.player.side);
                out += ' ';
                out += std::to_string(o.player.unum);
                out += ' ';
                append_double(out, o.pos.x);
                out += ' ';
                append_double(out, o.pos.y);
                out += ' ';
                append_double(out, o.vel ? o.vel->x : 0.0);
                out += ' ';
                append_double(out, o.vel ? o.vel->y : 0.0);
                out += ' ';
                append_double(out, o.confidence);
                out += ')';
                break;
            }
        }
        out += ")\n";
    }
    return out;
}

namespace {

WmCycle cycle_from_truth(const rcg::ShowFrame& f, PlayerId owner) {
    WmCycle c;
    c.time = f.time;
    WmObject ball;
    ball.kind = WmObject::Kind::ball;
    ball.pos = f.ball.pos;
    ball.vel = f.ball.vel;
    ball.confidence = 0.0;  // marker: substituted, not an agent belief
    c.objects.push_back(ball);
    for (const auto& p : f.players) {
        WmObject o;
        if (p.id == owner) {
            o.kind = WmObject::Kind::self;
            o.body_dir = p.body_dir;
        } else {
            o.kind = WmObject::Kind::player;
            o.player = p.id;
        }
        o.pos = p.pos;
        o.vel = p.vel;
        o.confidence = 0.0;
        c.objects.push_back(o);
    }
    return c;
}

} // namespace

WmSeries fill_missing(const WmSeries& wm, const rcg::MatchRecord* truth, FillPolicy policy,
                      long from, long to) {
    if (policy == FillPolicy::real && !truth)
        throw Error(ErrorCode::usage, "fill policy 'real' requires a truth match");
    if (from > to) throw Error(ErrorCode::usage, "empty fill horizon");

    WmSeries out;
    out.owner = wm.owner;
    out.skipped_lines = wm.skipped_lines;
    const WmCycle* last = nullptr;
    for (long t = from; t <= to; ++t) {
        if (const WmCycle* c = wm.at(t)) {
            out.cycles.push_back(*c);
            last = c;
            continue;
        }
        switch (policy) {
        case FillPolicy::real: {
            const rcg::ShowFrame* f = truth->frame_at(t);
            if (!f)
                throw Error(ErrorCode::usage,
                            "truth match does not cover cycle " + std::to_string(t));
            out.cycles.push_back(cycle_from_truth(*f, wm.owner));
            break;
        }
        case FillPolicy::hold: {
            WmCycle c;
            c.time = t;
            if (last) c.objects = last->objects;
            out.cycles.push_back(std::move(c));
            break;
        }
        case FillPolicy::skip:
            break;
        }
    }
    return out;
}

std::string emit_rcg(const WmSeries& wm, const rcg::MatchRecord* meta) {
    std::vector<rcg::Entry> entries;

    // playmode/team meta first, merged by time with the show frames below
    std::vector<std::pair<long, rcg::Entry>> meta_entries;
    long horizon_end = wm.cycles.empty() ? 0 : wm.cycles.back().time;
    if (meta) {
        for (const auto& e : meta->entries) {
            if (const auto* pm = std::get_if<rcg::PlayModeChange>(&e)) {
                if (pm->time <= horizon_end) meta_entries.emplace_back(pm->time, e);
            } else if (const auto* ti = std::get_if<rcg::TeamInfo>(&e)) {
                if (ti->time <= horizon_end) meta_entries.emplace_back(ti->time, e);
            }
        }
    }
    std::size_t mi = 0;

    for (const auto& c : wm.cycles) {
        while (mi < meta_entries.size() && meta_entries[mi].first <= c.time)
            entries.push_back(meta_entries[mi++].second);

        rcg::ShowFrame f;
        f.time = c.time;
        bool have_ball = false;
        for (const auto& o : c.objects) {
            if (o.kind == WmObject::Kind::ball) {
                f.ball.pos = o.pos;
                f.ball.vel = o.vel.value_or(Vec2{});
                have_ball = true;
                continue;
            }
            PlayerId id = o.kind == WmObject::Kind::self ? wm.owner : o.player;
            if (f.player(id)) continue;  // self beats a duplicate (p ...) entry
            rcg::PlayerSnapshot p;
            p.id = id;
            p.state = 0x1;  // stand
            p.pos = o.pos;
            p.vel = o.vel.value_or(Vec2{});
            p.body_dir = o.body_dir.value_or(0.0);
            p.stamina_capacity = std::nullopt;
            f.players.push_back(std::move(p));
        }
        if (!have_ball) f.ball = {};  // format needs a ball clause; origin marks "unknown"
        std::sort(f.players.begin(), f.players.end(),
                  [](const rcg::PlayerSnapshot& a, const rcg::PlayerSnapshot& b) {
                      return a.id < b.id;
                  });
        entries.emplace_back(std::move(f));
    }
    while (mi < meta_entries.size()) entries.push_back(meta_entries[mi++].second);

    std::string out = "ULG5\n";
    for (const auto& e : entries) {
        out += rcg::serialize_entry(e, 5);
        out += '\n';
    }
    return out;
}

std::vector<DiffRow> diff_vs_truth(const WmSeries& wm, const rcg::MatchRecord& truth) {
    std::vector<DiffRow> rows;
    for (const auto& c : wm.cycles) {
        const rcg::ShowFrame* f = truth.frame_at(c.time);
        if (!f)
            throw Error(ErrorCode::usage,
                        "truth match does not cover cycle " + std::to_string(c.time));

        std::vector<PlayerId> believed;
        for (const auto& o : c.objects) {
            DiffRow row;
            row.time = c.time;
            row.flag = "ok";
            if (o.kind == WmObject::Kind::ball) {
                row.object = "ball";
                row.err_pos = dist(o.pos, f->ball.pos);
                if (o.vel) row.err_vel = dist(*o.vel, f->ball.vel);
            } else {
                PlayerId id = o.kind == WmObject::Kind::self ? wm.owner : o.player;
                believed.push_back(id);
                row.object = to_string(id);
                if (const rcg::PlayerSnapshot* p = f->player(id)) {
                    row.err_pos = dist(o.pos, p->pos);
                    if (o.vel) row.err_vel = dist(*o.vel, p->vel);
                } else {
                    row.flag = "ghost";
                }
            }
            rows.push_back(std::move(row));
        }
        for (const auto& p : f->players) {
            if (std::find(believed.begin(), believed.end(), p.id) != believed.end()) continue;
            rows.push_back({c.time, to_string(p.id), std::nullopt, std::nullopt, "missing"});
        }
    }
    return rows;
}

std::string diff_csv(std::span<const DiffRow> rows) {
    std::string out = "time,object,err_pos,err_vel,flag\n";
    for (const auto& r : rows) {
        out += std::to_string(r.time);
        out += ',';
        out += r.object;
        out += ',';
        if (r.err_pos) append_double(out, *r.err_pos);
        out += ',';
        if (r.err_vel) append_double(out, *r.err_vel);
        out += ',';
        out += r.flag;
        out += '\n';
    }
    return out;
}

WmSeries dump_from_match(const rcg::MatchRecord& match, PlayerId owner, double noise_sigma,
                         std::uint64_t seed) {
    WmSeries wm;
    wm.owner = owner;
    std::mt19937_64 rng(seed);
    long prev = -1;
    for (std::size_t i = 0; i < match.frame_count(); ++i) {
        const rcg::ShowFrame& f = match.frame(i);
        if (f.time == prev) continue;
        prev = f.time;
        WmCycle c = cycle_from_truth(f, owner);
        for (auto& o : c.objects) {
            o.confidence = 1.0;
            if (noise_sigma > 0.0) {
                o.pos.x += noise_sigma * gaussian(rng);
                o.pos.y += noise_sigma * gaussian(rng);
            }
        }
        wm.cycles.push_back(std::move(c));
    }
    return wm;
}

} // namespace rcsskit::wmv
