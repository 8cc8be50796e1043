#include "rcl.hpp"

#include <charconv>

#include "error.hpp"
#include "sexpr.hpp"

namespace rcsskit::rcl {

namespace {

CommandKind kind_of(std::string_view head) {
    if (head == "kick") return CommandKind::kick;
    if (head == "dash") return CommandKind::dash;
    if (head == "turn") return CommandKind::turn;
    if (head == "tackle") return CommandKind::tackle;
    if (head == "catch") return CommandKind::catch_ball;
    if (head == "move") return CommandKind::move;
    if (head == "turn_neck") return CommandKind::turn_neck;
    if (head == "change_view") return CommandKind::change_view;
    if (head == "say") return CommandKind::say;
    if (head == "pointto") return CommandKind::pointto;
    if (head == "attentionto") return CommandKind::attentionto;
    return CommandKind::other;
}

// One parenthesized command starting at cur; the caller captures raw text.
BodyCommand parse_command(TokenCursor& cur) {
    cur.expect_open();
    std::string_view head = cur.atom();
    BodyCommand cmd;
    cmd.kind = kind_of(head);
    switch (cmd.kind) {
    case CommandKind::kick:
    case CommandKind::move:
        cmd.a = cur.number();
        cmd.b = cur.number();
        cmd.has_b = true;
        break;
    case CommandKind::dash:
        cmd.a = cur.number();
        if (!cur.at_close()) {
            cmd.b = cur.number();
            cmd.has_b = true;
        }
        break;
    case CommandKind::turn:
    case CommandKind::catch_ball:
        cmd.a = cur.number();
        break;
    case CommandKind::tackle: {
        cmd.a = cur.number();
        if (!cur.at_close()) {
            std::string_view f = cur.atom();
            cmd.foul = (f == "on" || f == "true" || f == "1");
        }
        break;
    }
    default:
        // payload kept raw only
        while (!cur.at_close()) {
            if (cur.at_open()) cur.skip_clause();
            else cur.atom();
        }
        break;
    }
    // tolerate extra args on known kinds
    while (!cur.at_close()) {
        if (cur.at_open()) cur.skip_clause();
        else cur.atom();
    }
    cur.expect_close();
    return cmd;
}

} // namespace

std::optional<Side> CommandLog::side_of(const std::string& team) const {
    auto it = team_side_map.find(team);
    if (it == team_side_map.end()) return std::nullopt;
    return it->second;
}

std::optional<PlayerId> CommandLog::player_of(const CommandRecord& rec) const {
    auto side = side_of(rec.team);
    if (!side || rec.unum < 1 || rec.unum > 11) return std::nullopt;
    return PlayerId{*side, rec.unum};
}

CommandLog parse_rcl(std::string_view text, const rcg::ParseOptions& opts) {
    CommandLog log;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        ++log.total_lines;

        TokenCursor cur(line, line_no);
        if (cur.at_end()) {
            ++log.blank_lines;
            continue;
        }
        try {
            // "<time>[,<stopped>]" then either "(referee <token>)" or
            // "<Recv|Send> <team>_<unum>: (cmd ...)(cmd ...)"
            if (cur.at_open()) throw ParseError("line lacks a leading time", line_no);
            std::string_view ttok = cur.atom();
            long time = 0, stopped = 0;
            {
                auto comma = ttok.find(',');
                std::string_view tpart = ttok.substr(0, comma);
                auto [p1, e1] = std::from_chars(tpart.data(), tpart.data() + tpart.size(), time);
                if (e1 != std::errc{} || p1 != tpart.data() + tpart.size())
                    throw ParseError("bad time token", line_no);
                if (comma != std::string_view::npos) {
                    std::string_view spart = ttok.substr(comma + 1);
                    auto [p2, e2] =
                        std::from_chars(spart.data(), spart.data() + spart.size(), stopped);
                    if (e2 != std::errc{} || p2 != spart.data() + spart.size())
                        throw ParseError("bad stopped-time token", line_no);
                }
            }

            if (cur.at_open()) {
                cur.expect_open();
                std::string_view head = cur.atom();
                if (head != "referee") throw ParseError("not a referee line", line_no);
                std::string_view token = cur.atom();
                cur.expect_close();
                log.referee_events.push_back({time, std::string(token)});
                ++log.referee_lines;
                continue;
            }

            std::string_view dir_tok = cur.atom();
            Direction dir;
            if (dir_tok == "Recv") dir = Direction::recv;
            else if (dir_tok == "Send") dir = Direction::send;
            else throw ParseError("expected Recv or Send", line_no);

            std::string_view who = cur.atom();
            if (who.empty() || who.back() != ':')
                throw ParseError("expected '<team>_<unum>:'", line_no);
            who.remove_suffix(1);
            auto us = who.rfind('_');
            if (us == std::string_view::npos || us == 0 || us + 1 >= who.size())
                throw ParseError("expected '<team>_<unum>:'", line_no);
            std::string_view unum_part = who.substr(us + 1);
            int unum = 0;
            auto [pu, eu] =
                std::from_chars(unum_part.data(), unum_part.data() + unum_part.size(), unum);
            if (eu != std::errc{} || pu != unum_part.data() + unum_part.size() || unum < 1 ||
                unum > 11)
                throw ParseError("bad unum '" + std::string(unum_part) + "'", line_no);
            std::string team(who.substr(0, us));

            bool any = false;
            while (!cur.at_end()) {
                if (!cur.at_open()) throw ParseError("expected command clause", line_no);
                std::size_t start = cur.pos();
                BodyCommand cmd = parse_command(cur);
                std::size_t end = cur.pos();
                cmd.raw = std::string(line.substr(start, end - start));
                log.records.push_back({time, stopped, dir, team, unum, std::move(cmd)});
                any = true;
            }
            if (!any) throw ParseError("record without commands", line_no);
            ++log.command_lines;
        } catch (const ParseError&) {
            if (opts.strict) throw;
            ++log.skipped_lines;
        }
    }
    return log;
}

void bind_sides(CommandLog& log, const rcg::MatchRecord& match) {
    if (!match.teams)
        throw Error(ErrorCode::usage, "cannot bind command log: match has no team entry");
    log.team_side_map.clear();
    if (!match.teams->name_left.empty())
        log.team_side_map[match.teams->name_left] = Side::left;
    if (!match.teams->name_right.empty())
        log.team_side_map[match.teams->name_right] = Side::right;
    for (const auto& rec : log.records) {
        if (!log.team_side_map.contains(rec.team))
            throw Error(ErrorCode::usage, "unknown team '" + rec.team + "' in command log");
    }
}

} // namespace rcsskit::rcl
