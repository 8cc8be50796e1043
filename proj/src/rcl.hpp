#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "rcg.hpp"

namespace rcsskit::rcl {

enum class CommandKind {
    kick,
    dash,
    turn,
    tackle,
    catch_ball,
    move,
    turn_neck,
    change_view,
    say,
    pointto,
    attentionto,
    other,
};

/// One body command. Numeric payload is parsed only for the kinds the
/// event engine consumes; `raw` always preserves the original text.
struct BodyCommand {
    CommandKind kind = CommandKind::other;
    std::string raw;
    double a = 0.0;       // kick/dash power, turn moment, tackle arg, catch dir, move x
    double b = 0.0;       // kick/dash dir, move y
    bool has_b = false;
    bool foul = false;    // tackle foul flag
    friend bool operator==(const BodyCommand&, const BodyCommand&) = default;
};

enum class Direction : std::uint8_t { recv, send };

struct CommandRecord {
    long time = 0;
    long stopped = 0;
    Direction direction = Direction::recv;
    std::string team;
    int unum = 0;
    BodyCommand command;
};

struct RefereeEvent {
    long time = 0;
    std::string token;
};

struct CommandLog {
    std::vector<CommandRecord> records;
    std::vector<RefereeEvent> referee_events;
    // line accounting: total = command + referee + blank + skipped
    std::size_t total_lines = 0;
    std::size_t command_lines = 0;
    std::size_t referee_lines = 0;
    std::size_t blank_lines = 0;
    std::size_t skipped_lines = 0;

    std::map<std::string, Side> team_side_map;  // filled by bind_sides

    std::optional<Side> side_of(const std::string& team) const;
    std::optional<PlayerId> player_of(const CommandRecord& rec) const;
};

/// Tolerant by default: unmatched lines (coach chatter, init replies, ...)
/// are skipped and counted. A line may carry several commands; each
/// becomes one record.
CommandLog parse_rcl(std::string_view text, const rcg::ParseOptions& opts = {});

/// Resolves team names against the match's team entry so records map to
/// PlayerIds. Throws Error(usage) when the match has no team entry or a
/// record's team matches neither side.
void bind_sides(CommandLog& log, const rcg::MatchRecord& match);

} // namespace rcsskit::rcl
