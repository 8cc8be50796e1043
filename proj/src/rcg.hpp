#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "field.hpp"
#include "playmode.hpp"

namespace rcsskit::rcg {

struct ParseOptions {
    bool strict = false;  // strict: throw on malformed lines; tolerant: skip and count
};

struct BallSnapshot {
    Vec2 pos;
    Vec2 vel;  // meters/cycle
    friend bool operator==(const BallSnapshot&, const BallSnapshot&) = default;
};

enum class ViewQuality : std::uint8_t { high, low };

/// One player clause of a (show ...) line, fields as read (angles in
/// degrees, no normalization).
struct PlayerSnapshot {
    PlayerId id;
    int type_id = 0;
    unsigned long long state = 0;  // raw state flags, hex in the file
    Vec2 pos;
    Vec2 vel;
    double body_dir = 0.0;
    double neck_dir = 0.0;
    std::optional<Vec2> pointto;
    ViewQuality view_quality = ViewQuality::high;
    double view_width = 90.0;
    double stamina = 0.0;
    double effort = 1.0;
    double recovery = 1.0;
    std::optional<double> stamina_capacity;  // present in v5 logs
    std::optional<PlayerId> focus;
    // kick dash turn catch move turn_neck change_view say tackle pointto attention
    std::array<long long, 11> counts{};
    friend bool operator==(const PlayerSnapshot&, const PlayerSnapshot&) = default;
};

struct ShowFrame {
    long time = 0;
    long stopped = 0;  // sub-cycle counter, 0 when absent
    BallSnapshot ball;
    std::vector<PlayerSnapshot> players;

    const PlayerSnapshot* player(PlayerId id) const;
    friend bool operator==(const ShowFrame&, const ShowFrame&) = default;
};

struct PlayModeChange {
    long time = 0;
    PlayMode mode;
    friend bool operator==(const PlayModeChange&, const PlayModeChange&) = default;
};

struct TeamInfo {
    long time = 0;
    std::string name_left;
    std::string name_right;
    int score_left = 0;
    int score_right = 0;
    std::vector<long long> penalty;  // optional trailing penalty counters
    friend bool operator==(const TeamInfo&, const TeamInfo&) = default;
};

struct Message {
    long time = 0;
    int board = 1;
    std::string text;  // without the surrounding quotes
    friend bool operator==(const Message&, const Message&) = default;
};

/// server_param / player_param / player_type lines, kept verbatim and
/// echoed byte-identical on serialization. Values are extracted lazily
/// by key lookup when needed.
struct RawParam {
    std::string tag;
    std::string raw;  // the full original line
    friend bool operator==(const RawParam&, const RawParam&) = default;
};

using Entry = std::variant<ShowFrame, PlayModeChange, TeamInfo, Message, RawParam>;

struct MatchRecord {
    int version = 5;
    std::vector<Entry> entries;
    std::size_t skipped_lines = 0;
    std::vector<std::string> warnings;

    // derived indexes
    std::vector<std::size_t> show_index;                   // entry index per frame
    std::vector<std::pair<long, PlayMode>> playmodes;      // timeline in file order
    std::optional<TeamInfo> teams;                         // last team entry seen

    std::size_t frame_count() const { return show_index.size(); }
    const ShowFrame& frame(std::size_t i) const {
        return std::get<ShowFrame>(entries[show_index[i]]);
    }
    /// First frame recorded for the given cycle, or nullptr.
    const ShowFrame* frame_at(long time) const;
    /// Play mode in force at the given cycle (last change at or before it).
    PlayMode mode_at(long time) const;
    /// Numeric server_param lookup on the raw clause, e.g. "ball_decay".
    std::optional<double> server_param(std::string_view key) const;

private:
    friend MatchRecord parse_rcg(std::string_view, const ParseOptions&);
    std::unordered_map<long, std::size_t> frame_by_time_;
};

/// Streaming single-pass parse of rcg text versions 4/5 (header "ULG4"
/// or "ULG5"). A bad header always throws; other malformed lines throw
/// only in strict mode, otherwise they are skipped and counted.
MatchRecord parse_rcg(std::string_view text, const ParseOptions& opts = {});

ShowFrame parse_show_line(std::string_view line, int version = 5, std::size_t line_no = 0);

/// Inverse of the line parsers: output re-parses to an equal entry.
/// Numbers use the shortest representation that survives a round trip.
std::string serialize_entry(const Entry& entry, int version);

/// Whole-file serialization: header plus one line per entry.
std::string serialize_match(const MatchRecord& match);

/// FieldSpec with defaults overridden from the match's server_param.
FieldSpec field_spec_from(const MatchRecord& match);

/// Numeric value of "(key value)" inside a raw parameter clause.
std::optional<double> lookup_param(std::string_view raw, std::string_view key);

} // namespace rcsskit::rcg
