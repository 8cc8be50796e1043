#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "events.hpp"
#include "field.hpp"
#include "rcg.hpp"

namespace rcsskit::analytics {

/// Exact rational share; kept as cycle counts so sums are exact.
struct Share {
    long long num = 0;
    long long den = 1;

    double value() const { return den != 0 ? static_cast<double>(num) / den : 0.0; }
    /// Fixed 4-fraction-digit decimal used by both render formats.
    std::string decimal() const;
    friend bool operator==(const Share&, const Share&) = default;
};

struct PossessionReport {
    std::optional<Region> scope;
    long cycles_considered = 0;
    Share left;
    Share right;
    Share contested;
    std::map<PlayerId, Share> per_player;
    friend bool operator==(const PossessionReport&, const PossessionReport&) = default;
};

struct PlayerStats {
    PlayerId player;
    long passes = 0, passes_completed = 0;
    long shots = 0, shots_scored = 0;
    long tackles = 0, tackles_won = 0;
    long catches = 0, catches_held = 0;
    long kicks = 0, dashes = 0, turns = 0, turn_necks = 0, says = 0;

    std::optional<Share> pass_accuracy() const;
    std::optional<Share> shot_accuracy() const;
    std::optional<Share> tackle_accuracy() const;
    std::optional<Share> catch_accuracy() const;
    friend bool operator==(const PlayerStats&, const PlayerStats&) = default;
};

struct TeamStats {
    std::string name;
    int score = 0;
    long passes = 0, passes_completed = 0;
    long shots = 0, shots_scored = 0;
    long tackles = 0, tackles_won = 0;
    long catches = 0, catches_held = 0;
    long kicks = 0, dashes = 0, turns = 0, turn_necks = 0, says = 0;
    friend bool operator==(const TeamStats&, const TeamStats&) = default;
};

struct RegionCounts {
    long kicks = 0, tackles = 0, catches = 0, passes = 0, shots = 0;
    friend bool operator==(const RegionCounts&, const RegionCounts&) = default;
};

struct RegionReport {
    Region region;
    PossessionReport possession;
    RegionCounts counts;
    friend bool operator==(const RegionReport&, const RegionReport&) = default;
};

struct MatchReport {
    int version = 5;
    long first_cycle = 0, last_cycle = 0;
    long frames = 0;
    long skipped_rcg = 0, skipped_rcl = 0;
    TeamStats left, right;
    std::vector<PlayerStats> players;
    PossessionReport possession;  // whole field
    std::vector<RegionReport> regions;
    events::EventLog events;
    friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

/// Last-touch possession over play_on cycles. Cycles before any touch
/// count as contested; a region limits attribution to cycles with the
/// ball inside it. An empty scope yields the degenerate report (all
/// shares 0, contested 1) rather than an error.
PossessionReport possession(const rcg::MatchRecord& match, std::span<const events::Touch> touches,
                            const std::optional<Region>& region = {});

PlayerStats player_stats(const events::EventLog& log, PlayerId player);

/// Events falling in the region, anchored at the touch ball position for
/// kicks/tackles/catches, the kicker position for passes, and the shooter
/// position for shots.
RegionCounts region_event_counts(const events::EventLog& log, const Region& region);

MatchReport build_report(const rcg::MatchRecord& match, const events::EventLog& log,
                         std::span<const Region> regions = {},
                         std::optional<PlayerId> only_player = {}, long skipped_rcl = 0);

std::string render_text(const MatchReport& report);
std::string render_json(const MatchReport& report);
MatchReport load_json(std::string_view text);  // inverse of render_json

} // namespace rcsskit::analytics
