#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"

namespace rcsskit {

enum class PlayModeKind {
    play_on,
    kick_off,
    kick_in,
    free_kick,
    corner_kick,
    goal_kick,
    goal,
    goalie_catch_ball,
    offside,
    foul_charge,
    before_kick_off,
    time_over,
    half_time,
    drop_ball,
    free_kick_fault,
    back_pass,
    catch_fault,
    indirect_free_kick,
    illegal_defense,
    penalty_setup,
    penalty_ready,
    penalty_taken,
    penalty_miss,
    penalty_score,
    penalty_onfield,
    penalty_foul,
    penalty_winner,
    penalty_draw,
    unknown,
};

/// Referee game state. `raw` holds the original token only for unknown
/// kinds, so logs from newer servers survive a parse/serialize cycle.
struct PlayMode {
    PlayModeKind kind = PlayModeKind::unknown;
    Side side = Side::neutral;
    std::string raw;

    friend bool operator==(const PlayMode&, const PlayMode&) = default;
};

/// Total: unrecognized tokens map to unknown(raw), never an error.
PlayMode parse_playmode(std::string_view token);
std::string render_playmode(const PlayMode& m);

/// Every token render/parse round-trips over; used by property tests.
const std::vector<std::string>& playmode_vocabulary();

} // namespace rcsskit
