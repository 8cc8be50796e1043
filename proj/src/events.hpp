#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "field.hpp"
#include "rcg.hpp"
#include "rcl.hpp"

namespace rcsskit::events {

enum class TouchKind { kick, tackle, catch_ball };
enum class Evidence { command, velocity, both };

/// A cycle at which one player changed (or commanded to change) the
/// ball's motion. Evidence 'command' alone marks an ineffective action:
/// the command was issued in range but no velocity deviation followed.
struct Touch {
    long time = 0;
    PlayerId player;
    TouchKind kind = TouchKind::kick;
    Vec2 ball_pos;
    Evidence evidence = Evidence::velocity;
    friend bool operator==(const Touch&, const Touch&) = default;
};

enum class PassOutcome { completed, intercepted, out_of_play, expired };

struct PassEvent {
    PlayerId kicker;
    std::optional<PlayerId> receiver;  // toucher that closed the pass
    long start_time = 0;
    long end_time = 0;
    PassOutcome outcome = PassOutcome::expired;
    Vec2 kick_pos;  // kicker position at start_time (region anchor)
    friend bool operator==(const PassEvent&, const PassEvent&) = default;
};

enum class ShotOutcome { goal, saved, blocked, off_target };

struct ShotEvent {
    PlayerId shooter;
    long time = 0;
    Side target_goal = Side::right;  // the goal line the extrapolated ray crosses
    ShotOutcome outcome = ShotOutcome::off_target;
    Vec2 shot_pos;  // shooter position (region anchor)
    double speed = 0.0;
    friend bool operator==(const ShotEvent&, const ShotEvent&) = default;
};

struct TackleRecord {
    PlayerId player;
    long time = 0;
    bool success = false;
    Vec2 ball_pos;
    friend bool operator==(const TackleRecord&, const TackleRecord&) = default;
};

struct CatchRecord {
    PlayerId player;
    long time = 0;
    bool success = false;
    Vec2 ball_pos;
    friend bool operator==(const CatchRecord&, const CatchRecord&) = default;
};

struct CommandCounts {
    long kicks = 0;
    long dashes = 0;
    long turns = 0;
    long turn_necks = 0;
    long says = 0;
    friend bool operator==(const CommandCounts&, const CommandCounts&) = default;
};

struct EventLog {
    std::vector<Touch> touches;
    std::vector<PassEvent> passes;
    std::vector<ShotEvent> shots;
    std::vector<TackleRecord> tackles;
    std::vector<CatchRecord> catches;
    std::map<PlayerId, CommandCounts> commands;  // recv commands per player
    friend bool operator==(const EventLog&, const EventLog&) = default;
};

struct EventConfig {
    double epsilon_touch = 0.05;    // velocity-prediction residual threshold, m/cycle
    long max_pass_window = 40;      // cycles a pass candidate stays open
    double shot_min_speed = 1.5;    // m/cycle post-kick
    double shot_y_tolerance = 1.0;  // goal-segment widening for shot detection, m
};

/// Touch detection over consecutive frames: command evidence (recv
/// kick/tackle/catch from a player in range) beats the kinematic route
/// (residual |vel(t+1) - decay*vel(t)| > epsilon with someone in kickable
/// range); nearest candidate wins, ties break left-side-first then lower
/// unum. At most one touch per cycle. A bound CommandLog is optional.
std::vector<Touch> detect_touches(const rcg::MatchRecord& match, const rcl::CommandLog* cmds,
                                  const FieldSpec& spec, const EventConfig& cfg = {});

/// Pass candidates open at each kick touch (except excluded start times,
/// used to keep shot kicks out) and close per the first of: a touch by
/// another player, a playmode change away from play_on, or window expiry.
/// Another kick by the same player cancels the candidate (dribble).
std::vector<PassEvent> detect_passes(std::span<const Touch> touches,
                                     const rcg::MatchRecord& match, const EventConfig& cfg = {},
                                     const std::set<long>& exclude_start_times = {});

/// A kick touch is a shot when the post-kick ray crosses a goal segment
/// (widened by shot_y_tolerance) at speed >= shot_min_speed. The outcome
/// is the first qualifying event after the kick: goal playmode for the
/// shooter's side, an opponent catch (saved), any other opponent touch
/// (blocked), or a different playmode change / crossing-time expiry
/// (off_target).
std::vector<ShotEvent> detect_shots(std::span<const Touch> touches,
                                    const rcg::MatchRecord& match, const FieldSpec& spec,
                                    const EventConfig& cfg = {});

/// Tackle/catch scoring requires command evidence. Throws Error(usage)
/// when cmds is null.
void score_tackles_catches(const rcl::CommandLog* cmds, const rcg::MatchRecord& match,
                           const FieldSpec& spec, const EventConfig& cfg,
                           std::vector<TackleRecord>& tackles, std::vector<CatchRecord>& catches);

/// Full pipeline: touches, shots, passes (shot kicks excluded from pass
/// candidates so each kick yields one event), tackles/catches when a
/// command log is present, and per-player recv command counts.
EventLog build_event_log(const rcg::MatchRecord& match, const rcl::CommandLog* cmds,
                         const FieldSpec& spec, const EventConfig& cfg = {});

} // namespace rcsskit::events
