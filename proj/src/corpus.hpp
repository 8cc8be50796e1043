#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace rcsskit::corpus {

enum class EventKind { pass, shot, tackle, catch_ball };

/// One scripted, labeled event. Outcomes: pass completed|intercepted|
/// out_of_play|expired (receiver closes completed/intercepted passes),
/// shot goal|saved|blocked|off_target, tackle/catch success|failure.
struct ScriptedEvent {
    EventKind kind = EventKind::pass;
    long time = 0;
    PlayerId actor;
    std::optional<PlayerId> receiver;
    std::string outcome;
    friend bool operator==(const ScriptedEvent&, const ScriptedEvent&) = default;
};

struct Script {
    long cycles = 0;
    std::uint64_t seed = 0;
    std::vector<ScriptedEvent> events;
    friend bool operator==(const Script&, const Script&) = default;
};

struct GeneratedMatch {
    std::string rcg;
    std::string rcl;
    std::string labels_json;
    Script labels;  // the script back, normalized
};

Script parse_script_json(std::string_view text);
std::string script_to_json(const Script& script);

/// Renders the script as a physically consistent match: the ball decays
/// exactly between touches, every scripted event is realized with both
/// command and velocity evidence, and nothing else ever touches the
/// ball. Throws Error(usage) "unrealizable script at event N: ..." when
/// the schedule cannot be laid out.
GeneratedMatch generate_match(const Script& script);

/// Random realizable script for corpus tests; deterministic per seed.
Script make_random_script(std::uint64_t seed, int n_events);

} // namespace rcsskit::corpus
