#include "playmode.hpp"

#include <array>
#include <utility>

namespace rcsskit {

namespace {

using Kv = std::pair<std::string_view, PlayModeKind>;

// Tokens that never carry a side suffix.
constexpr std::array sideless_tokens{
    Kv{"play_on", PlayModeKind::play_on},
    Kv{"before_kick_off", PlayModeKind::before_kick_off},
    Kv{"time_over", PlayModeKind::time_over},
    Kv{"half_time", PlayModeKind::half_time},
    Kv{"drop_ball", PlayModeKind::drop_ball},
    Kv{"penalty_draw", PlayModeKind::penalty_draw},
};

// Base names that appear as "<base>_l" / "<base>_r".
constexpr std::array sided_bases{
    Kv{"kick_off", PlayModeKind::kick_off},
    Kv{"kick_in", PlayModeKind::kick_in},
    Kv{"free_kick", PlayModeKind::free_kick},
    Kv{"corner_kick", PlayModeKind::corner_kick},
    Kv{"goal_kick", PlayModeKind::goal_kick},
    Kv{"goal", PlayModeKind::goal},
    Kv{"goalie_catch_ball", PlayModeKind::goalie_catch_ball},
    Kv{"offside", PlayModeKind::offside},
    Kv{"foul_charge", PlayModeKind::foul_charge},
    Kv{"free_kick_fault", PlayModeKind::free_kick_fault},
    Kv{"back_pass", PlayModeKind::back_pass},
    Kv{"catch_fault", PlayModeKind::catch_fault},
    Kv{"indirect_free_kick", PlayModeKind::indirect_free_kick},
    Kv{"illegal_defense", PlayModeKind::illegal_defense},
    Kv{"penalty_setup", PlayModeKind::penalty_setup},
    Kv{"penalty_ready", PlayModeKind::penalty_ready},
    Kv{"penalty_taken", PlayModeKind::penalty_taken},
    Kv{"penalty_miss", PlayModeKind::penalty_miss},
    Kv{"penalty_score", PlayModeKind::penalty_score},
    Kv{"penalty_onfield", PlayModeKind::penalty_onfield},
    Kv{"penalty_foul", PlayModeKind::penalty_foul},
    Kv{"penalty_winner", PlayModeKind::penalty_winner},
};

std::string_view base_name(PlayModeKind kind) {
    for (auto [name, k] : sideless_tokens)
        if (k == kind) return name;
    for (auto [name, k] : sided_bases)
        if (k == kind) return name;
    return "unknown";
}

} // namespace

PlayMode parse_playmode(std::string_view token) {
    for (auto [name, kind] : sideless_tokens)
        if (token == name) return {kind, Side::neutral, {}};

    if (token.size() > 2 && token[token.size() - 2] == '_') {
        char c = token.back();
        if (c == 'l' || c == 'r') {
            std::string_view base = token.substr(0, token.size() - 2);
            for (auto [name, kind] : sided_bases)
                if (base == name)
                    return {kind, c == 'l' ? Side::left : Side::right, {}};
        }
    }
    return {PlayModeKind::unknown, Side::neutral, std::string(token)};
}

std::string render_playmode(const PlayMode& m) {
    if (m.kind == PlayModeKind::unknown) return m.raw;
    std::string out{base_name(m.kind)};
    if (m.side == Side::left) out += "_l";
    else if (m.side == Side::right) out += "_r";
    return out;
}

const std::vector<std::string>& playmode_vocabulary() {
    static const std::vector<std::string> vocab = [] {
        std::vector<std::string> v;
        for (auto [name, kind] : sideless_tokens) v.emplace_back(name);
        for (auto [name, kind] : sided_bases) {
            v.emplace_back(std::string(name) + "_l");
            v.emplace_back(std::string(name) + "_r");
        }
        return v;
    }();
    return vocab;
}

} // namespace rcsskit
