#include "field.hpp"

#include <charconv>

namespace rcsskit {

std::string to_string(PlayerId id) {
    return std::string(1, side_char(id.side)) + std::to_string(id.unum);
}

std::optional<PlayerId> parse_player_id(std::string_view s) {
    if (s.size() < 2) return std::nullopt;
    Side side;
    if (s[0] == 'l') side = Side::left;
    else if (s[0] == 'r') side = Side::right;
    else return std::nullopt;
    int unum = 0;
    auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), unum);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    if (unum < 1 || unum > 11) return std::nullopt;
    return PlayerId{side, unum};
}

} // namespace rcsskit
