#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rcsskit {

/// 2D point/vector in field coordinates: origin at pitch center,
/// +x toward the right goal, +y toward the bottom of the screen.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    double norm() const { return std::hypot(x, y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

enum class Side : std::uint8_t { left, right, neutral };

inline Side opposite(Side s) {
    if (s == Side::left) return Side::right;
    if (s == Side::right) return Side::left;
    return Side::neutral;
}

inline char side_char(Side s) {
    return s == Side::left ? 'l' : s == Side::right ? 'r' : 'n';
}

/// Uniform number identity: side is left or right, unum 1..11.
struct PlayerId {
    Side side = Side::left;
    int unum = 1;

    auto operator<=>(const PlayerId&) const = default;
};

std::string to_string(PlayerId id);                          // "l7", "r11"
std::optional<PlayerId> parse_player_id(std::string_view s); // inverse

/// Server geometry and physics constants the analyzers depend on.
/// Defaults are the rcssserver v15 values; kickable_area is
/// player_size + ball_size + kickable_margin.
struct FieldSpec {
    double length = 105.0;
    double width = 68.0;
    double goal_half_width = 7.01;
    double kickable_area = 1.085;
    double tackle_dist = 2.0;
    double ball_decay = 0.94;

    bool valid() const {
        return length > 0 && width > 0 && goal_half_width > 0 && kickable_area > 0 &&
               tackle_dist > 0 && ball_decay > 0 && kickable_area < tackle_dist;
    }
};

/// Axis-aligned rectangle, closed on all four boundaries.
struct Region {
    Vec2 min;
    Vec2 max;

    bool valid() const { return min.x <= max.x && min.y <= max.y; }
    friend bool operator==(const Region&, const Region&) = default;

    static Region full_field(const FieldSpec& f) {
        return {{-f.length / 2, -f.width / 2}, {f.length / 2, f.width / 2}};
    }
};

inline bool point_in_region(Vec2 p, const Region& r) {
    return r.min.x <= p.x && p.x <= r.max.x && r.min.y <= p.y && p.y <= r.max.y;
}

inline bool kickable(Vec2 player_pos, Vec2 ball_pos, const FieldSpec& spec) {
    return dist(player_pos, ball_pos) <= spec.kickable_area;
}

} // namespace rcsskit
