#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"
#include "rcg.hpp"

namespace rcsskit::wmv {

/// One believed object in an agent's world model.
struct WmObject {
    enum class Kind { self, ball, player } kind = Kind::ball;
    PlayerId player;  // meaningful for kind == player
    Vec2 pos;
    std::optional<Vec2> vel;
    std::optional<double> body_dir;  // self only
    double confidence = 1.0;
    friend bool operator==(const WmObject&, const WmObject&) = default;
};

struct WmCycle {
    long time = 0;
    std::vector<WmObject> objects;
    friend bool operator==(const WmCycle&, const WmCycle&) = default;
};

/// Sparse per-agent belief series; missing cycles mean "no data".
struct WmSeries {
    PlayerId owner;
    std::vector<WmCycle> cycles;  // strictly increasing times
    std::size_t skipped_lines = 0;
    const WmCycle* at(long time) const;
};

enum class FillPolicy { real, hold, skip };

/// Dump format: line 1 "(wm-owner <l|r> <unum>)", then per cycle
/// "(wm <t> [(self x y vx vy body)] [(b x y vx vy conf)] [(p <l|r> <unum> x y vx vy conf)]*)".
WmSeries parse_wm_dump(std::string_view text, const rcg::ParseOptions& opts = {});
std::string render_wm_dump(const WmSeries& wm);

/// Densifies over [from, to]: 'real' copies truth frames (confidence 0),
/// 'hold' repeats the last belief, 'skip' leaves gaps. Throws
/// Error(usage) when truth is required but missing or does not cover the
/// horizon.
WmSeries fill_missing(const WmSeries& wm, const rcg::MatchRecord* truth, FillPolicy policy,
                      long from, long to);

/// Replayable rcg v5 text: one show frame per present cycle with the
/// believed objects (self mapped to the owner), playmode/team lines
/// copied from meta so the viewer gets score and clock. Unbelieved
/// players are omitted rather than placed at the origin.
std::string emit_rcg(const WmSeries& wm, const rcg::MatchRecord* meta);

struct DiffRow {
    long time = 0;
    std::string object;  // "ball", "l7" (self resolves to the owner id)
    std::optional<double> err_pos;
    std::optional<double> err_vel;
    std::string flag;  // "ok", "ghost" (believed but absent), "missing" (present but unbelieved)
};

/// Per-cycle belief-vs-truth error table over the cycles the agent has
/// data for. Throws Error(usage) when truth lacks one of those cycles.
std::vector<DiffRow> diff_vs_truth(const WmSeries& wm, const rcg::MatchRecord& truth);

/// CSV with header time,object,err_pos,err_vel,flag.
std::string diff_csv(std::span<const DiffRow> rows);

/// Reference dump built from a truth match: the owner's exact view of
/// every object, optionally perturbed by iid Gaussian noise per axis.
WmSeries dump_from_match(const rcg::MatchRecord& match, PlayerId owner, double noise_sigma = 0.0,
                         std::uint64_t seed = 0);

} // namespace rcsskit::wmv
