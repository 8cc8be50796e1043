#include "kalman.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "error.hpp"

namespace rcsskit::kalman {

namespace {

Eigen::Matrix3d transition(double dt) {
    Eigen::Matrix3d f;
    f << 1, dt, dt * dt / 2, 0, 1, dt, 0, 0, 1;
    return f;
}

Eigen::Matrix3d process_noise(const FilterConfig& c) {
    Eigen::Vector3d g(c.dt * c.dt / 2, c.dt, 1.0);
    return c.sigma_a * c.sigma_a * (g * g.transpose());
}

// Shared covariance recursion step: predict, compute gain, Joseph update.
// Returns the position gain.
double riccati_step(Eigen::Matrix3d& p, const Eigen::Matrix3d& f, const Eigen::Matrix3d& q,
                    double r) {
    p = f * p * f.transpose() + q;
    double s = p(0, 0) + r;
    Eigen::Vector3d k = p.col(0) / s;
    Eigen::Matrix3d a = Eigen::Matrix3d::Identity();
    a.col(0) -= k;
    p = a * p * a.transpose() + (k * k.transpose()) * r;
    return k(0);
}

// 53-bit uniform in [0,1) from raw engine output; distributions are
// hand-rolled so identical seeds give identical bytes on any platform.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

void append_cell(std::string& out, const std::optional<double>& v) {
    out += ',';
    if (!v) return;
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, *v);
    out.append(buf, p);
}

} // namespace

AxisState predict(const AxisState& s, const FilterConfig& c) {
    Eigen::Matrix3d f = transition(c.dt);
    AxisState out;
    out.mean = f * s.mean;
    out.cov = f * s.cov * f.transpose() + process_noise(c);
    return out;
}

Updated update(const AxisState& s, double z, const FilterConfig& c) {
    double r = c.sigma_z * c.sigma_z;
    double innovation_var = s.cov(0, 0) + r;
    if (!(innovation_var > 0.0))
        throw Error(ErrorCode::internal, "degenerate innovation variance in measurement update");
    Eigen::Vector3d k = s.cov.col(0) / innovation_var;  // cov * H' / S with H = [1,0,0]
    Updated out;
    out.state.mean = s.mean + k * (z - s.mean(0));
    Eigen::Matrix3d a = Eigen::Matrix3d::Identity();
    a.col(0) -= k;
    out.state.cov = a * s.cov * a.transpose() + (k * k.transpose()) * r;
    out.gain_pos = k(0);
    return out;
}

FilterState FilterState::init(Vec2 pos, const FilterConfig& c) {
    FilterState fs;
    fs.x.mean = Eigen::Vector3d(pos.x, 0, 0);
    fs.y.mean = Eigen::Vector3d(pos.y, 0, 0);
    fs.x.cov = Eigen::Matrix3d::Identity() * c.initial_cov;
    fs.y.cov = fs.x.cov;
    return fs;
}

FilterState step(const FilterState& fs, const std::optional<Vec2>& obs, const FilterConfig& c) {
    FilterState out = fs;
    out.x = predict(fs.x, c);
    out.y = predict(fs.y, c);
    if (obs) {
        Updated ux = update(out.x, obs->x, c);
        Updated uy = update(out.y, obs->y, c);
        out.x = ux.state;
        out.y = uy.state;
        out.gain_x = ux.gain_pos;
        out.gain_y = uy.gain_pos;
    }
    out.time = fs.time + 1;
    return out;
}

FilterRun run_filter(std::span<const std::optional<Vec2>> observations, const FilterConfig& c) {
    const std::optional<Vec2>* first = nullptr;
    for (const auto& o : observations)
        if (o) {
            first = &o;
            break;
        }
    if (!first) throw Error(ErrorCode::usage, "observation series contains no measurements");

    FilterRun run;
    run.estimates.reserve(observations.size());
    run.gamma.reserve(observations.size());
    FilterState fs = FilterState::init(**first, c);
    for (const auto& o : observations) {
        fs = step(fs, o, c);
        run.estimates.push_back({fs.x.mean(0), fs.y.mean(0)});
        run.gamma.push_back(fs.gamma());
    }
    return run;
}

double steady_state_gain(const FilterConfig& c) {
    if (c.sigma_a == 0.0) return 0.0;  // zero process noise: covariance and gain contract to 0
    Eigen::Matrix3d f = transition(c.dt);
    Eigen::Matrix3d q = process_noise(c);
    double r = c.sigma_z * c.sigma_z;
    Eigen::Matrix3d p = Eigen::Matrix3d::Identity() * c.initial_cov;
    double prev = -1.0;
    for (int i = 0; i < 1000000; ++i) {
        double gain = riccati_step(p, f, q, r);
        if (std::abs(gain - prev) < 1e-12) return gain;
        prev = gain;
    }
    throw Error(ErrorCode::internal, "steady-state gain iteration did not converge");
}

std::vector<TrajectorySample> simulate(const FilterConfig& c, const SimParams& p) {
    if (!p.valid()) throw Error(ErrorCode::usage, "invalid simulation parameters");
    if (!c.valid()) throw Error(ErrorCode::usage, "invalid filter configuration");

    constexpr double max_speed = 1.05;  // about the rcss player speed cap
    const double xlim = 52.5, ylim = 34.0;
    std::mt19937_64 rng(p.seed);

    std::vector<TrajectorySample> out;
    out.reserve(p.cycles);
    Vec2 pos{0, 0}, vel{0, 0}, acc{0, 0};
    for (long t = 0; t < p.cycles; ++t) {
        if (t % p.segment_len == 0) {
            acc.x = uniform(rng, -p.accel_mag, p.accel_mag);
            acc.y = uniform(rng, -p.accel_mag, p.accel_mag);
        }
        vel = vel + acc * c.dt;
        vel.x = std::clamp(vel.x, -max_speed, max_speed);
        vel.y = std::clamp(vel.y, -max_speed, max_speed);
        pos = pos + vel * c.dt;
        if (pos.x > xlim) { pos.x = 2 * xlim - pos.x; vel.x = -vel.x; }
        if (pos.x < -xlim) { pos.x = -2 * xlim - pos.x; vel.x = -vel.x; }
        if (pos.y > ylim) { pos.y = 2 * ylim - pos.y; vel.y = -vel.y; }
        if (pos.y < -ylim) { pos.y = -2 * ylim - pos.y; vel.y = -vel.y; }

        TrajectorySample s;
        s.time = t;
        s.truth = pos;
        double nx = gaussian(rng);
        double ny = gaussian(rng);
        double drop = uniform01(rng);
        if (drop >= p.dropout)
            s.observed = Vec2{pos.x + c.sigma_z * nx, pos.y + c.sigma_z * ny};
        out.push_back(s);
    }
    return out;
}

double rmse(std::span<const Vec2> a, std::span<const Vec2> b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::usage, "rmse: series lengths differ");
    if (a.empty()) throw Error(ErrorCode::usage, "rmse: empty series");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Vec2 d = a[i] - b[i];
        sum += d.x * d.x + d.y * d.y;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

SimSummary attach_estimates(std::vector<TrajectorySample>& samples, const FilterConfig& c) {
    std::vector<std::optional<Vec2>> obs;
    obs.reserve(samples.size());
    for (const auto& s : samples) obs.push_back(s.observed);
    FilterRun run = run_filter(obs, c);

    std::vector<Vec2> truth_all, est_all, truth_obs, observed;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i].estimated = run.estimates[i];
        samples[i].gamma = run.gamma[i];
        truth_all.push_back(samples[i].truth);
        est_all.push_back(run.estimates[i]);
        if (samples[i].observed) {
            truth_obs.push_back(samples[i].truth);
            observed.push_back(*samples[i].observed);
        }
    }
    SimSummary summary;
    summary.rmse_observed = rmse(observed, truth_obs);
    summary.rmse_estimated = rmse(est_all, truth_all);
    summary.final_gamma = run.gamma.back();
    summary.steady_gain = steady_state_gain(c);
    return summary;
}

std::string to_csv(std::span<const TrajectorySample> samples) {
    std::string out = "time,truth_x,truth_y,obs_x,obs_y,est_x,est_y,gamma\n";
    for (const auto& s : samples) {
        char buf[24];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, s.time);
        out.append(buf, p);
        append_cell(out, s.truth.x);
        append_cell(out, s.truth.y);
        append_cell(out, s.observed ? std::optional(s.observed->x) : std::nullopt);
        append_cell(out, s.observed ? std::optional(s.observed->y) : std::nullopt);
        append_cell(out, s.estimated ? std::optional(s.estimated->x) : std::nullopt);
        append_cell(out, s.estimated ? std::optional(s.estimated->y) : std::nullopt);
        append_cell(out, s.gamma);
        out += '\n';
    }
    return out;
}

std::vector<TrajectorySample> from_csv(std::string_view text) {
    std::vector<TrajectorySample> out;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (header) {
            if (!line.starts_with("time,"))
                throw ParseError("csv header row missing", 1);
            header = false;
            continue;
        }
        std::array<std::optional<double>, 8> cells;
        std::size_t cell = 0, start = 0;
        for (std::size_t i = 0; i <= line.size() && cell < cells.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                std::string_view tok = line.substr(start, i - start);
                if (!tok.empty()) {
                    double v = 0;
                    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                    if (ec != std::errc{}) throw ParseError("bad csv number");
                    cells[cell] = v;
                }
                ++cell;
                start = i + 1;
            }
        }
        TrajectorySample s;
        s.time = static_cast<long>(cells[0].value_or(0));
        s.truth = {cells[1].value_or(0), cells[2].value_or(0)};
        if (cells[3] && cells[4]) s.observed = Vec2{*cells[3], *cells[4]};
        if (cells[5] && cells[6]) s.estimated = Vec2{*cells[5], *cells[6]};
        s.gamma = cells[7];
        out.push_back(s);
    }
    return out;
}

} // namespace rcsskit::kalman
