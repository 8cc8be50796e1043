#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"

namespace rcsskit::kalman {

/// Constant-acceleration filter configuration; one instance covers both
/// axes. sigma_a scales the white-noise-acceleration process covariance,
/// sigma_z is the measurement noise std in meters.
struct FilterConfig {
    double dt = 1.0;
    double sigma_a = 0.05;
    double sigma_z = 0.3;
    double initial_cov = 100.0;

    bool valid() const { return dt > 0 && sigma_a >= 0 && sigma_z > 0 && initial_cov > 0; }
};

/// Per-axis state: mean = [position, velocity, acceleration], 3x3
/// covariance kept symmetric PSD (Joseph-form updates).
struct AxisState {
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    Eigen::Matrix3d cov = Eigen::Matrix3d::Identity();
};

/// mean <- F mean, cov <- F cov F' + Q with
/// F = [[1,dt,dt^2/2],[0,1,dt],[0,0,1]], Q = sigma_a^2 G G', G = [dt^2/2, dt, 1]'.
AxisState predict(const AxisState& s, const FilterConfig& c);

struct Updated {
    AxisState state;
    double gain_pos = 0.0;  // position component of the Kalman gain
};

/// Scalar position measurement update, Joseph-form covariance.
/// Throws Error(internal) if the innovation variance degenerates.
Updated update(const AxisState& s, double z, const FilterConfig& c);

struct FilterState {
    AxisState x;
    AxisState y;
    double gain_x = 0.0;  // refreshed by the most recent update
    double gain_y = 0.0;
    long time = 0;

    double gamma() const { return 0.5 * (gain_x + gain_y); }

    static FilterState init(Vec2 pos, const FilterConfig& c);
};

/// One cycle: predict both axes, then update when a measurement is
/// present (missing observations leave the gains untouched).
FilterState step(const FilterState& fs, const std::optional<Vec2>& obs, const FilterConfig& c);

struct FilterRun {
    std::vector<Vec2> estimates;   // posterior (or predicted) position per cycle
    std::vector<double> gamma;     // mean of the two axes' position gains
};

/// Filters a whole series. The state is seeded at the first available
/// observation with a diffuse covariance. Throws Error(usage) when the
/// series carries no measurement at all.
FilterRun run_filter(std::span<const std::optional<Vec2>> observations, const FilterConfig& c);

/// Position gain at the Riccati fixpoint, iterated from initial_cov * I
/// until the change drops below 1e-12. sigma_a == 0 short-circuits to the
/// analytic limit 0. Throws Error(internal) after 1e6 iterations.
double steady_state_gain(const FilterConfig& c);

struct TrajectorySample {
    long time = 0;
    Vec2 truth;
    std::optional<Vec2> observed;
    std::optional<Vec2> estimated;
    std::optional<double> gamma;
};

struct SimParams {
    long cycles = 1000;
    std::uint64_t seed = 0;
    long segment_len = 50;     // cycles between acceleration re-draws
    double accel_mag = 0.05;   // uniform accel bound, m/cycle^2
    double dropout = 0.0;      // probability of a missing observation

    bool valid() const {
        return cycles >= 1 && segment_len >= 1 && accel_mag >= 0 && dropout >= 0 && dropout < 1;
    }
};

/// Synthetic 2D trajectory: piecewise-constant acceleration, velocity
/// clamped to +-1.05 m/cycle, position reflected at the field bounds.
/// Observations are truth + N(0, sigma_z^2) per axis, dropped with the
/// given probability. Deterministic for a fixed seed.
std::vector<TrajectorySample> simulate(const FilterConfig& c, const SimParams& p);

/// Root mean squared Euclidean distance; throws Error(usage) on length
/// mismatch or empty input.
double rmse(std::span<const Vec2> a, std::span<const Vec2> b);

struct SimSummary {
    double rmse_observed = 0.0;   // over cycles with an observation
    double rmse_estimated = 0.0;  // over all cycles
    double final_gamma = 0.0;
    double steady_gain = 0.0;
};

/// Runs the filter over the samples' observations, filling estimated and
/// gamma in place, and returns the error summary.
SimSummary attach_estimates(std::vector<TrajectorySample>& samples, const FilterConfig& c);

// CSV interface: header "time,truth_x,truth_y,obs_x,obs_y,est_x,est_y,gamma",
// empty cells for missing values.
std::string to_csv(std::span<const TrajectorySample> samples);
std::vector<TrajectorySample> from_csv(std::string_view text);

} // namespace rcsskit::kalman
