#pragma once

#include <cstddef>
#include <span>

#include "swarmsim/types.hpp"

namespace swarmsim {

/// Arithmetic mean of agent positions, summed in the given (ascending-id)
/// order for bit-exact reproducibility. Throws std::domain_error when empty.
Vec2 center_of_mass(std::span<const AgentState> agents);

/// Normalized angular momentum about the center of mass: the mean 2D cross
/// product of unit radial and unit velocity vectors, in [-1, 1]. Velocities
/// are delta_position / dt. Agents closer than 1e-12 to the center, or
/// moving slower than 1e-12 m/tick-interval, contribute zero.
/// +1 is a perfect counter-clockwise mill, -1 a perfect clockwise mill.
double angular_momentum(std::span<const AgentState> agents, double dt);

/// Second central moment of position: mean squared distance to the center of
/// mass, in m^2.
double scatter(std::span<const AgentState> agents);

/// Variance of the distances to the center of mass, in m^2. Zero iff all
/// agents sit on one circle about their center of mass.
double radial_variance(std::span<const AgentState> agents);

/// Mean distance to the center of mass, in m.
double mean_radius(std::span<const AgentState> agents);

/// All five metric fields in one call.
SwarmMetrics compute_metrics(std::span<const AgentState> agents, double dt);

inline constexpr std::size_t kMillingWindowTicks = 900; // 30 s at 30 Hz
inline constexpr double kMillingLMin = 0.8;
inline constexpr double kMillingRvRatioMax = 0.2;

/// Milling detector over the trailing `window` metric entries: true iff
/// min |angular_momentum| >= L_min and
/// max sqrt(radial_variance) / mean_radius <= rv_ratio_max over the window.
/// A history shorter than the window is insufficient evidence and reads
/// false. Throws std::domain_error for window < 1 or thresholds outside
/// (0, 1).
bool detect_milling(std::span<const SwarmMetrics> metric_history,
                    std::size_t window = kMillingWindowTicks,
                    double L_min = kMillingLMin,
                    double rv_ratio_max = kMillingRvRatioMax);

}  // namespace swarmsim
