#pragma once

#include <cstdint>
#include <vector>

#include "swarmsim/geometry.hpp"

namespace swarmsim {

/// Snapshot of one agent: pose plus the change from the previous tick.
/// Immutable once built; ticks produce fresh snapshots.
struct AgentState {
    std::uint32_t id = 0;
    Pose pose;
    Vec2 delta_position;        // meters moved during the last tick
    double delta_heading = 0.0; // wrapped heading change during the last tick

    bool operator==(const AgentState&) const = default;
};

/// Swarm-level summary statistics. mean_radius is carried alongside the four
/// base metrics so mill detection needs no access to raw agent states.
struct SwarmMetrics {
    Vec2 center_of_mass;
    double angular_momentum = 0.0; // normalized, in [-1, 1]
    double scatter = 0.0;          // m^2
    double radial_variance = 0.0;  // m^2
    double mean_radius = 0.0;      // m

    bool operator==(const SwarmMetrics&) const = default;
};

/// All member agent snapshots (sorted by ascending id) plus their metrics.
struct SwarmState {
    std::vector<AgentState> agents;
    SwarmMetrics metrics;

    bool operator==(const SwarmState&) const = default;
};

/// Full simulation snapshot at one tick.
struct WorldState {
    std::uint64_t tick = 0;
    double sim_time = 0.0; // tick * dt
    std::vector<SwarmState> swarms;
    Polygon arena;

    bool operator==(const WorldState&) const = default;
};

}  // namespace swarmsim
