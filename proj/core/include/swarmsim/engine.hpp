#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "swarmsim/config.hpp"
#include "swarmsim/controller.hpp"
#include "swarmsim/types.hpp"

namespace swarmsim {

/// Spawn placement could not satisfy the non-overlap constraint.
class SpawnError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Per-agent result of the read-only half of a tick: what the agent sensed,
/// what it commanded, and where it will be.
struct AgentStep {
    bool sensed = false;
    ControlOutput cmd;
    Pose next_pose;

    bool operator==(const AgentStep&) const = default;
};

/// One serialized agent row: pose plus the tick's sensing/command outputs.
struct TraceAgentRow {
    std::uint32_t id = 0;
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;
    bool sensed = false;
    double v = 0.0;
    double omega = 0.0;

    bool operator==(const TraceAgentRow&) const = default;
};

/// Everything recorded for one tick: agent rows in ascending id order plus
/// the metrics row.
struct TraceRecord {
    std::uint64_t tick = 0;
    std::vector<TraceAgentRow> agents;
    SwarmMetrics metrics;

    bool operator==(const TraceRecord&) const = default;
};

/// Full record of a run: the config plus num_ticks + 1 records (tick 0 is
/// the initial state). The substrate for replay, metric export and
/// rendering.
struct Trace {
    SimConfig config;
    std::vector<TraceRecord> records;

    bool operator==(const Trace&) const = default;
};

/// Place num_agents agents by rejection sampling from the seeded RNG:
/// per attempt the stream yields x, y (uniform over the spawn disc's
/// bounding square, centered on the arena centroid) and heading (uniform in
/// [-pi, pi)); the candidate is rejected when it falls outside the spawn
/// disc or its body disc overlaps an already accepted agent. Deltas are
/// zero and tick is 0. Throws SpawnError after 10,000 consecutive
/// rejections, ConfigError for an invalid config.
WorldState init_world(const SimConfig& config);

/// The read-only half of a tick for every agent of the (single) swarm:
/// sense against the current snapshot, run the controller, integrate the
/// pose. Pure; entries are independent.
std::vector<AgentStep> compute_steps(const WorldState& world, const SimConfig& config);

/// Deterministic merge: apply per-agent steps in ascending id order, fill
/// per-tick deltas, recompute metrics, advance the tick counter.
WorldState apply_steps(const WorldState& world, const std::vector<AgentStep>& steps,
                       const SimConfig& config);

/// One synchronous tick: every sensor reads the pre-tick snapshot, all new
/// states apply atomically. Equivalent to apply_steps(compute_steps(...)).
WorldState tick(const WorldState& world, const SimConfig& config);

/// Run num_ticks ticks from init_world and record every state. The trace is
/// bit-identical for every parallelism value: the per-agent phase is pure
/// and results merge in fixed id order regardless of the worker count.
Trace run(const SimConfig& config, unsigned parallelism = 1);

}  // namespace swarmsim
