#include "swarmsim/replay.hpp"

#include <cmath>

#include "swarmsim/metrics.hpp"
#include "swarmsim/strfmt.hpp"

namespace swarmsim {

namespace {

bool close(double stored, double recomputed, double rel_tol) {
    if (rel_tol == 0.0) {
        return stored == recomputed;
    }
    return std::abs(stored - recomputed) <=
           rel_tol * std::max({1.0, std::abs(stored), std::abs(recomputed)});
}

ReplayReport divergence(std::uint64_t tick, std::string field, double stored,
                        double recomputed) {
    ReplayReport r;
    r.ok = false;
    r.tick = tick;
    r.field = std::move(field);
    r.expected = stored;
    r.actual = recomputed;
    r.message = "divergence at tick " + std::to_string(tick) + ", " + r.field + ": trace has " +
                format_double(stored) + ", recomputed " + format_double(recomputed);
    return r;
}

// Rebuild the engine-facing agent states for one record; deltas come from
// the previous record's rows (zero at tick 0).
std::vector<AgentState> states_from_rows(const TraceRecord& rec, const TraceRecord* prev) {
    std::vector<AgentState> agents;
    agents.reserve(rec.agents.size());
    for (std::size_t i = 0; i < rec.agents.size(); ++i) {
        const TraceAgentRow& row = rec.agents[i];
        AgentState a;
        a.id = row.id;
        a.pose = {{row.x, row.y}, row.heading};
        if (prev != nullptr) {
            const TraceAgentRow& p = prev->agents[i];
            a.delta_position = {row.x - p.x, row.y - p.y};
            a.delta_heading = wrap_angle(row.heading - p.heading);
        }
        agents.push_back(a);
    }
    return agents;
}

}  // namespace

ReplayReport replay_verify(const Trace& trace, double rel_tol) {
    const SimConfig& config = trace.config;
    const double dt = config.dt();

    if (trace.records.size() != config.num_ticks + 1) {
        ReplayReport r;
        r.ok = false;
        r.message = "trace has " + std::to_string(trace.records.size()) +
                    " records, expected num_ticks + 1 = " +
                    std::to_string(config.num_ticks + 1);
        return r;
    }

    for (std::size_t t = 0; t < trace.records.size(); ++t) {
        const TraceRecord& rec = trace.records[t];
        const TraceRecord* prev = t > 0 ? &trace.records[t - 1] : nullptr;
        const std::vector<AgentState> agents = states_from_rows(rec, prev);

        WorldState world;
        world.tick = rec.tick;
        world.sim_time = static_cast<double>(rec.tick) * dt;
        world.arena = config.arena;
        world.swarms.push_back({agents, {}});

        // Sensing, control and (if not the last record) the transition into
        // the next record, all straight from the engine.
        const std::vector<AgentStep> steps = compute_steps(world, config);
        for (std::size_t i = 0; i < agents.size(); ++i) {
            const TraceAgentRow& row = rec.agents[i];
            const std::string tag = "agent " + std::to_string(row.id) + " ";
            if (row.sensed != steps[i].sensed) {
                return divergence(rec.tick, tag + "sense", row.sensed ? 1.0 : 0.0,
                                  steps[i].sensed ? 1.0 : 0.0);
            }
            if (!close(row.v, steps[i].cmd.v, rel_tol)) {
                return divergence(rec.tick, tag + "v", row.v, steps[i].cmd.v);
            }
            if (!close(row.omega, steps[i].cmd.omega, rel_tol)) {
                return divergence(rec.tick, tag + "omega", row.omega, steps[i].cmd.omega);
            }
        }

        // Metrics row recomputed from the agent rows alone.
        const SwarmMetrics m = compute_metrics(agents, dt);
        const SwarmMetrics& sm = rec.metrics;
        const std::uint64_t tick = rec.tick;
        if (!close(sm.center_of_mass.x, m.center_of_mass.x, rel_tol)) {
            return divergence(tick, "metrics com_x", sm.center_of_mass.x, m.center_of_mass.x);
        }
        if (!close(sm.center_of_mass.y, m.center_of_mass.y, rel_tol)) {
            return divergence(tick, "metrics com_y", sm.center_of_mass.y, m.center_of_mass.y);
        }
        if (!close(sm.angular_momentum, m.angular_momentum, rel_tol)) {
            return divergence(tick, "metrics angular_momentum", sm.angular_momentum,
                              m.angular_momentum);
        }
        if (!close(sm.scatter, m.scatter, rel_tol)) {
            return divergence(tick, "metrics scatter", sm.scatter, m.scatter);
        }
        if (!close(sm.radial_variance, m.radial_variance, rel_tol)) {
            return divergence(tick, "metrics radial_variance", sm.radial_variance,
                              m.radial_variance);
        }
        if (!close(sm.mean_radius, m.mean_radius, rel_tol)) {
            return divergence(tick, "metrics mean_radius", sm.mean_radius, m.mean_radius);
        }

        if (t + 1 < trace.records.size()) {
            const WorldState next = apply_steps(world, steps, config);
            const TraceRecord& next_rec = trace.records[t + 1];
            const std::vector<AgentState>& next_agents = next.swarms.front().agents;
            for (std::size_t i = 0; i < next_agents.size(); ++i) {
                const TraceAgentRow& row = next_rec.agents[i];
                const Pose& pose = next_agents[i].pose;
                const std::string tag = "agent " + std::to_string(row.id) + " ";
                if (!close(row.x, pose.position.x, rel_tol)) {
                    return divergence(next_rec.tick, tag + "x", row.x, pose.position.x);
                }
                if (!close(row.y, pose.position.y, rel_tol)) {
                    return divergence(next_rec.tick, tag + "y", row.y, pose.position.y);
                }
                if (!close(row.heading, pose.heading, rel_tol)) {
                    return divergence(next_rec.tick, tag + "heading", row.heading, pose.heading);
                }
            }
        }
    }

    ReplayReport r;
    r.message = "replay verified: " + std::to_string(trace.records.size()) + " records, " +
                std::to_string(config.num_agents) + " agents" +
                (rel_tol == 0.0 ? ", bit-exact" : ", rel_tol " + format_short(rel_tol));
    return r;
}

}  // namespace swarmsim
