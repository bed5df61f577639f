#include "swarmsim/engine.hpp"

#include <condition_variable>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "swarmsim/dynamics.hpp"
#include "swarmsim/metrics.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/sensor.hpp"

namespace swarmsim {

namespace {

constexpr int kMaxConsecutiveRejections = 10000;

// Long-lived workers dispatching static index chunks. Chunk results land in
// caller-owned slots, so the output is independent of scheduling.
class WorkerPool {
public:
    explicit WorkerPool(unsigned workers) : workers_(workers) {
        threads_.reserve(workers_ - 1);
        for (unsigned w = 1; w < workers_; ++w) {
            threads_.emplace_back([this, w] { worker_loop(w); });
        }
    }

    ~WorkerPool() {
        {
            std::lock_guard lock(mutex_);
            stop_ = true;
        }
        start_cv_.notify_all();
        for (auto& t : threads_) {
            t.join();
        }
    }

    template <typename Fn>
    void parallel_for(std::size_t n, Fn&& fn) {
        task_ = [&fn](std::size_t i) { fn(i); };
        {
            std::lock_guard lock(mutex_);
            n_ = n;
            pending_ = workers_ - 1;
            ++generation_;
        }
        start_cv_.notify_all();
        run_chunk(0);
        std::unique_lock lock(mutex_);
        done_cv_.wait(lock, [this] { return pending_ == 0; });
    }

private:
    void worker_loop(unsigned index) {
        std::uint64_t seen = 0;
        for (;;) {
            {
                std::unique_lock lock(mutex_);
                start_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
                if (stop_) {
                    return;
                }
                seen = generation_;
            }
            run_chunk(index);
            bool last = false;
            {
                std::lock_guard lock(mutex_);
                last = --pending_ == 0;
            }
            if (last) {
                done_cv_.notify_one();
            }
        }
    }

    void run_chunk(unsigned index) {
        const std::size_t lo = n_ * index / workers_;
        const std::size_t hi = n_ * (index + 1) / workers_;
        for (std::size_t i = lo; i < hi; ++i) {
            task_(i);
        }
    }

    unsigned workers_;
    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable start_cv_;
    std::condition_variable done_cv_;
    std::uint64_t generation_ = 0;
    unsigned pending_ = 0;
    bool stop_ = false;
    std::size_t n_ = 0;
    std::function<void(std::size_t)> task_;
};

const SwarmState& single_swarm(const WorldState& world) {
    if (world.swarms.size() != 1) {
        throw std::invalid_argument("engine: exactly one swarm per world is supported");
    }
    return world.swarms.front();
}

AgentStep step_agent(const std::vector<AgentState>& agents, std::size_t i,
                     const SimConfig& config) {
    const AgentState& agent = agents[i];
    bool sensed = false;
    for (std::size_t j = 0; j < agents.size(); ++j) {
        if (j == i) {
            continue;
        }
        if (disc_in_cone(agent.pose, agents[j].pose.position, config.agent_radius,
                         config.sensor)) {
            sensed = true;
            break;
        }
    }
    const ControlOutput cmd = binary_controller({sensed}, config.controller);
    return {sensed, cmd, unicycle_step(agent.pose, cmd, config.dt(), config.dynamics)};
}

void compute_steps_into(const WorldState& world, const SimConfig& config, WorkerPool* pool,
                        std::vector<AgentStep>& out) {
    const std::vector<AgentState>& agents = single_swarm(world).agents;
    out.resize(agents.size());
    if (pool != nullptr) {
        pool->parallel_for(agents.size(),
                           [&](std::size_t i) { out[i] = step_agent(agents, i, config); });
    } else {
        for (std::size_t i = 0; i < agents.size(); ++i) {
            out[i] = step_agent(agents, i, config);
        }
    }
}

TraceRecord make_record(const WorldState& world, const std::vector<AgentStep>& steps) {
    const SwarmState& swarm = single_swarm(world);
    TraceRecord record;
    record.tick = world.tick;
    record.agents.reserve(swarm.agents.size());
    for (std::size_t i = 0; i < swarm.agents.size(); ++i) {
        const AgentState& a = swarm.agents[i];
        const AgentStep& s = steps[i];
        record.agents.push_back({a.id, a.pose.position.x, a.pose.position.y, a.pose.heading,
                                 s.sensed, s.cmd.v, s.cmd.omega});
    }
    record.metrics = swarm.metrics;
    return record;
}

}  // namespace

WorldState init_world(const SimConfig& config) {
    config.validate();
    SplitMix64 rng(config.seed);
    const Vec2 center = config.arena.centroid();
    const double r = config.spawn_radius;
    const double min_sep_sq = 4.0 * config.agent_radius * config.agent_radius;

    std::vector<AgentState> agents;
    agents.reserve(config.num_agents);
    int rejections = 0;
    while (agents.size() < config.num_agents) {
        // Fixed draw order per attempt: x, y, heading.
        const Vec2 pos{rng.next_uniform(center.x - r, center.x + r),
                       rng.next_uniform(center.y - r, center.y + r)};
        const double heading = rng.next_heading();

        bool accepted = (pos - center).norm_sq() <= r * r;
        if (accepted) {
            for (const AgentState& other : agents) {
                if ((other.pose.position - pos).norm_sq() < min_sep_sq) {
                    accepted = false;
                    break;
                }
            }
        }
        if (!accepted) {
            if (++rejections >= kMaxConsecutiveRejections) {
                throw SpawnError("init_world: spawn region too crowded, " +
                                 std::to_string(kMaxConsecutiveRejections) +
                                 " consecutive rejections");
            }
            continue;
        }
        rejections = 0;
        AgentState agent;
        agent.id = static_cast<std::uint32_t>(agents.size());
        agent.pose = {pos, heading};
        agents.push_back(agent);
    }

    WorldState world;
    world.tick = 0;
    world.sim_time = 0.0;
    world.arena = config.arena;
    SwarmState swarm;
    swarm.agents = std::move(agents);
    swarm.metrics = compute_metrics(swarm.agents, config.dt());
    world.swarms.push_back(std::move(swarm));
    return world;
}

std::vector<AgentStep> compute_steps(const WorldState& world, const SimConfig& config) {
    std::vector<AgentStep> steps;
    compute_steps_into(world, config, nullptr, steps);
    return steps;
}

WorldState apply_steps(const WorldState& world, const std::vector<AgentStep>& steps,
                       const SimConfig& config) {
    const SwarmState& swarm = single_swarm(world);
    if (steps.size() != swarm.agents.size()) {
        throw std::invalid_argument("apply_steps: step count does not match agent count");
    }
    WorldState next;
    next.tick = world.tick + 1;
    next.sim_time = static_cast<double>(next.tick) * config.dt();
    next.arena = world.arena;

    SwarmState next_swarm;
    next_swarm.agents.reserve(swarm.agents.size());
    for (std::size_t i = 0; i < swarm.agents.size(); ++i) {
        const AgentState& prev = swarm.agents[i];
        AgentState a;
        a.id = prev.id;
        a.pose = steps[i].next_pose;
        a.delta_position = a.pose.position - prev.pose.position;
        a.delta_heading = wrap_angle(a.pose.heading - prev.pose.heading);
        next_swarm.agents.push_back(a);
    }
    next_swarm.metrics = compute_metrics(next_swarm.agents, config.dt());
    next.swarms.push_back(std::move(next_swarm));
    return next;
}

WorldState tick(const WorldState& world, const SimConfig& config) {
    return apply_steps(world, compute_steps(world, config), config);
}

Trace run(const SimConfig& config, unsigned parallelism) {
    if (parallelism < 1) {
        throw std::invalid_argument("run: parallelism must be >= 1");
    }
    config.validate();

    Trace trace;
    trace.config = config;
    trace.records.reserve(config.num_ticks + 1);

    std::optional<WorkerPool> pool;
    if (parallelism > 1) {
        pool.emplace(parallelism);
    }

    WorldState world = init_world(config);
    std::vector<AgentStep> steps;
    for (std::uint64_t t = 0;; ++t) {
        compute_steps_into(world, config, pool ? &*pool : nullptr, steps);
        trace.records.push_back(make_record(world, steps));
        if (t == config.num_ticks) {
            break;
        }
        world = apply_steps(world, steps, config);
    }
    return trace;
}

}  // namespace swarmsim
