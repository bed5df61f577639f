#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "swarmsim/config.hpp"
#include "swarmsim/dynamics.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/metrics.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/sensor.hpp"
#include "swarmsim/trace_io.hpp"

namespace {

using namespace swarmsim;

SimConfig config_for(std::uint32_t agents) {
    SimConfig config;
    config.seed = 11;
    config.num_agents = agents;
    // Keep the packing bound comfortable for the larger swarms.
    config.spawn_radius = std::max(1.5, 0.1 * agents);
    return config;
}

void bench_binary_sense(benchmark::State& state) {
    const SimConfig config = config_for(static_cast<std::uint32_t>(state.range(0)));
    const WorldState world = init_world(config);
    const std::vector<AgentState>& agents = world.swarms[0].agents;
    std::size_t observer = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            binary_sense(agents[observer], agents, config.sensor, config.agent_radius).value);
        observer = (observer + 1) % agents.size();
    }
}
BENCHMARK(bench_binary_sense)->Arg(9)->Arg(64)->Arg(256);

void bench_unicycle_step(benchmark::State& state) {
    const DynamicsParams params;
    Pose pose{{0.25, -0.5}, 0.3};
    const ControlOutput cmd{0.4, -2.5};
    for (auto _ : state) {
        pose = unicycle_step(pose, cmd, 1.0 / 30.0, params);
        benchmark::DoNotOptimize(pose);
    }
}
BENCHMARK(bench_unicycle_step);

void bench_compute_metrics(benchmark::State& state) {
    const SimConfig config = config_for(static_cast<std::uint32_t>(state.range(0)));
    WorldState world = init_world(config);
    world = tick(world, config); // populate deltas
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_metrics(world.swarms[0].agents, config.dt()));
    }
}
BENCHMARK(bench_compute_metrics)->Arg(9)->Arg(256);

void bench_tick(benchmark::State& state) {
    const SimConfig config = config_for(static_cast<std::uint32_t>(state.range(0)));
    WorldState world = init_world(config);
    for (auto _ : state) {
        world = tick(world, config);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bench_tick)->Arg(9)->Arg(64)->Arg(256);

void bench_run_threads(benchmark::State& state) {
    SimConfig config = config_for(128);
    config.num_ticks = 200;
    const unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(config, threads).records.size());
    }
    state.SetItemsProcessed(state.iterations() * config.num_ticks * config.num_agents);
}
BENCHMARK(bench_run_threads)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void bench_trace_serialize(benchmark::State& state) {
    SimConfig config = config_for(9);
    config.num_ticks = 1000;
    const Trace trace = run(config);
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_to_string(trace).size());
    }
}
BENCHMARK(bench_trace_serialize);

}  // namespace

BENCHMARK_MAIN();
