#include "cli_app.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swarmsim/config_io.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/metrics.hpp"
#include "swarmsim/render.hpp"
#include "swarmsim/replay.hpp"
#include "swarmsim/strfmt.hpp"
#include "swarmsim/trace_io.hpp"

namespace swarmsim {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitDivergence = 3;

int do_run(const std::string& config_path, bool have_seed, std::uint64_t seed, bool have_ticks,
           std::uint64_t ticks, const std::string& out_path, unsigned threads) {
    SimConfig config;
    if (!config_path.empty()) {
        config = parse_config_file(config_path);
    }
    if (have_seed) {
        config.seed = seed;
    }
    if (have_ticks) {
        config.num_ticks = ticks;
    }
    config.validate();

    Trace trace = run(config, threads);
    write_trace(trace, out_path);

    std::vector<SwarmMetrics> history;
    history.reserve(trace.records.size());
    for (const TraceRecord& r : trace.records) {
        history.push_back(r.metrics);
    }
    const bool milling = detect_milling(history);
    std::cout << "wrote " << out_path << ": " << config.num_agents << " agents, "
              << config.num_ticks << " ticks, seed " << config.seed << ", milling "
              << (milling ? "yes" : "no") << " (L "
              << format_short(trace.records.back().metrics.angular_momentum) << ")\n";
    return kExitOk;
}

int do_replay(const std::string& trace_path) {
    const Trace trace = read_trace(trace_path);
    const ReplayReport report = replay_verify(trace);
    if (report.ok) {
        std::cout << "replay ok: " << trace.records.size() << " records verified, seed "
                  << trace.config.seed << '\n';
        return kExitOk;
    }
    std::cerr << "replay divergence at tick " << report.tick << ", field " << report.field
              << ": stored " << format_double(report.expected) << ", recomputed "
              << format_double(report.actual) << '\n';
    return kExitDivergence;
}

int do_render(const std::string& trace_path, std::uint64_t every, const std::string& out_dir) {
    const Trace trace = read_trace(trace_path);
    const auto files = render_frames(trace, every, out_dir);
    std::cout << "wrote " << files.size() << " frames to " << out_dir << '\n';
    return kExitOk;
}

int do_metrics(const std::string& trace_path, const std::string& csv_path) {
    const Trace trace = read_trace(trace_path);
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + csv_path + "' for writing");
    }
    write_metrics_csv(trace, out);
    if (!out.flush()) {
        throw std::runtime_error("failed writing '" + csv_path + "'");
    }
    std::cout << "wrote " << csv_path << ": " << trace.records.size() << " rows\n";
    return kExitOk;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Deterministic headless swarm simulator"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "Simulate and write a trace file");
    std::string run_config;
    std::uint64_t run_seed = 0;
    std::uint64_t run_ticks = 0;
    std::string run_out;
    unsigned run_threads = 1;
    run_cmd->add_option("--config", run_config, "INI config file (defaults apply when omitted)");
    run_cmd->add_option("--seed", run_seed, "Override the config seed");
    run_cmd->add_option("--ticks", run_ticks, "Override the config tick count");
    run_cmd->add_option("--out", run_out, "Trace output path")->required();
    run_cmd->add_option("--threads", run_threads, "Worker threads")
        ->check(CLI::Range(1u, 1024u));

    auto* replay_cmd = app.add_subcommand("replay", "Re-simulate a trace and verify every row");
    std::string replay_trace;
    replay_cmd->add_option("--trace", replay_trace, "Trace file")->required();

    auto* render_cmd = app.add_subcommand("render", "Render SVG frames from a trace");
    std::string render_trace;
    std::uint64_t render_every = 1;
    std::string render_dir;
    render_cmd->add_option("--trace", render_trace, "Trace file")->required();
    render_cmd->add_option("--every", render_every, "Sample every n-th tick")
        ->check(CLI::PositiveNumber);
    render_cmd->add_option("--out-dir", render_dir, "Frame output directory")->required();

    auto* metrics_cmd = app.add_subcommand("metrics", "Export per-tick metric rows as CSV");
    std::string metrics_trace;
    std::string metrics_csv;
    metrics_cmd->add_option("--trace", metrics_trace, "Trace file")->required();
    metrics_cmd->add_option("--csv", metrics_csv, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(run_cmd)) {
            return do_run(run_config, run_cmd->count("--seed") > 0, run_seed,
                          run_cmd->count("--ticks") > 0, run_ticks, run_out, run_threads);
        }
        if (app.got_subcommand(replay_cmd)) {
            return do_replay(replay_trace);
        }
        if (app.got_subcommand(render_cmd)) {
            return do_render(render_trace, render_every, render_dir);
        }
        return do_metrics(metrics_trace, metrics_csv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TraceFormatError& e) {
        std::cerr << "trace error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace swarmsim
