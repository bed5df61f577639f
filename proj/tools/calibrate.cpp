// Controller calibration sweep: grid-search forward_speed x turn_rate over a
// fixed seed set, score each cell by how many seeds reach sustained milling
// and how fast, and print the table plus the winning cell. The committed
// ControllerParams defaults come from this tool's output.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "swarmsim/config.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/metrics.hpp"
#include "swarmsim/strfmt.hpp"

namespace {

using namespace swarmsim;

// First tick whose trailing detection window qualifies as milling, if any.
std::optional<std::uint64_t> milling_onset(const std::vector<SwarmMetrics>& history,
                                           std::size_t window) {
    std::int64_t last_violation = -1;
    for (std::size_t t = 0; t < history.size(); ++t) {
        const SwarmMetrics& m = history[t];
        const double ratio =
            m.mean_radius > 0.0 ? std::sqrt(m.radial_variance) / m.mean_radius : 0.0;
        if (std::abs(m.angular_momentum) < kMillingLMin || ratio > kMillingRvRatioMax) {
            last_violation = static_cast<std::int64_t>(t);
        } else if (static_cast<std::int64_t>(t) - last_violation >=
                   static_cast<std::int64_t>(window)) {
            return t;
        }
    }
    return std::nullopt;
}

std::vector<SwarmMetrics> metric_history(const SimConfig& config) {
    WorldState world = init_world(config);
    std::vector<SwarmMetrics> history;
    history.reserve(config.num_ticks + 1);
    history.push_back(world.swarms[0].metrics);
    for (std::uint64_t t = 0; t < config.num_ticks; ++t) {
        world = tick(world, config);
        history.push_back(world.swarms[0].metrics);
    }
    return history;
}

struct Cell {
    double forward_speed = 0.0;
    double turn_rate = 0.0;
    unsigned successes = 0;
    double median_onset = 0.0;  // ticks, over succeeding seeds only
    std::vector<std::optional<std::uint64_t>> onsets;
};

double median(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) {
        return static_cast<double>(v[n / 2]);
    }
    return 0.5 * (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2]));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grid-search controller defaults over seeds and report milling rates"};
    unsigned num_seeds = 10;
    std::uint64_t ticks = 9000;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string csv_path;
    app.add_option("--seeds", num_seeds, "Seeds 1..N per cell")->check(CLI::PositiveNumber);
    app.add_option("--ticks", ticks, "Ticks per run")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "Concurrent runs")->check(CLI::PositiveNumber);
    app.add_option("--csv", csv_path, "Optional per-cell CSV output");
    CLI11_PARSE(app, argc, argv);

    const std::vector<double> speeds = {0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40};
    const std::vector<double> rates = {0.50, 0.75, 1.00, 1.25, 1.50, 1.75, 2.00, 2.25, 2.50};

    std::vector<Cell> cells;
    for (double fs : speeds) {
        for (double tr : rates) {
            Cell c;
            c.forward_speed = fs;
            c.turn_rate = tr;
            c.onsets.resize(num_seeds);
            cells.push_back(std::move(c));
        }
    }

    // One job per (cell, seed); workers pull jobs off a shared counter.
    const std::size_t total_jobs = cells.size() * num_seeds;
    std::atomic<std::size_t> next_job{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t job = next_job.fetch_add(1, std::memory_order_relaxed);
            if (job >= total_jobs) {
                return;
            }
            Cell& cell = cells[job / num_seeds];
            const unsigned seed_index = static_cast<unsigned>(job % num_seeds);
            SimConfig config;
            config.num_ticks = ticks;
            config.seed = seed_index + 1;
            config.controller.forward_speed = cell.forward_speed;
            config.controller.turn_rate = cell.turn_rate;
            cell.onsets[seed_index] = milling_onset(metric_history(config), kMillingWindowTicks);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread& t : pool) {
        t.join();
    }

    for (Cell& cell : cells) {
        std::vector<std::uint64_t> ok;
        for (const auto& onset : cell.onsets) {
            if (onset) {
                ok.push_back(*onset);
            }
        }
        cell.successes = static_cast<unsigned>(ok.size());
        cell.median_onset = ok.empty() ? 0.0 : median(std::move(ok));
    }

    // Markdown table: rows forward_speed, columns turn_rate,
    // entries "successes/N @ median onset".
    std::cout << "| forward_speed \\ turn_rate |";
    for (double tr : rates) {
        std::cout << ' ' << format_short(tr) << " |";
    }
    std::cout << "\n|---|";
    for (std::size_t i = 0; i < rates.size(); ++i) {
        std::cout << "---|";
    }
    std::cout << '\n';
    std::size_t idx = 0;
    for (double fs : speeds) {
        std::cout << "| " << format_short(fs) << " |";
        for (std::size_t j = 0; j < rates.size(); ++j, ++idx) {
            const Cell& c = cells[idx];
            std::cout << ' ' << c.successes << '/' << num_seeds;
            if (c.successes > 0) {
                std::cout << " @ " << format_short(c.median_onset);
            }
            std::cout << " |";
        }
        std::cout << '\n';
    }

    const Cell* best = nullptr;
    for (const Cell& c : cells) {
        if (best == nullptr || c.successes > best->successes ||
            (c.successes == best->successes && c.successes > 0 &&
             c.median_onset < best->median_onset)) {
            best = &c;
        }
    }
    std::cout << "\nbest: forward_speed " << format_short(best->forward_speed) << ", turn_rate "
              << format_short(best->turn_rate) << " (" << best->successes << '/' << num_seeds
              << " seeds, median onset " << format_short(best->median_onset) << " ticks)\n";

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) {
            std::cerr << "error: cannot open '" << csv_path << "' for writing\n";
            return 2;
        }
        csv << "forward_speed,turn_rate,seed,onset_tick\n";
        for (const Cell& c : cells) {
            for (std::size_t s = 0; s < c.onsets.size(); ++s) {
                csv << format_short(c.forward_speed) << ',' << format_short(c.turn_rate) << ','
                    << (s + 1) << ',';
                if (c.onsets[s]) {
                    csv << *c.onsets[s];
                }
                csv << '\n';
            }
        }
    }
    return 0;
}
