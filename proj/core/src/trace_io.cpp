#include "swarmsim/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "swarmsim/strfmt.hpp"

namespace swarmsim {

namespace {

constexpr std::string_view kMagic = "SWARMTRACE";
constexpr int kFormatVersion = 1;

std::string serialize_arena(const Polygon& arena) {
    std::string out;
    for (std::size_t i = 0; i < arena.vertices.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += format_double(arena.vertices[i].x);
        out += ',';
        out += format_double(arena.vertices[i].y);
    }
    return out;
}

std::string header_line(const SimConfig& c) {
    std::string h;
    h += kMagic;
    h += ' ';
    h += std::to_string(kFormatVersion);
    h += " tick_rate=" + format_double(c.tick_rate);
    h += " num_ticks=" + std::to_string(c.num_ticks);
    h += " num_agents=" + std::to_string(c.num_agents);
    h += " seed=" + std::to_string(c.seed);
    h += " spawn_radius=" + format_double(c.spawn_radius);
    h += " agent_radius=" + format_double(c.agent_radius);
    h += " view_distance=" + format_double(c.sensor.view_distance);
    h += " fov_left_bound_rad=" + format_double(c.sensor.fov_left_bound);
    h += " fov_right_bound_rad=" + format_double(c.sensor.fov_right_bound);
    h += std::string(" detect_walls=") + (c.sensor.detect_walls ? "1" : "0");
    h += " forward_speed=" + format_double(c.controller.forward_speed);
    h += " turn_rate=" + format_double(c.controller.turn_rate);
    h += std::string(" integration=") +
         (c.dynamics.integration == Integration::exact_arc ? "exact_arc" : "euler");
    h += " omega_epsilon=" + format_double(c.dynamics.omega_epsilon);
    h += " arena=" + serialize_arena(c.arena);
    return h;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

struct Parser {
    std::size_t line = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw TraceFormatError(message, line);
    }

    double parse_double(std::string_view token, const char* what) const {
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            fail(std::string("bad ") + what + " value '" + std::string(token) + "'");
        }
        return value;
    }

    template <typename Int>
    Int parse_int(std::string_view token, const char* what) const {
        Int value{};
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            fail(std::string("bad ") + what + " value '" + std::string(token) + "'");
        }
        return value;
    }

    bool parse_bool(std::string_view token, const char* what) const {
        if (token == "0") return false;
        if (token == "1") return true;
        fail(std::string("bad ") + what + " value '" + std::string(token) + "'");
    }
};

SimConfig parse_header(std::string_view text, Parser& p) {
    const auto tokens = split(text, ' ');
    if (tokens.empty() || tokens[0] != kMagic) {
        p.fail("not a trace file (expected 'SWARMTRACE' magic)");
    }
    if (tokens.size() < 2 || tokens[1] != std::to_string(kFormatVersion)) {
        p.fail("unsupported trace format version '" +
               std::string(tokens.size() >= 2 ? tokens[1] : "") + "' (expected " +
               std::to_string(kFormatVersion) + ")");
    }

    SimConfig c;
    std::vector<std::string> seen;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto kv = tokens[i];
        const std::size_t eq = kv.find('=');
        if (eq == std::string_view::npos) {
            p.fail("malformed header token '" + std::string(kv) + "'");
        }
        const std::string key{kv.substr(0, eq)};
        const std::string_view value = kv.substr(eq + 1);
        for (const std::string& s : seen) {
            if (s == key) {
                p.fail("duplicate header key '" + key + "'");
            }
        }
        seen.push_back(key);

        if (key == "tick_rate") {
            c.tick_rate = p.parse_double(value, key.c_str());
        } else if (key == "num_ticks") {
            c.num_ticks = p.parse_int<std::uint64_t>(value, key.c_str());
        } else if (key == "num_agents") {
            c.num_agents = p.parse_int<std::uint32_t>(value, key.c_str());
        } else if (key == "seed") {
            c.seed = p.parse_int<std::uint64_t>(value, key.c_str());
        } else if (key == "spawn_radius") {
            c.spawn_radius = p.parse_double(value, key.c_str());
        } else if (key == "agent_radius") {
            c.agent_radius = p.parse_double(value, key.c_str());
        } else if (key == "view_distance") {
            c.sensor.view_distance = p.parse_double(value, key.c_str());
        } else if (key == "fov_left_bound_rad") {
            c.sensor.fov_left_bound = p.parse_double(value, key.c_str());
        } else if (key == "fov_right_bound_rad") {
            c.sensor.fov_right_bound = p.parse_double(value, key.c_str());
        } else if (key == "detect_walls") {
            c.sensor.detect_walls = p.parse_bool(value, key.c_str());
        } else if (key == "forward_speed") {
            c.controller.forward_speed = p.parse_double(value, key.c_str());
        } else if (key == "turn_rate") {
            c.controller.turn_rate = p.parse_double(value, key.c_str());
        } else if (key == "integration") {
            if (value == "exact_arc") {
                c.dynamics.integration = Integration::exact_arc;
            } else if (value == "euler") {
                c.dynamics.integration = Integration::euler;
            } else {
                p.fail("bad integration value '" + std::string(value) + "'");
            }
        } else if (key == "omega_epsilon") {
            c.dynamics.omega_epsilon = p.parse_double(value, key.c_str());
        } else if (key == "arena") {
            c.arena.vertices.clear();
            for (const auto vertex : split(value, ';')) {
                const auto xy = split(vertex, ',');
                if (xy.size() != 2) {
                    p.fail("bad arena vertex '" + std::string(vertex) + "'");
                }
                c.arena.vertices.push_back(
                    {p.parse_double(xy[0], "arena x"), p.parse_double(xy[1], "arena y")});
            }
        } else {
            p.fail("unknown header key '" + key + "'");
        }
    }

    constexpr const char* required[] = {
        "tick_rate",     "num_ticks",          "num_agents",          "seed",
        "spawn_radius",  "agent_radius",       "view_distance",       "fov_left_bound_rad",
        "fov_right_bound_rad", "detect_walls", "forward_speed",       "turn_rate",
        "integration",   "omega_epsilon",      "arena"};
    for (const char* key : required) {
        bool found = false;
        for (const std::string& s : seen) {
            if (s == key) {
                found = true;
                break;
            }
        }
        if (!found) {
            p.fail(std::string("missing header key '") + key + "'");
        }
    }

    try {
        c.validate();
    } catch (const ConfigError& e) {
        p.fail(std::string("invalid config in header: ") + e.what());
    }
    return c;
}

}  // namespace

void write_trace(const Trace& trace, std::ostream& out) {
    std::string buf = header_line(trace.config);
    buf += '\n';
    for (const TraceRecord& rec : trace.records) {
        for (const TraceAgentRow& a : rec.agents) {
            buf += "A ";
            buf += std::to_string(rec.tick);
            buf += ' ';
            buf += std::to_string(a.id);
            buf += ' ';
            buf += format_double(a.x);
            buf += ' ';
            buf += format_double(a.y);
            buf += ' ';
            buf += format_double(a.heading);
            buf += a.sensed ? " 1 " : " 0 ";
            buf += format_double(a.v);
            buf += ' ';
            buf += format_double(a.omega);
            buf += '\n';
        }
        const SwarmMetrics& m = rec.metrics;
        buf += "M ";
        buf += std::to_string(rec.tick);
        buf += ' ';
        buf += format_double(m.center_of_mass.x);
        buf += ' ';
        buf += format_double(m.center_of_mass.y);
        buf += ' ';
        buf += format_double(m.angular_momentum);
        buf += ' ';
        buf += format_double(m.scatter);
        buf += ' ';
        buf += format_double(m.radial_variance);
        buf += ' ';
        buf += format_double(m.mean_radius);
        buf += '\n';

        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        buf.clear();
    }
    if (trace.records.empty()) {
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
    out.flush();
}

void write_trace(const Trace& trace, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_trace: cannot open '" + path.string() + "' for writing");
    }
    write_trace(trace, out);
    if (!out) {
        throw std::runtime_error("write_trace: failed writing '" + path.string() + "'");
    }
}

std::string trace_to_string(const Trace& trace) {
    std::ostringstream out;
    write_trace(trace, out);
    return out.str();
}

Trace read_trace(std::istream& in) {
    Parser p;
    std::string line;

    p.line = 1;
    if (!std::getline(in, line)) {
        p.fail("empty input, expected header line");
    }
    Trace trace;
    trace.config = parse_header(line, p);

    const std::uint64_t ticks = trace.config.num_ticks;
    const std::uint32_t agents = trace.config.num_agents;
    trace.records.reserve(ticks + 1);

    for (std::uint64_t t = 0; t <= ticks; ++t) {
        TraceRecord rec;
        rec.tick = t;
        rec.agents.reserve(agents);
        for (std::uint32_t i = 0; i < agents; ++i) {
            ++p.line;
            if (!std::getline(in, line)) {
                p.fail("truncated trace: expected agent row for tick " + std::to_string(t));
            }
            const auto tok = split(line, ' ');
            if (tok.size() != 9 || tok[0] != "A") {
                p.fail("expected 'A <tick> <id> <x> <y> <heading> <sense> <v> <omega>'");
            }
            if (p.parse_int<std::uint64_t>(tok[1], "tick") != t) {
                p.fail("agent row tick mismatch: expected " + std::to_string(t) + ", got '" +
                       std::string(tok[1]) + "'");
            }
            TraceAgentRow row;
            row.id = p.parse_int<std::uint32_t>(tok[2], "id");
            if (!rec.agents.empty() && row.id <= rec.agents.back().id) {
                p.fail("agent ids must be strictly ascending within a tick");
            }
            row.x = p.parse_double(tok[3], "x");
            row.y = p.parse_double(tok[4], "y");
            row.heading = p.parse_double(tok[5], "heading");
            row.sensed = p.parse_bool(tok[6], "sense");
            row.v = p.parse_double(tok[7], "v");
            row.omega = p.parse_double(tok[8], "omega");
            rec.agents.push_back(row);
        }
        ++p.line;
        if (!std::getline(in, line)) {
            p.fail("truncated trace: expected metrics row for tick " + std::to_string(t));
        }
        const auto tok = split(line, ' ');
        if (tok.size() != 8 || tok[0] != "M") {
            p.fail("expected 'M <tick> <com_x> <com_y> <L> <scatter> <radial_var> "
                   "<mean_radius>'");
        }
        if (p.parse_int<std::uint64_t>(tok[1], "tick") != t) {
            p.fail("metrics row tick mismatch: expected " + std::to_string(t) + ", got '" +
                   std::string(tok[1]) + "'");
        }
        rec.metrics.center_of_mass.x = p.parse_double(tok[2], "com_x");
        rec.metrics.center_of_mass.y = p.parse_double(tok[3], "com_y");
        rec.metrics.angular_momentum = p.parse_double(tok[4], "angular_momentum");
        rec.metrics.scatter = p.parse_double(tok[5], "scatter");
        rec.metrics.radial_variance = p.parse_double(tok[6], "radial_variance");
        rec.metrics.mean_radius = p.parse_double(tok[7], "mean_radius");
        trace.records.push_back(std::move(rec));
    }

    ++p.line;
    if (std::getline(in, line) && !line.empty()) {
        p.fail("trailing data after final record");
    }
    return trace;
}

Trace read_trace(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("read_trace: cannot open '" + path.string() + "'");
    }
    return read_trace(in);
}

Trace trace_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_trace(in);
}

void write_metrics_csv(const Trace& trace, std::ostream& out) {
    out << "tick,com_x,com_y,angular_momentum,scatter,radial_variance,mean_radius\n";
    for (const TraceRecord& rec : trace.records) {
        const SwarmMetrics& m = rec.metrics;
        out << rec.tick << ',' << format_double(m.center_of_mass.x) << ','
            << format_double(m.center_of_mass.y) << ',' << format_double(m.angular_momentum)
            << ',' << format_double(m.scatter) << ',' << format_double(m.radial_variance) << ','
            << format_double(m.mean_radius) << '\n';
    }
}

}  // namespace swarmsim
