#include "swarmsim/config_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "swarmsim/strfmt.hpp"

namespace swarmsim {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void fail(const std::string& message, const std::string& key, int line) {
    throw ConfigError("config error at line " + std::to_string(line) + ": " + message, key,
                      line);
}

double parse_double(std::string_view value, const std::string& key, int line) {
    const std::string_view v = trim(value);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        fail("malformed number '" + std::string(v) + "' for key '" + key + "'", key, line);
    }
    return out;
}

template <typename Int>
Int parse_int(std::string_view value, const std::string& key, int line) {
    const std::string_view v = trim(value);
    Int out{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        fail("malformed integer '" + std::string(v) + "' for key '" + key + "'", key, line);
    }
    return out;
}

bool parse_bool(std::string_view value, const std::string& key, int line) {
    const std::string_view v = trim(value);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail("malformed boolean '" + std::string(v) + "' for key '" + key + "' (use true/false)",
         key, line);
}

Polygon parse_vertices(std::string_view value, const std::string& key, int line) {
    Polygon poly;
    std::string_view rest = value;
    while (true) {
        const std::size_t semi = rest.find(';');
        const std::string_view pair = trim(semi == std::string_view::npos ? rest
                                                                          : rest.substr(0, semi));
        const std::size_t comma = pair.find(',');
        if (comma == std::string_view::npos) {
            fail("malformed vertex '" + std::string(pair) + "' (expected x,y)", key, line);
        }
        poly.vertices.push_back({parse_double(pair.substr(0, comma), key, line),
                                 parse_double(pair.substr(comma + 1), key, line)});
        if (semi == std::string_view::npos) {
            break;
        }
        rest = rest.substr(semi + 1);
    }
    return poly;
}

}  // namespace

SimConfig parse_config(const std::string& text) {
    SimConfig config;
    std::map<std::string, int> key_lines; // fully qualified "section.key" -> line

    const auto mark = [&](const std::string& section, const std::string& target_key, int line) {
        // fov bounds share a target between the deg and rad spellings
        const auto [it, inserted] = key_lines.emplace(section + "." + target_key, line);
        if (!inserted) {
            fail("duplicate assignment of '" + target_key + "' (first at line " +
                     std::to_string(it->second) + ")",
                 target_key, line);
        }
    };

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line{raw};
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }

        if (line.front() == '[') {
            if (line.back() != ']') {
                fail("malformed section header '" + std::string(line) + "'", "", line_no);
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "sim" && section != "sensor" && section != "controller" &&
                section != "dynamics" && section != "arena") {
                fail("unknown section '[" + section + "]'", "", line_no);
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail("expected 'key = value', got '" + std::string(line) + "'", "", line_no);
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (section.empty()) {
            fail("key '" + key + "' appears before any [section] header", key, line_no);
        }

        if (section == "sim") {
            if (key == "tick_rate") {
                config.tick_rate = parse_double(value, key, line_no);
            } else if (key == "num_ticks") {
                config.num_ticks = parse_int<std::uint64_t>(value, key, line_no);
            } else if (key == "num_agents") {
                config.num_agents = parse_int<std::uint32_t>(value, key, line_no);
            } else if (key == "seed") {
                config.seed = parse_int<std::uint64_t>(value, key, line_no);
            } else if (key == "spawn_radius") {
                config.spawn_radius = parse_double(value, key, line_no);
            } else if (key == "agent_radius") {
                config.agent_radius = parse_double(value, key, line_no);
            } else {
                fail("unknown key '" + key + "' in section [sim]", key, line_no);
            }
            mark(section, key, line_no);
        } else if (section == "sensor") {
            if (key == "view_distance") {
                config.sensor.view_distance = parse_double(value, key, line_no);
                mark(section, key, line_no);
            } else if (key == "fov_left_bound") {
                config.sensor.fov_left_bound = deg_to_rad(parse_double(value, key, line_no));
                mark(section, "fov_left_bound", line_no);
            } else if (key == "fov_left_bound_rad") {
                config.sensor.fov_left_bound = parse_double(value, key, line_no);
                mark(section, "fov_left_bound", line_no);
            } else if (key == "fov_right_bound") {
                config.sensor.fov_right_bound = deg_to_rad(parse_double(value, key, line_no));
                mark(section, "fov_right_bound", line_no);
            } else if (key == "fov_right_bound_rad") {
                config.sensor.fov_right_bound = parse_double(value, key, line_no);
                mark(section, "fov_right_bound", line_no);
            } else if (key == "detect_walls") {
                config.sensor.detect_walls = parse_bool(value, key, line_no);
                mark(section, key, line_no);
            } else {
                fail("unknown key '" + key + "' in section [sensor]", key, line_no);
            }
        } else if (section == "controller") {
            if (key == "forward_speed") {
                config.controller.forward_speed = parse_double(value, key, line_no);
            } else if (key == "turn_rate") {
                config.controller.turn_rate = parse_double(value, key, line_no);
            } else {
                fail("unknown key '" + key + "' in section [controller]", key, line_no);
            }
            mark(section, key, line_no);
        } else if (section == "dynamics") {
            if (key == "integration") {
                const std::string_view v = trim(value);
                if (v == "exact_arc") {
                    config.dynamics.integration = Integration::exact_arc;
                } else if (v == "euler") {
                    config.dynamics.integration = Integration::euler;
                } else {
                    fail("integration must be 'exact_arc' or 'euler', got '" + std::string(v) +
                             "'",
                         key, line_no);
                }
            } else if (key == "omega_epsilon") {
                config.dynamics.omega_epsilon = parse_double(value, key, line_no);
            } else {
                fail("unknown key '" + key + "' in section [dynamics]", key, line_no);
            }
            mark(section, key, line_no);
        } else if (section == "arena") {
            if (key == "vertices") {
                config.arena = parse_vertices(value, key, line_no);
            } else {
                fail("unknown key '" + key + "' in section [arena]", key, line_no);
            }
            mark(section, key, line_no);
        }
    }

    try {
        config.validate();
    } catch (const ConfigError& e) {
        // Attach the line where the offending key was assigned, if it was.
        int line = 0;
        for (const auto& [qualified, at] : key_lines) {
            const std::size_t dot = qualified.find('.');
            if (qualified.substr(dot + 1) == e.key()) {
                line = at;
                break;
            }
        }
        std::string message = e.what();
        if (line > 0) {
            message += " (key '" + e.key() + "' assigned at line " + std::to_string(line) + ")";
        }
        throw ConfigError(message, e.key(), line);
    }
    return config;
}

SimConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config error: cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const SimConfig& c) {
    std::string out;
    out += "[sim]\n";
    out += "tick_rate = " + format_double(c.tick_rate) + "\n";
    out += "num_ticks = " + std::to_string(c.num_ticks) + "\n";
    out += "num_agents = " + std::to_string(c.num_agents) + "\n";
    out += "seed = " + std::to_string(c.seed) + "\n";
    out += "spawn_radius = " + format_double(c.spawn_radius) + "\n";
    out += "agent_radius = " + format_double(c.agent_radius) + "\n";
    out += "\n[sensor]\n";
    out += "view_distance = " + format_double(c.sensor.view_distance) + "\n";
    out += "fov_left_bound_rad = " + format_double(c.sensor.fov_left_bound) + "\n";
    out += "fov_right_bound_rad = " + format_double(c.sensor.fov_right_bound) + "\n";
    out += std::string("detect_walls = ") + (c.sensor.detect_walls ? "true" : "false") + "\n";
    out += "\n[controller]\n";
    out += "forward_speed = " + format_double(c.controller.forward_speed) + "\n";
    out += "turn_rate = " + format_double(c.controller.turn_rate) + "\n";
    out += "\n[dynamics]\n";
    out += std::string("integration = ") +
           (c.dynamics.integration == Integration::exact_arc ? "exact_arc" : "euler") + "\n";
    out += "omega_epsilon = " + format_double(c.dynamics.omega_epsilon) + "\n";
    out += "\n[arena]\n";
    out += "vertices = ";
    for (std::size_t i = 0; i < c.arena.vertices.size(); ++i) {
        if (i > 0) {
            out += "; ";
        }
        out += format_double(c.arena.vertices[i].x) + "," + format_double(c.arena.vertices[i].y);
    }
    out += "\n";
    return out;
}

}  // namespace swarmsim
