#pragma once

#include <filesystem>
#include <string>

#include "swarmsim/config.hpp"

namespace swarmsim {

/// Parse an INI-style config document.
///
/// Grammar: `[section]` headers, `key = value` lines, `#` starts a comment,
/// blank lines ignored. Sections and keys:
///
///   [sim]        tick_rate num_ticks num_agents seed spawn_radius agent_radius
///   [sensor]     view_distance detect_walls
///                fov_left_bound fov_right_bound          (degrees)
///                fov_left_bound_rad fov_right_bound_rad  (radians)
///   [controller] forward_speed turn_rate
///   [dynamics]   integration omega_epsilon
///   [arena]      vertices = x,y; x,y; x,y; ...
///
/// Absent keys take the documented defaults. FOV bounds are accepted in
/// degrees (plain keys) or radians (_rad keys); assigning both forms of the
/// same bound is an error. Unknown keys, malformed values and violated
/// invariants raise ConfigError naming the key and line.
SimConfig parse_config(const std::string& text);
SimConfig parse_config_file(const std::filesystem::path& path);

/// Canonical INI serialization; parse_config(serialize_config(c)) == c
/// bit-exactly. Angles are emitted under the _rad keys, which round-trip
/// doubles exactly (the degree forms would pick up conversion rounding).
std::string serialize_config(const SimConfig& config);

}  // namespace swarmsim
