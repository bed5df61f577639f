#include "swarmsim/config.hpp"

#include <cmath>

#include "swarmsim/strfmt.hpp"

namespace swarmsim {

Polygon default_arena() {
    return Polygon{{{-5.0, -5.0}, {5.0, -5.0}, {5.0, 5.0}, {-5.0, 5.0}}};
}

namespace {

void require(bool ok, const std::string& key, const std::string& message) {
    if (!ok) {
        throw ConfigError("config error: " + key + ": " + message, key);
    }
}

}  // namespace

void SimConfig::validate() const {
    require(std::isfinite(tick_rate) && tick_rate > 0.0, "tick_rate", "must be > 0");
    require(num_agents >= 1, "num_agents", "must be >= 1");
    require(std::isfinite(agent_radius) && agent_radius > 0.0, "agent_radius", "must be > 0");
    require(std::isfinite(spawn_radius), "spawn_radius", "must be finite");

    const double packing_bound = agent_radius * static_cast<double>(num_agents) / kPi;
    require(spawn_radius > packing_bound, "spawn_radius",
            "must exceed agent_radius * num_agents / pi = " + format_short(packing_bound) +
                " for a feasible non-overlapping spawn");

    require(std::isfinite(sensor.view_distance) && sensor.view_distance > 0.0,
            "view_distance", "must be > 0");
    require(std::isfinite(sensor.fov_left_bound) && std::isfinite(sensor.fov_right_bound),
            "fov_left_bound", "bounds must be finite");
    require(sensor.fov_right_bound < sensor.fov_left_bound, "fov_right_bound",
            "must be less than fov_left_bound (both measured positive-left); got " +
                format_short(rad_to_deg(sensor.fov_right_bound)) + " deg >= " +
                format_short(rad_to_deg(sensor.fov_left_bound)) + " deg");

    require(std::isfinite(controller.forward_speed) && controller.forward_speed > 0.0,
            "forward_speed", "must be > 0");
    require(std::isfinite(controller.turn_rate) && controller.turn_rate > 0.0,
            "turn_rate", "must be > 0");

    require(std::isfinite(dynamics.omega_epsilon) && dynamics.omega_epsilon > 0.0,
            "omega_epsilon", "must be > 0");

    require(arena.valid(), "arena",
            "must be a simple counter-clockwise polygon with >= 3 finite vertices");
}

}  // namespace swarmsim
