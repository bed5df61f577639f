#include "swarmsim/sensor.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsim {

bool disc_in_cone(const Pose& observer, Vec2 disc_center, double disc_radius,
                  const SensorParams& params) {
    const Vec2 rel = disc_center - observer.position;
    const double d = rel.norm();
    if (d <= disc_radius) {
        return true;
    }
    if (d - disc_radius > params.view_distance) {
        return false;
    }
    const double beta = wrap_angle(std::atan2(rel.y, rel.x) - observer.heading);
    const double alpha = std::asin(std::min(1.0, disc_radius / d));
    const double cone_center = 0.5 * (params.fov_left_bound + params.fov_right_bound);
    const double cone_half_width = 0.5 * (params.fov_left_bound - params.fov_right_bound);
    // Two arcs on the circle overlap iff their centers are closer than the
    // sum of their half-widths (valid while the widths sum below a full turn).
    if (alpha + cone_half_width >= kPi) {
        return true;
    }
    return std::abs(wrap_angle(beta - cone_center)) <= alpha + cone_half_width;
}

SensorReading binary_sense(const AgentState& observer, std::span<const AgentState> others,
                           const SensorParams& params, double agent_radius) {
    if (!observer.pose.position.finite() || !std::isfinite(observer.pose.heading)) {
        throw std::domain_error("binary_sense: non-finite observer pose");
    }
    for (const AgentState& other : others) {
        if (!other.pose.position.finite()) {
            throw std::domain_error("binary_sense: non-finite target position");
        }
        if (disc_in_cone(observer.pose, other.pose.position, agent_radius, params)) {
            return {true};
        }
    }
    return {false};
}

}  // namespace swarmsim
