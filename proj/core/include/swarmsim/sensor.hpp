#pragma once

#include <span>

#include "swarmsim/config.hpp"
#include "swarmsim/types.hpp"

namespace swarmsim {

struct SensorReading {
    bool value = false;

    bool operator==(const SensorReading&) const = default;
};

/// Closed-form disc-vs-cone test for a single target body.
///
/// The target is a disc (center, disc_radius). With d the center distance,
/// beta the signed bearing and alpha = asin(disc_radius / d) the disc's
/// angular half-width, the disc is detected iff
///   d - disc_radius <= view_distance, and
///   [beta - alpha, beta + alpha] overlaps [fov_right_bound, fov_left_bound]
/// with both intervals compared on the wrapped circle. A disc containing the
/// observer position (d <= disc_radius) always reads true: the physical
/// sensor saturates at contact.
bool disc_in_cone(const Pose& observer, Vec2 disc_center, double disc_radius,
                  const SensorParams& params);

/// Synthetic binary infrared proximity sensor: true iff any other agent's
/// body disc intersects the observer's view cone. `others` must not contain
/// the observer itself. Wall sensing (params.detect_walls) is reserved and
/// currently never triggers.
/// Throws std::domain_error on non-finite poses.
SensorReading binary_sense(const AgentState& observer, std::span<const AgentState> others,
                           const SensorParams& params, double agent_radius);

}  // namespace swarmsim
