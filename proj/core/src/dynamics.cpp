#include "swarmsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsim {

Pose unicycle_step(const Pose& pose, ControlOutput cmd, double dt, const DynamicsParams& params) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::domain_error("unicycle_step: dt must be positive and finite");
    }
    if (!std::isfinite(cmd.v) || !std::isfinite(cmd.omega)) {
        throw std::domain_error("unicycle_step: command must be finite");
    }
    const double theta = pose.heading;

    if (params.integration == Integration::euler) {
        return {{pose.position.x + cmd.v * dt * std::cos(theta),
                 pose.position.y + cmd.v * dt * std::sin(theta)},
                wrap_angle(theta + cmd.omega * dt)};
    }

    if (std::abs(cmd.omega) < params.omega_epsilon) {
        // Straight-line limit; heading is untouched, not rewrapped.
        return {{pose.position.x + cmd.v * dt * std::cos(theta),
                 pose.position.y + cmd.v * dt * std::sin(theta)},
                theta};
    }

    const double radius = cmd.v / cmd.omega;
    const double dtheta = cmd.omega * dt;
    return {{pose.position.x + radius * (std::sin(theta + dtheta) - std::sin(theta)),
             pose.position.y - radius * (std::cos(theta + dtheta) - std::cos(theta))},
            wrap_angle(theta + dtheta)};
}

}  // namespace swarmsim
