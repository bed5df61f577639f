#pragma once

#include "swarmsim/config.hpp"
#include "swarmsim/controller.hpp"

namespace swarmsim {

/// Advance a pose by one step of duration dt under a constant twist.
///
/// exact_arc mode follows the closed-form circular arc of radius v/omega
/// (straight-line limit when |omega| < omega_epsilon), so the step is exact
/// for any dt. euler mode is the first-order integrator kept for comparison
/// tests. Throws std::domain_error for dt <= 0 or a non-finite command.
Pose unicycle_step(const Pose& pose, ControlOutput cmd, double dt, const DynamicsParams& params);

}  // namespace swarmsim
