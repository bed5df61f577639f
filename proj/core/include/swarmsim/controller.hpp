#pragma once

#include <utility>

#include "swarmsim/config.hpp"
#include "swarmsim/sensor.hpp"

namespace swarmsim {

/// Body-frame twist command. Positive omega turns counter-clockwise (left).
struct ControlOutput {
    double v = 0.0;     // m/s
    double omega = 0.0; // rad/s

    bool operator==(const ControlOutput&) const = default;
};

/// The binary milling controller: constant forward speed, turn left when the
/// sensor reads true, turn right when it reads false. Stateless.
ControlOutput binary_controller(SensorReading reading, const ControllerParams& params);

/// Differential-drive equivalent of a twist: {left, right} wheel surface
/// speeds for a given track width. Provided for users driving real robots;
/// the engine integrates the twist directly.
std::pair<double, double> wheel_speeds(ControlOutput cmd, double track_width);

}  // namespace swarmsim
