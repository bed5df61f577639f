#include "swarmsim/controller.hpp"

namespace swarmsim {

ControlOutput binary_controller(SensorReading reading, const ControllerParams& params) {
    const double omega = reading.value ? params.turn_rate : -params.turn_rate;
    return {params.forward_speed, omega};
}

std::pair<double, double> wheel_speeds(ControlOutput cmd, double track_width) {
    const double half_track = 0.5 * track_width;
    return {cmd.v - cmd.omega * half_track, cmd.v + cmd.omega * half_track};
}

}  // namespace swarmsim
