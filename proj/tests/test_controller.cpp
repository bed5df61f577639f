#include <doctest.h>

#include "swarmsim/config.hpp"
#include "swarmsim/controller.hpp"
#include "swarmsim/sensor.hpp"

using namespace swarmsim;

TEST_SUITE("controller") {

TEST_CASE("sense true turns left, sense false turns right") {
    ControllerParams params;
    params.forward_speed = 0.25;
    params.turn_rate = 1.0;

    const ControlOutput on = binary_controller(SensorReading{true}, params);
    CHECK(on.v == 0.25);
    CHECK(on.omega == 1.0);

    const ControlOutput off = binary_controller(SensorReading{false}, params);
    CHECK(off.v == 0.25);
    CHECK(off.omega == -1.0);
}

TEST_CASE("magnitudes pass through unchanged") {
    ControllerParams params;
    params.forward_speed = 0.1;
    params.turn_rate = 2.0;
    const ControlOutput out = binary_controller(SensorReading{true}, params);
    CHECK(out.v == 0.1);
    CHECK(out.omega == 2.0);
}

TEST_CASE("speed is never modulated and turn signs mirror exactly") {
    ControllerParams params;
    params.forward_speed = 0.173;
    params.turn_rate = 1.41;
    const ControlOutput on = binary_controller(SensorReading{true}, params);
    const ControlOutput off = binary_controller(SensorReading{false}, params);
    CHECK(on.v == off.v);
    CHECK(on.omega == -off.omega);
}

TEST_CASE("stateless: repeated calls agree bitwise") {
    ControllerParams params;
    for (int i = 0; i < 100; ++i) {
        const ControlOutput a = binary_controller(SensorReading{i % 2 == 0}, params);
        const ControlOutput b = binary_controller(SensorReading{i % 2 == 0}, params);
        CHECK(a == b);
    }
}

TEST_CASE("differential-drive wheel mapping") {
    // omega = (right - left) / track; positive omega (left turn) drives the
    // right wheel faster.
    const ControlOutput cmd{0.3, 1.2};
    const auto [left, right] = wheel_speeds(cmd, 0.2);
    CHECK(left == doctest::Approx(0.3 - 1.2 * 0.1));
    CHECK(right == doctest::Approx(0.3 + 1.2 * 0.1));
    CHECK((right - left) / 0.2 == doctest::Approx(cmd.omega));
    CHECK(0.5 * (right + left) == doctest::Approx(cmd.v));
}

}  // TEST_SUITE
