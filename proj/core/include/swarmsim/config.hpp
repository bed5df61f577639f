#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "swarmsim/geometry.hpp"

namespace swarmsim {

/// Configuration or validation failure. Carries the offending key (when
/// known) and the 1-based line number (when raised by the file parser).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::string message, std::string key = {}, int line = 0)
        : std::runtime_error(std::move(message)), key_(std::move(key)), line_(line) {}

    const std::string& key() const { return key_; }
    int line() const { return line_; }

private:
    std::string key_;
    int line_;
};

inline constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Binary cone sensor geometry. Both field-of-view bounds are measured
/// positive to the left of the heading; the stock values put the whole cone
/// slightly left of center. The cone side sets the mill radius, not the
/// mill's turning direction — that follows the controller's no-reading turn.
struct SensorParams {
    double view_distance = 3.0;
    double fov_left_bound = deg_to_rad(11.5);
    double fov_right_bound = deg_to_rad(4.0);
    bool detect_walls = false; // reserved; wall sensing is not modeled yet

    bool operator==(const SensorParams&) const = default;
};

/// Saturated twist magnitudes for the binary controller. Defaults are the
/// winning cell of the committed calibration sweep (grid 0.1..0.4 m/s x
/// 0.5..2.5 rad/s, seeds 1..10, 9000 ticks; see tools/calibrate and the
/// README): 10/10 seeds mill, median onset 1082 ticks.
struct ControllerParams {
    double forward_speed = 0.4; // m/s
    double turn_rate = 2.5;     // rad/s

    bool operator==(const ControllerParams&) const = default;
};

enum class Integration {
    exact_arc, // closed-form constant-twist arc
    euler,     // first-order reference integrator, for comparison tests
};

struct DynamicsParams {
    Integration integration = Integration::exact_arc;
    double omega_epsilon = 1e-9; // |omega| below this takes the straight-line limit

    bool operator==(const DynamicsParams&) const = default;
};

/// 10 m x 10 m square centered at the origin, counter-clockwise.
Polygon default_arena();

/// Every tunable of a run. A SimConfig plus a seed fully determines a trace.
struct SimConfig {
    double tick_rate = 30.0; // ticks per simulated second
    std::uint64_t num_ticks = 9000;
    std::uint32_t num_agents = 9;
    std::uint64_t seed = 0;
    SensorParams sensor;
    ControllerParams controller;
    DynamicsParams dynamics;
    Polygon arena = default_arena();
    double spawn_radius = 1.5; // m, around the arena centroid
    double agent_radius = 0.1; // m, body disc radius

    bool operator==(const SimConfig&) const = default;

    double dt() const { return 1.0 / tick_rate; }

    /// Throws ConfigError naming the violated key if any invariant fails.
    void validate() const;
};

}  // namespace swarmsim
