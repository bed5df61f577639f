#pragma once

#include <cmath>
#include <vector>

namespace swarmsim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// 2D vector in meters. Components must stay finite.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }

    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    /// 2D cross product (z component of the 3D cross).
    constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
    constexpr double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Unit vector for a heading angle.
inline Vec2 heading_vec(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Position plus heading. Heading is kept in [-pi, pi).
struct Pose {
    Vec2 position;
    double heading = 0.0;

    constexpr bool operator==(const Pose&) const = default;
};

/// Wrap an angle into [-pi, pi). Throws std::domain_error on non-finite input.
double wrap_angle(double theta);

/// Signed bearing of `point` as seen from `observer`, in [-pi, pi).
/// Positive means the point lies to the observer's left.
/// Throws std::domain_error if the point coincides with the observer position.
double bearing_to(const Pose& observer, Vec2 point);

/// Simple polygon with counter-clockwise winding; at least 3 vertices.
struct Polygon {
    std::vector<Vec2> vertices;

    bool operator==(const Polygon&) const = default;

    /// Shoelace area; positive for counter-clockwise winding.
    double signed_area() const;
    /// Area-weighted centroid. Requires nonzero area.
    Vec2 centroid() const;
    /// Axis-aligned bounding box as {min, max}.
    std::pair<Vec2, Vec2> bounding_box() const;
    /// True iff >= 3 vertices, all finite, non-self-intersecting, CCW.
    bool valid() const;
};

}  // namespace swarmsim
