#include "swarmsim/geometry.hpp"

#include <stdexcept>

namespace swarmsim {

double wrap_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw std::domain_error("wrap_angle: non-finite angle");
    }
    // remainder() is exactly rounded and lands in [-pi, pi]; fold +pi onto -pi
    // to keep the half-open convention.
    double w = std::remainder(theta, kTwoPi);
    if (w >= kPi) {
        w -= kTwoPi;
    }
    return w;
}

double bearing_to(const Pose& observer, Vec2 point) {
    if (!observer.position.finite() || !std::isfinite(observer.heading) || !point.finite()) {
        throw std::domain_error("bearing_to: non-finite input");
    }
    const Vec2 rel = point - observer.position;
    if (rel.x == 0.0 && rel.y == 0.0) {
        throw std::domain_error("bearing_to: point coincides with observer");
    }
    return wrap_angle(std::atan2(rel.y, rel.x) - observer.heading);
}

double Polygon::signed_area() const {
    double twice_area = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices[i];
        const Vec2 b = vertices[(i + 1) % n];
        twice_area += a.cross(b);
    }
    return 0.5 * twice_area;
}

Vec2 Polygon::centroid() const {
    const double area = signed_area();
    if (area == 0.0) {
        throw std::domain_error("Polygon::centroid: degenerate polygon");
    }
    Vec2 c;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices[i];
        const Vec2 b = vertices[(i + 1) % n];
        const double w = a.cross(b);
        c += (a + b) * w;
    }
    return c * (1.0 / (6.0 * area));
}

std::pair<Vec2, Vec2> Polygon::bounding_box() const {
    if (vertices.empty()) {
        throw std::domain_error("Polygon::bounding_box: empty polygon");
    }
    Vec2 lo = vertices.front();
    Vec2 hi = vertices.front();
    for (const Vec2 v : vertices) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
    return {lo, hi};
}

namespace {

// Proper or improper intersection of closed segments [a,b] and [c,d].
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const auto orient = [](Vec2 p, Vec2 q, Vec2 r) {
        const double v = (q - p).cross(r - p);
        return (v > 0.0) - (v < 0.0);
    };
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) {
        return true;
    }
    const auto on_segment = [](Vec2 p, Vec2 q, Vec2 r) {
        return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) &&
               std::min(p.y, r.y) <= q.y && q.y <= std::max(p.y, r.y);
    };
    if (o1 == 0 && on_segment(a, c, b)) return true;
    if (o2 == 0 && on_segment(a, d, b)) return true;
    if (o3 == 0 && on_segment(c, a, d)) return true;
    if (o4 == 0 && on_segment(c, b, d)) return true;
    return false;
}

}  // namespace

bool Polygon::valid() const {
    const std::size_t n = vertices.size();
    if (n < 3) {
        return false;
    }
    for (const Vec2 v : vertices) {
        if (!v.finite()) {
            return false;
        }
    }
    if (signed_area() <= 0.0) {
        return false;
    }
    // O(n^2) simplicity check; arenas are small.
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices[i];
        const Vec2 b = vertices[(i + 1) % n];
        if (a == b) {
            return false;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                continue;
            }
            if (segments_intersect(a, b, vertices[j], vertices[(j + 1) % n])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace swarmsim
