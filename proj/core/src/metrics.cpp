#include "swarmsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsim {

namespace {

constexpr double kDegenerateNorm = 1e-12;

void require_nonempty(std::span<const AgentState> agents, const char* op) {
    if (agents.empty()) {
        throw std::domain_error(std::string(op) + ": empty agent list");
    }
}

}  // namespace

Vec2 center_of_mass(std::span<const AgentState> agents) {
    require_nonempty(agents, "center_of_mass");
    Vec2 sum;
    for (const AgentState& a : agents) {
        sum += a.pose.position;
    }
    return sum * (1.0 / static_cast<double>(agents.size()));
}

double angular_momentum(std::span<const AgentState> agents, double dt) {
    require_nonempty(agents, "angular_momentum");
    if (!(dt > 0.0)) {
        throw std::domain_error("angular_momentum: dt must be > 0");
    }
    const Vec2 com = center_of_mass(agents);
    double sum = 0.0;
    for (const AgentState& a : agents) {
        const Vec2 r = a.pose.position - com;
        const Vec2 v = a.delta_position * (1.0 / dt);
        const double r_norm = r.norm();
        const double v_norm = v.norm();
        if (r_norm < kDegenerateNorm || v_norm < kDegenerateNorm) {
            continue;
        }
        sum += (r * (1.0 / r_norm)).cross(v * (1.0 / v_norm));
    }
    return sum / static_cast<double>(agents.size());
}

double scatter(std::span<const AgentState> agents) {
    require_nonempty(agents, "scatter");
    const Vec2 com = center_of_mass(agents);
    double sum = 0.0;
    for (const AgentState& a : agents) {
        sum += (a.pose.position - com).norm_sq();
    }
    return sum / static_cast<double>(agents.size());
}

double mean_radius(std::span<const AgentState> agents) {
    require_nonempty(agents, "mean_radius");
    const Vec2 com = center_of_mass(agents);
    double sum = 0.0;
    for (const AgentState& a : agents) {
        sum += (a.pose.position - com).norm();
    }
    return sum / static_cast<double>(agents.size());
}

double radial_variance(std::span<const AgentState> agents) {
    require_nonempty(agents, "radial_variance");
    const Vec2 com = center_of_mass(agents);
    const double mu = mean_radius(agents);
    double sum = 0.0;
    for (const AgentState& a : agents) {
        const double dev = (a.pose.position - com).norm() - mu;
        sum += dev * dev;
    }
    return sum / static_cast<double>(agents.size());
}

SwarmMetrics compute_metrics(std::span<const AgentState> agents, double dt) {
    SwarmMetrics m;
    m.center_of_mass = center_of_mass(agents);
    m.angular_momentum = angular_momentum(agents, dt);
    m.scatter = scatter(agents);
    m.radial_variance = radial_variance(agents);
    m.mean_radius = mean_radius(agents);
    return m;
}

bool detect_milling(std::span<const SwarmMetrics> metric_history, std::size_t window,
                    double L_min, double rv_ratio_max) {
    if (window < 1) {
        throw std::domain_error("detect_milling: window must be >= 1");
    }
    if (!(L_min > 0.0 && L_min < 1.0) || !(rv_ratio_max > 0.0 && rv_ratio_max < 1.0)) {
        throw std::domain_error("detect_milling: thresholds must lie in (0, 1)");
    }
    if (metric_history.size() < window) {
        return false;
    }
    for (const SwarmMetrics& m : metric_history.subspan(metric_history.size() - window)) {
        if (std::abs(m.angular_momentum) < L_min) {
            return false;
        }
        // A point cluster (mean_radius 0 forces radial_variance 0) is a
        // degenerate ring; the |L| gate is what rejects it.
        const double ratio =
            m.mean_radius > 0.0 ? std::sqrt(m.radial_variance) / m.mean_radius : 0.0;
        if (ratio > rv_ratio_max) {
            return false;
        }
    }
    return true;
}

}  // namespace swarmsim
