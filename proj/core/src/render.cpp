#include "swarmsim/render.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "swarmsim/strfmt.hpp"

namespace swarmsim {

namespace {

constexpr const char* kSensedColor = "#d1495b";   // sensor reads true
constexpr const char* kUnsensedColor = "#30638e"; // sensor reads false

// SVG y grows downward; emit world points with y negated.
std::string pt(double x, double y) { return format_short(x) + "," + format_short(-y); }

void line(std::string& svg, double x1, double y1, double x2, double y2, const char* color,
          double width) {
    svg += "  <line x1=\"" + format_short(x1) + "\" y1=\"" + format_short(-y1) + "\" x2=\"" +
           format_short(x2) + "\" y2=\"" + format_short(-y2) + "\" stroke=\"" + color +
           "\" stroke-width=\"" + format_short(width) + "\"/>\n";
}

}  // namespace

std::string render_frame_svg(const TraceRecord& record, const SimConfig& config) {
    const auto [lo, hi] = config.arena.bounding_box();
    const double extent = std::max(hi.x - lo.x, hi.y - lo.y);
    const double margin = 0.05 * extent;
    const double width = (hi.x - lo.x) + 2.0 * margin;
    const double height = (hi.y - lo.y) + 2.0 * margin;
    const double thin = 0.002 * extent;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" +
           format_short(800.0 * height / width) + "\" viewBox=\"" + format_short(lo.x - margin) +
           " " + format_short(-(hi.y + margin)) + " " + format_short(width) + " " +
           format_short(height) + "\">\n";

    svg += "  <polygon points=\"";
    for (std::size_t i = 0; i < config.arena.vertices.size(); ++i) {
        if (i > 0) {
            svg += ' ';
        }
        svg += pt(config.arena.vertices[i].x, config.arena.vertices[i].y);
    }
    svg += "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"" + format_short(2.0 * thin) +
           "\"/>\n";

    const double view = config.sensor.view_distance;
    for (const TraceAgentRow& a : record.agents) {
        const char* color = a.sensed ? kSensedColor : kUnsensedColor;

        // Sensor cone wedge between the two absolute FOV bound angles. The
        // emitted y-flip turns the world-CCW arc into sweep direction 0.
        const double angle_right = a.heading + config.sensor.fov_right_bound;
        const double angle_left = a.heading + config.sensor.fov_left_bound;
        const double rx = a.x + view * std::cos(angle_right);
        const double ry = a.y + view * std::sin(angle_right);
        const double lx = a.x + view * std::cos(angle_left);
        const double ly = a.y + view * std::sin(angle_left);
        svg += "  <path d=\"M " + pt(a.x, a.y) + " L " + pt(rx, ry) + " A " + format_short(view) +
               " " + format_short(view) + " 0 0 0 " + pt(lx, ly) + " Z\" fill=\"" + color +
               "\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";

        svg += "  <circle cx=\"" + format_short(a.x) + "\" cy=\"" + format_short(-a.y) +
               "\" r=\"" + format_short(config.agent_radius) + "\" fill=\"" + color +
               "\" stroke=\"#222222\" stroke-width=\"" + format_short(thin) + "\"/>\n";

        line(svg, a.x, a.y, a.x + 1.6 * config.agent_radius * std::cos(a.heading),
             a.y + 1.6 * config.agent_radius * std::sin(a.heading), "#222222", thin);
    }

    // Center-of-mass cross.
    const Vec2 com = record.metrics.center_of_mass;
    const double arm = 0.012 * extent;
    line(svg, com.x - arm, com.y, com.x + arm, com.y, "#222222", thin);
    line(svg, com.x, com.y - arm, com.x, com.y + arm, "#222222", thin);

    svg += "</svg>\n";
    return svg;
}

std::vector<std::filesystem::path> render_frames(const Trace& trace, std::uint64_t every,
                                                 const std::filesystem::path& out_dir) {
    if (every < 1) {
        throw std::invalid_argument("render_frames: every must be >= 1");
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("render_frames: cannot create '" + out_dir.string() +
                                 "': " + ec.message());
    }

    std::vector<std::filesystem::path> written;
    for (std::uint64_t tick = 0; tick < trace.records.size(); tick += every) {
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%06llu.svg",
                      static_cast<unsigned long long>(tick));
        const std::filesystem::path path = out_dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("render_frames: cannot open '" + path.string() +
                                     "' for writing");
        }
        const std::string svg = render_frame_svg(trace.records[tick], trace.config);
        out.write(svg.data(), static_cast<std::streamsize>(svg.size()));
        if (!out) {
            throw std::runtime_error("render_frames: failed writing '" + path.string() + "'");
        }
        written.push_back(path);
    }
    return written;
}

}  // namespace swarmsim
