#pragma once

#include <cstdio>
#include <string>

namespace swarmsim {

/// Shortest-width decimal with 17 significant digits; round-trips IEEE-754
/// doubles exactly through text.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// %.6g convenience for human-facing messages and SVG coordinates.
inline std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace swarmsim
