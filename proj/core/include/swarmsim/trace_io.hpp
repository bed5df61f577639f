#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "swarmsim/engine.hpp"

namespace swarmsim {

/// Malformed trace input: bad magic, version mismatch, truncation, row-count
/// mismatch or an unparsable field. line() is 1-based.
class TraceFormatError : public std::runtime_error {
public:
    TraceFormatError(const std::string& message, std::size_t line)
        : std::runtime_error("trace format error at line " + std::to_string(line) + ": " +
                             message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Line-delimited UTF-8 trace format, version 1.
///
///   SWARMTRACE 1 key=value ...         one header line with the full config
///   A <tick> <id> <x> <y> <heading> <sense> <v> <omega>   per agent
///   M <tick> <com_x> <com_y> <L> <scatter> <radial_var> <mean_radius>
///
/// Per tick: num_agents A rows in ascending id order, then one M row.
/// Doubles are written with 17 significant digits, so read -> write
/// reproduces the input byte for byte.
void write_trace(const Trace& trace, std::ostream& out);
void write_trace(const Trace& trace, const std::filesystem::path& path);
std::string trace_to_string(const Trace& trace);

Trace read_trace(std::istream& in);
Trace read_trace(const std::filesystem::path& path);
Trace trace_from_string(const std::string& text);

/// Metric rows as CSV (header + one row per tick), values formatted exactly
/// as in the trace M rows.
void write_metrics_csv(const Trace& trace, std::ostream& out);

}  // namespace swarmsim
