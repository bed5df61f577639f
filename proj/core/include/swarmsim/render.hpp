#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "swarmsim/engine.hpp"

namespace swarmsim {

/// Render one record as a standalone SVG document: arena outline, one disc
/// per agent with a heading tick-mark and a translucent sensor cone (both
/// colored by the sense value), and a center-of-mass marker. The viewport is
/// derived from the arena bounding box only, so frames from one trace share
/// a fixed world-to-view mapping and identical inputs produce identical
/// bytes.
std::string render_frame_svg(const TraceRecord& record, const SimConfig& config);

/// Write one SVG per sampled tick (0, every, 2*every, ...) into out_dir as
/// frame_<tick>.svg. Creates out_dir if needed. Returns the written paths.
/// Throws std::runtime_error when the directory or a file is not writable.
std::vector<std::filesystem::path> render_frames(const Trace& trace, std::uint64_t every,
                                                 const std::filesystem::path& out_dir);

}  // namespace swarmsim
