#pragma once

#include <cstdint>
#include <string>

#include "swarmsim/engine.hpp"

namespace swarmsim {

/// Outcome of replay verification. On divergence, `tick` and `field` locate
/// the first mismatch; `expected` is the stored value, `actual` the value
/// recomputed here.
struct ReplayReport {
    bool ok = true;
    std::uint64_t tick = 0;
    std::string field;
    double expected = 0.0;
    double actual = 0.0;
    std::string message = "replay verified";
};

/// Recompute every metrics row from the agent rows and every tick transition
/// (sensing, control, integration) from the engine, and compare against the
/// stored rows. rel_tol 0 demands bit-exact equality (same-build replay);
/// cross-build replays should pass rel_tol = 1e-9, compared as
/// |a - b| <= rel_tol * max(1, |a|, |b|).
ReplayReport replay_verify(const Trace& trace, double rel_tol = 0.0);

}  // namespace swarmsim
