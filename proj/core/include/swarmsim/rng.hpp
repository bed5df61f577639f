#pragma once

#include <cstdint>
#include <utility>

#include "swarmsim/geometry.hpp"

namespace swarmsim {

/// SplitMix64 with the standard constants, pinned so traces reproduce
/// bit-exactly across implementations and platforms.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// One step of the generator: state' = state + 0x9E3779B97F4A7C15,
    /// output = mix(state').
    static constexpr std::pair<std::uint64_t, std::uint64_t> step(std::uint64_t state) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z = z ^ (z >> 31);
        return {state, z};
    }

    constexpr std::uint64_t next() {
        auto [state, out] = step(state_);
        state_ = state;
        return out;
    }

    /// Uniform double in [0, 1): the top 53 bits of the output scaled by
    /// 2^-53 (i.e. output / 2^64 truncated to double precision, never 1.0).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform heading in [-pi, pi).
    double next_heading() { return next_uniform(-kPi, kPi); }

    constexpr std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace swarmsim
