#pragma once

// Counter-based random number streams (Philox4x32-10).
//
// Every stream is identified by (seed, sample_index, level, lane). Draws are
// a pure function of the stream key and an internal 64-bit block counter, so
// regenerating a stream from its provenance is bit-identical no matter how
// work is scheduled across threads.

#include <array>
#include <cstdint>

namespace oy {

// One keyed Philox block: 10 rounds, 128-bit counter, 64-bit key.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t sample_index = 0,
                       std::uint32_t level = 0, std::uint32_t lane = 0);

    std::uint64_t next_u64();

    /// Uniform draw in (0, 1].
    double next_unit();

    /// Standard normal via Box-Muller (pairs cached).
    double next_gaussian();

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> salt_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buf_{};
    int buf_pos_ = 2;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

// SplitMix64 finalizer, used to derive stream keys from provenance fields.
std::uint64_t mix64(std::uint64_t x);

}  // namespace oy
