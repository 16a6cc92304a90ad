#pragma once

#include <cstdint>
#include <random>

namespace levyhull {

// Reproducible stream handle: a (seed, stream) pair deterministically selects a
// generator state, so replica k of an experiment can be re-run bit-for-bit in
// isolation regardless of scheduling. Derive disjoint substreams with fork().
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    RngStream fork(std::uint64_t substream) const {
        return RngStream{seed, mix(stream * 0x2545F4914F6CDD1Dull + substream + 1)};
    }

    std::mt19937_64 engine() const {
        return std::mt19937_64(mix(mix(seed) ^ mix(stream + 0x9E3779B97F4A7C15ull)));
    }
};

} // namespace levyhull
