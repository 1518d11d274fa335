#pragma once

#include <cstdint>

namespace permatch {

// SplitMix64 (Steele, Lea, Flood 2014): tiny, portable, and identical on every
// platform, so seeded runs are byte-for-byte reproducible. The mixing constants
// are the reference ones. Stream derivation for independent trials:
// SplitMix64(seed).fork(trial_index).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Independent child stream for trial t: seeded by the parent state advanced
    // to position t+1. Children of distinct t never share output positions.
    SplitMix64 fork(std::uint64_t t) const {
        return SplitMix64(state_ + (t + 1) * 0x9E3779B97F4A7C15ull);
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound); bound >= 1. Simple modulo — the tiny bias
    // at 64-bit scale is irrelevant for test-case sampling and keeps the
    // algorithm trivially portable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

}  // namespace permatch
