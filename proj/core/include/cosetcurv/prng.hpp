#pragma once

#include <cstdint>

namespace cosetcurv {

// Counter-based SplitMix64. Stateless access: the k-th word of the stream for a
// given seed is finalize(seed + (k+1)*GAMMA). Identical on every platform, which
// is what makes seeded constructions reproducible byte-for-byte.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Sequential flavor for consumers that just need a stream.
struct SplitMix64 {
    std::uint64_t seed;
    std::uint64_t counter = 0;
    explicit SplitMix64(std::uint64_t s) : seed(s) {}
    std::uint64_t next() { return splitmix64_at(seed, counter++); }
    // Uniform integer in [0, bound) by rejection-free multiply-shift; bias is
    // negligible for the desk-scale bounds used here and the stream stays aligned.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
};

} // namespace cosetcurv
