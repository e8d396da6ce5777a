#pragma once

#include <cstdint>

namespace scldpc {

// SplitMix64 (Steele/Lea/Vigna). Used to expand seeds and derive substreams.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256** 1.0 (Blackman/Vigna), seeded through SplitMix64. Chosen over
// std::mt19937 because the output sequence is pinned by the algorithm itself,
// not by the standard library implementation, so seeds replay across
// platforms and toolchains.
struct Xoshiro256ss {
    std::uint64_t s[4];

    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s) w = sm.next();
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // Unbiased draw from [0, n) by rejection on the top residue class.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }
};

// Independent, replayable substream id for (seed, index). Each Monte Carlo
// candidate gets its own stream so results do not depend on how candidates
// are partitioned across workers.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 sm(seed ^ (0xA0761D6478BD642FULL * (index + 1)));
    return sm.next();
}

}  // namespace scldpc
