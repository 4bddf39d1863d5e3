#pragma once

#include <cstdint>
#include <random>

namespace scg {

// splitmix64 step, used to derive independent sub-seeds from a campaign
// seed without correlating the spawned streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Unbiased draw from [0, n) by rejection. std::uniform_int_distribution is
// implementation-defined, so all sampling goes through this to keep
// outputs byte-identical across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x <= limit) return x % n;
    }
}

} // namespace scg
