#pragma once

#include <cstdint>

namespace gai {

/// Deterministic 64-bit generator (splitmix64). The standard library
/// distributions are implementation defined, so seeded runs would not be
/// reproducible across toolchains; this generator is fully pinned.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n) via rejection sampling, unbiased.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }
};

/// Derives an independent stream seed, so that item k of a seeded run can be
/// regenerated without drawing items 0..k-1.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    return g.next();
}

} // namespace gai
