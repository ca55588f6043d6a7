#pragma once

#include <cstdint>

#include "binform/numeric.hpp"

namespace binform {

/// Deterministic splitmix64 generator.  Used instead of <random> distributions
/// so that seeded runs are byte-identical across platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive, by rejection.
    long uniform(long lo, long hi) {
        if (lo > hi) throw error("empty sampling range");
        std::uint64_t span = (std::uint64_t)(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + (long)(v % span);
    }

    bool coin() { return next_u64() & 1; }

    /// Independent stream for trial `index`; used by the sharded suites so
    /// results do not depend on the worker count.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next_u64();
        return Rng(mix.next_u64());
    }

private:
    std::uint64_t state_;
};

}  // namespace binform
