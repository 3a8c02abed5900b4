#pragma once

#include <cstdint>

namespace coarselab {

/// SplitMix64: portable seeded generator used for all randomized fixtures
/// and sampling plans, so reports are reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n).
    int next_below(int n) {
        return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
    }

private:
    std::uint64_t state_;
};

} // namespace coarselab
