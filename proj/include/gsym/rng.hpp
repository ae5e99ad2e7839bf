#pragma once

#include <array>
#include <cstdint>

namespace gsym {

/// splitmix64; deterministic and portable, used everywhere randomness
/// is needed so reports reproduce bit-for-bit across platforms.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// uniform in [-1, 1]
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    std::array<double, 4> point_sym() {
        std::array<double, 4> p;
        for (auto& c : p) c = uniform_sym();
        return p;
    }
};

}  // namespace gsym
