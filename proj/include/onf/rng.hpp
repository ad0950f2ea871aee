#pragma once

#include <cmath>
#include <cstdint>

#include "onf/constants.hpp"

namespace onf {

// SplitMix64 (Steele/Lea/Vigna). Used for seeding and substream derivation.
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

// xoshiro256** (Blackman/Vigna), the ensemble generator. Deterministic and
// platform-independent; distributions below are hand-rolled from raw bits so
// serial and parallel runs agree bitwise.
class Xoshiro256 {
  public:
    explicit Xoshiro256(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    // Substream split: atom i draws from a generator seeded by folding the
    // stream index into the master seed through SplitMix64. Documented
    // contract: substream(seed, i) == Xoshiro256(splitmix64_mix(seed, i+1)).
    static Xoshiro256 substream(std::uint64_t master_seed, std::uint64_t index) {
        SplitMix64 sm(master_seed + 0x9E3779B97F4A7C15ULL * (index + 1));
        return Xoshiro256(sm.next());
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1) with 53-bit resolution
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; consumes exactly two uniforms per call (no caching, so the
    // draw count per atom is reproducible).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(constants::two_pi * u2);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace onf
