#pragma once

#include <cstdint>

namespace urep {

/// SplitMix64; per-trajectory streams come from mixing (seed, stream index),
/// so parallel batches are reproducible regardless of scheduling.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    static SplitMix64 stream(uint64_t seed, uint64_t index) {
        SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
        g.next();
        return g;
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in the open interval (0,1).
    double uniform01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  private:
    uint64_t state_;
};

}  // namespace urep
