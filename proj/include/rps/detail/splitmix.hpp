#pragma once

#include <cstdint>

namespace rps::detail {

// SplitMix64. Counter-based use: feed mix(seed, counter...) as the state.
// Every consumer of randomness in this project goes through this so that
// outputs are bit-identical across platforms and runs.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)) ^ splitmix64(b));
}

class SplitMix {
  public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() { return splitmix64(state_++); }
    // Uniform in [lo, hi] by rejection; unbiased and deterministic.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t span = hi - lo + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do { r = next(); } while (r >= limit);
        return lo + r % span;
    }

  private:
    std::uint64_t state_;
};

} // namespace rps::detail
