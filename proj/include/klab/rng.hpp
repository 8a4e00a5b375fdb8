#pragma once

#include <cstdint>

namespace klab {

// Counter-based splitmix64. Every draw is a pure function of (seed, counter),
// so streams can be split and replayed regardless of evaluation order.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t counter) const {
        return mix(seed_ + 0x632be59bd9b4e019ULL * counter);
    }

    // Uniform in [0,1), 53-bit mantissa.
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }

    // Rademacher sign from bit 17 of the mixed word.
    int sign(std::uint64_t counter) const {
        return (at(counter) >> 17 & 1u) ? 1 : -1;
    }

    // Child stream for an independent substream (trial index, module tag...).
    SplitMix64 split(std::uint64_t stream) const {
        return SplitMix64(mix(seed_ ^ (0xd1342543de82ef95ULL * (stream + 1))));
    }

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
};

}  // namespace klab
