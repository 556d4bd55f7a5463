#pragma once

#include <cstdint>

namespace treehom {

// Counter-based random stream (splitmix64 of seed-mixed counters).
// draw(step, slot) is a pure function of (seed, step, slot), so replaying a
// trajectory or sharing a stream between coupled chains never depends on how
// many draws a particular code path consumed. Slot layout used by the
// dynamics is documented in glauber.hpp.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits(std::uint64_t step, std::uint64_t slot) const {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (step + 1);
    z ^= 0xbf58476d1ce4e5b9ULL * (slot + 1);
    return mix(z);
  }

  // Uniform in [0, 1).
  double uniform(std::uint64_t step, std::uint64_t slot) const {
    return static_cast<double>(bits(step, slot) >> 11) * 0x1.0p-53;
  }

  // Uniform in {0, ..., bound-1}. bound must be positive and small compared
  // to 2^64 (we only draw from tiny ranges, bias is negligible and
  // deterministic).
  std::uint32_t below(std::uint64_t step, std::uint64_t slot,
                      std::uint32_t bound) const {
    return static_cast<std::uint32_t>(bits(step, slot) % bound);
  }

  // Derived stream for independent trials: seed xor trial index.
  CounterRng fork(std::uint64_t trial) const { return CounterRng(seed_ ^ trial); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
};

}  // namespace treehom
