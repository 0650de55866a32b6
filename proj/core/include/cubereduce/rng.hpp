#pragma once

#include <cstdint>
#include <random>

namespace cubereduce {

/// Seedable random source with a documented stream-splitting rule, so runs
/// reproduce bit-for-bit across platforms and are independent of evaluation
/// order.
///
/// A SplitRng remembers the master seed it was created from. stream(tag)
/// derives an independent generator seeded with splitmix64(seed + tag),
/// regardless of how much the parent has already been consumed. The search
/// loop uses stream 0 for population initialization and stream g (g >= 1)
/// for the operators that breed generation g.
///
/// Draws are hand-rolled on top of std::mt19937_64 raw output (rejection
/// sampling for integers, 53-bit mantissa for reals) because the standard
/// distribution templates are implementation-defined and differ between
/// libstdc++ and libc++.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  SplitRng stream(std::uint64_t tag) const { return SplitRng(mix(seed_ + tag)); }

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive. Rejection sampling, unbiased.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t draw = next_u64();
    while (draw >= limit) draw = next_u64();
    return lo + static_cast<int>(draw % span);
  }

  /// Uniform real in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01() < p;
  }

  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace cubereduce
