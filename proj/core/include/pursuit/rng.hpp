#pragma once

#include <cstdint>
#include <random>

namespace pursuit {

/// SplitMix64 finalizer, used to decorrelate consecutive integer seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded random source with platform-independent output.
///
/// The engine std::mt19937_64 is fully specified by the standard, but the
/// standard distributions are not; all draws below are derived from raw
/// 64-bit outputs so that equal seeds give bit-identical results everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer on [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    // Reject the tail of the range that would bias the modulo.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return r % n;
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pursuit
