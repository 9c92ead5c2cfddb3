#pragma once

#include <cstdint>
#include <random>

namespace trim {

/// Deterministic sampling helper. mt19937_64 output is fully specified by the
/// standard and the double mapping below avoids std::uniform_real_distribution
/// (whose stream is implementation-defined), so draws are reproducible
/// bit-for-bit across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * unit(); }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace trim
