#pragma once

// Seeded randomness with a fixed, platform-independent value mapping.
// std::mt19937_64 has a specified output sequence; the standard
// distributions do not, so values are derived from raw draws here.

#include <cstdint>
#include <random>

#include "gw/scalar.hpp"

namespace gw {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Derives independent stream seeds from (seed, stream).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi]; the modulo bias is below 2^-50 for these ranges.
  long uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// Uniform on {-m, ..., m} without 0.
  long nonzero_int(long m) {
    const long v = uniform_int(1, m);
    return uniform_int(0, 1) ? v : -v;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal by Box-Muller.
  double normal() {
    double u = uniform01();
    while (u <= 0) u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2 * std::log(u)) * std::cos(6.283185307179586 * v);
  }

  /// p/q with |p| <= num_max and 1 <= q <= den_max.
  Rational rational(long num_max, long den_max) {
    Rational r(uniform_int(-num_max, num_max), uniform_int(1, den_max));
    r.canonicalize();
    return r;
  }

  /// As rational() but never zero.
  Rational nonzero_rational(long num_max, long den_max) {
    Rational r(nonzero_int(num_max), uniform_int(1, den_max));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gw
