#pragma once

#include <cstdint>
#include <random>

#include "tangentlie/linalg.hpp"

namespace tangentlie {

/// Seeded generator for the sampling routines. Draws are derived from the raw
/// 64-bit engine output only, so a seed reproduces the same stream on every
/// standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// Uniform on [-1, 1).
  double real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0; }

  /// Coefficients num/den with num in [-range, range] and den in [1, max_den].
  AlgVector<Rational> rational_vector(std::size_t n, long range = 9, long max_den = 4) {
    AlgVector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(integer(-range, range), integer(1, max_den));
    return v;
  }

  AlgVector<double> real_vector(std::size_t n) {
    AlgVector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = real();
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tangentlie
