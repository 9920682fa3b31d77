#pragma once

#include <cstdint>
#include <vector>

#include "tropnp/rational.hpp"

namespace tropnp {

/**
 * splitmix64 generator. Used instead of <random> engines/distributions so
 * that a given seed yields the same stream on every platform, which keeps
 * seeded CLI output byte-identical.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound). Modulo bias is irrelevant at our ranges.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  long long in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// Random rational with |numerator| <= max_abs_num, 1 <= denominator <= max_den.
inline Rational random_rational(SplitMix64& rng, long long max_abs_num = 1000,
                                long long max_den = 1000) {
  return Rational(rng.in_range(-max_abs_num, max_abs_num), rng.in_range(1, max_den));
}

/// Random coefficient vector x_0..x_n for a degree-n tropical polynomial.
inline std::vector<Rational> random_coeffs(SplitMix64& rng, int n,
                                           long long max_abs_num = 1000,
                                           long long max_den = 1000) {
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) coeffs.push_back(random_rational(rng, max_abs_num, max_den));
  return coeffs;
}

}  // namespace tropnp
