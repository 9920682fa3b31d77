#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropnp/rational.hpp"

namespace tropnp {

/// min-plus evaluation result: the value and every index attaining it.
struct TropicalEval {
  Rational value;
  std::vector<int> argmin;  // sorted, nonempty
};

/// One root value with its multiplicity.
struct RootEntry {
  Rational value;
  int multiplicity = 0;

  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

/**
 * Multiset of tropical roots, sorted by value in strictly decreasing order.
 * Multiplicities of a degree-n polynomial sum to n.
 */
struct RootMultiset {
  std::vector<RootEntry> entries;

  int total_multiplicity() const {
    int total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
  }

  bool values_strictly_decreasing() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (!(entries[i].value < entries[i - 1].value)) return false;
    return true;
  }

  /// Roots repeated by multiplicity, in decreasing order.
  std::vector<Rational> expanded() const {
    std::vector<Rational> out;
    for (const auto& e : entries)
      for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
    return out;
  }

  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;
};

/**
 * Univariate min-plus polynomial f(y) = min_k (x_k + k*y), k = 0..n.
 * All n+1 coefficients are present and finite; n >= 1.
 */
class TropicalPolynomial {
 public:
  explicit TropicalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2)
      throw std::invalid_argument(
          "TropicalPolynomial: need at least two coefficients (degree >= 1)");
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  TropicalEval eval(const Rational& y) const {
    TropicalEval result;
    result.value = coeffs_[0];
    result.argmin = {0};
    Rational term;
    for (int k = 1; k <= degree(); ++k) {
      term = coeffs_[static_cast<std::size_t>(k)] + Rational(k) * y;
      if (term < result.value) {
        result.value = term;
        result.argmin = {k};
      } else if (term == result.value) {
        result.argmin.push_back(k);
      }
    }
    return result;
  }

  /// True iff the defining minimum is attained by at least two indices at y.
  bool is_tropical_zero(const Rational& y) const { return eval(y).argmin.size() >= 2; }

  /**
   * Brute-force root multiset: try every pairwise tie point
   * (x_p - x_q)/(q - p), keep the values that are tropical zeroes, and take
   * max(argmin) - min(argmin) as the multiplicity. Deliberately ignorant of
   * any hull structure so it can serve as an independent oracle.
   */
  RootMultiset oracle_roots() const {
    const int n = degree();
    std::vector<Rational> candidates;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q <= n; ++q)
        candidates.push_back((coeffs_[static_cast<std::size_t>(p)] -
                              coeffs_[static_cast<std::size_t>(q)]) /
                             Rational(q - p));
    std::sort(candidates.begin(), candidates.end(),
              [](const Rational& a, const Rational& b) { return b < a; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    RootMultiset roots;
    for (const auto& y : candidates) {
      TropicalEval e = eval(y);
      if (e.argmin.size() >= 2)
        roots.entries.push_back({y, e.argmin.back() - e.argmin.front()});
    }
    if (roots.total_multiplicity() != n)
      throw std::logic_error("oracle_roots: multiplicities do not sum to the degree");
    return roots;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// Parses a comma-separated list of rationals, e.g. "0,0,2,1". Spaces around
/// entries are tolerated.
inline std::vector<Rational> parse_coeffs(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace tropnp
