#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tropnp/newton_polygon.hpp"
#include "tropnp/rational.hpp"

namespace tropnp {

namespace detail {

inline void check_root_index(const std::vector<Rational>& coeffs, int k) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) throw std::invalid_argument("parametric roots: need degree >= 1");
  if (k < 1 || k > n)
    throw std::out_of_range("root index k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(n) + "]");
}

inline Rational tie_value(const std::vector<Rational>& x, int p, int q) {
  return (x[static_cast<std::size_t>(p)] - x[static_cast<std::size_t>(q)]) / Rational(q - p);
}

}  // namespace detail

/**
 * k-th parametric root as min over p in [0, k-1] of
 * max over q in [k, n] of (x_p - x_q)/(q - p).
 */
inline Rational g_numeric(const std::vector<Rational>& coeffs, int k) {
  detail::check_root_index(coeffs, k);
  const int n = static_cast<int>(coeffs.size()) - 1;
  Rational outer;
  for (int p = 0; p < k; ++p) {
    Rational inner = detail::tie_value(coeffs, p, k);
    for (int q = k + 1; q <= n; ++q) {
      Rational v = detail::tie_value(coeffs, p, q);
      if (inner < v) inner = v;
    }
    if (p == 0 || outer > inner) outer = inner;
  }
  return outer;
}

/// Dual form of g_numeric: max over q in [k, n] of min over p in [0, k-1].
inline Rational g_numeric_dual(const std::vector<Rational>& coeffs, int k) {
  detail::check_root_index(coeffs, k);
  const int n = static_cast<int>(coeffs.size()) - 1;
  Rational outer;
  for (int q = k; q <= n; ++q) {
    Rational inner = detail::tie_value(coeffs, 0, q);
    for (int p = 1; p < k; ++p) {
      Rational v = detail::tie_value(coeffs, p, q);
      if (v < inner) inner = v;
    }
    if (q == k || outer < inner) outer = inner;
  }
  return outer;
}

/**
 * All n parametric roots g_1 >= ... >= g_n in one polygon walk: an edge
 * spanning abscissas [i, j] contributes its root at positions i+1..j.
 */
inline std::vector<Rational> all_roots(const std::vector<Rational>& coeffs) {
  NewtonPolygon polygon(coeffs);
  std::vector<Rational> roots;
  roots.reserve(static_cast<std::size_t>(polygon.degree()));
  for (const auto& e : polygon.edges())
    for (int k = e.from + 1; k <= e.to; ++k) roots.push_back(e.root);
  return roots;
}

/**
 * Value of g_k read off the cell of the coefficient vector: with
 * V = classify_cell(coeffs) plus the endpoints, the unique pair i <= k-1 <
 * k <= j of consecutive members of V brackets k, and g_k = (x_i - x_j)/(j - i).
 */
inline Rational continuation_value(const std::vector<Rational>& coeffs, int k) {
  detail::check_root_index(coeffs, k);
  const int n = static_cast<int>(coeffs.size()) - 1;
  CellSignature cell = classify_cell(coeffs);
  int i = 0;
  int j = n;
  for (int s : cell.members) {
    if (s <= k - 1 && s > i) i = s;
    if (s >= k && s < j) j = s;
  }
  return detail::tie_value(coeffs, i, j);
}

}  // namespace tropnp
