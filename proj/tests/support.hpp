#pragma once

// Shared helpers for the test suites.

#include <string_view>
#include <vector>

#include "tropnp/tropnp.hpp"

namespace testsupport {

inline tropnp::Rational rat(std::string_view s) { return tropnp::Rational::parse(s); }

inline std::vector<tropnp::Rational> coeffs(std::string_view s) {
  return tropnp::parse_coeffs(s);
}

/// Random affine leaf with small entries, so quotient conversions stay small.
inline tropnp::AffineForm random_leaf(tropnp::SplitMix64& rng, int vars) {
  tropnp::AffineForm f = tropnp::AffineForm::zero(vars);
  for (int i = 0; i < vars; ++i)
    if (rng.below(2) == 0) f.coeffs[static_cast<std::size_t>(i)] = random_rational(rng, 3, 2);
  if (rng.below(2) == 0) f.constant = random_rational(rng, 3, 2);
  return f;
}

/// Random expression of the given depth: leaves at depth 0, otherwise a
/// random constructor over children one level down.
inline tropnp::PuiseuxExpression random_expression(tropnp::SplitMix64& rng, int vars,
                                                   int depth) {
  using tropnp::PuiseuxExpression;
  if (depth <= 0 || rng.below(4) == 0)
    return PuiseuxExpression::affine(random_leaf(rng, vars));
  switch (rng.below(5)) {
    case 0:
    case 1: {
      std::vector<PuiseuxExpression> children;
      const std::size_t arity = 2 + rng.below(2);
      for (std::size_t i = 0; i < arity; ++i)
        children.push_back(random_expression(rng, vars, depth - 1));
      return rng.below(2) == 0 ? expr_min(std::move(children)) : expr_max(std::move(children));
    }
    case 2: {
      std::vector<PuiseuxExpression> children;
      children.push_back(random_expression(rng, vars, depth - 1));
      children.push_back(random_expression(rng, vars, depth - 1));
      return expr_sum(std::move(children));
    }
    case 3:
      return expr_neg(random_expression(rng, vars, depth - 1));
    default:
      return expr_scale(tropnp::Rational(1 + static_cast<long long>(rng.below(4)),
                                         1 + static_cast<long long>(rng.below(3))),
                        random_expression(rng, vars, depth - 1));
  }
}

/// Random point with entries sized like the acceptance-scale coefficients.
inline std::vector<tropnp::Rational> random_point(tropnp::SplitMix64& rng, int vars,
                                                  long long max_num = 1000,
                                                  long long max_den = 1000) {
  std::vector<tropnp::Rational> x;
  x.reserve(static_cast<std::size_t>(vars));
  for (int i = 0; i < vars; ++i) x.push_back(random_rational(rng, max_num, max_den));
  return x;
}

}  // namespace testsupport
