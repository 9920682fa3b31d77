#include <catch2/catch.hpp>

#include "support.hpp"
#include "tropnp/parametric_roots.hpp"
#include "tropnp/puiseux.hpp"

using tropnp::AffineForm;
using tropnp::expr_max;
using tropnp::expr_min;
using tropnp::expr_neg;
using tropnp::expr_scale;
using tropnp::expr_sum;
using tropnp::PuiseuxExpression;
using tropnp::QuotientForm;
using tropnp::Rational;
using tropnp::SplitMix64;
using tropnp::TropicalPolynomial;
using testsupport::coeffs;
using testsupport::random_expression;
using testsupport::random_point;
using testsupport::rat;

using Kind = PuiseuxExpression::Kind;

namespace {

AffineForm tie(int n, int p, int q) {
  AffineForm f = AffineForm::zero(n + 1);
  f.coeffs[p] = Rational(1, q - p);
  f.coeffs[q] = Rational(-1, q - p);
  return f;
}

bool contains_form(const std::vector<AffineForm>& forms, const AffineForm& f) {
  for (const auto& g : forms)
    if (g == f) return true;
  return false;
}

}  // namespace

TEST_CASE("g expression mirrors the min-of-max layering", "[puiseux]") {
  // Degree 1 degenerates to the bare difference leaf.
  PuiseuxExpression g11 = tropnp::build_g_expr(1, 1);
  REQUIRE(g11.kind() == Kind::Affine);
  CHECK(g11.form() == tie(1, 0, 1));

  PuiseuxExpression g21 = tropnp::build_g_expr(2, 1);
  REQUIRE(g21.kind() == Kind::Min);
  REQUIRE(g21.child_count() == 1);
  REQUIRE(g21.child(0).kind() == Kind::Max);
  REQUIRE(g21.child(0).child_count() == 2);
  CHECK(g21.child(0).child(0).form() == tie(2, 0, 1));
  CHECK(g21.child(0).child(1).form() == tie(2, 0, 2));

  PuiseuxExpression g22 = tropnp::build_g_expr(2, 2);
  REQUIRE(g22.kind() == Kind::Min);
  REQUIRE(g22.child_count() == 2);
  REQUIRE(g22.child(0).kind() == Kind::Max);
  REQUIRE(g22.child(0).child_count() == 1);
  CHECK(g22.child(0).child(0).form() == tie(2, 0, 2));
  CHECK(g22.child(1).child(0).form() == tie(2, 1, 2));
}

TEST_CASE("dual g expression swaps the layering", "[puiseux]") {
  PuiseuxExpression d11 = tropnp::build_g_expr_dual(1, 1);
  REQUIRE(d11.kind() == Kind::Affine);
  CHECK(d11.form() == tie(1, 0, 1));

  PuiseuxExpression d22 = tropnp::build_g_expr_dual(2, 2);
  REQUIRE(d22.kind() == Kind::Max);
  REQUIRE(d22.child_count() == 1);
  REQUIRE(d22.child(0).kind() == Kind::Min);
  REQUIRE(d22.child(0).child_count() == 2);
  CHECK(d22.child(0).child(0).form() == tie(2, 0, 2));
  CHECK(d22.child(0).child(1).form() == tie(2, 1, 2));

  PuiseuxExpression d32 = tropnp::build_g_expr_dual(3, 2);
  REQUIRE(d32.kind() == Kind::Max);
  REQUIRE(d32.child_count() == 2);  // q in {2, 3}
  for (std::size_t q = 0; q < 2; ++q) {
    REQUIRE(d32.child(q).kind() == Kind::Min);
    CHECK(d32.child(q).child_count() == 2);  // p in {0, 1}
  }

  CHECK_THROWS_AS(tropnp::build_g_expr(3, 0), std::out_of_range);
  CHECK_THROWS_AS(tropnp::build_g_expr_dual(3, 4), std::out_of_range);
  CHECK_THROWS_AS(tropnp::build_g_expr(0, 1), std::invalid_argument);
}

TEST_CASE("structural evaluation of trees", "[puiseux]") {
  CHECK(tropnp::build_g_expr(3, 2).eval(coeffs("0,0,2,1")) == rat("-1/2"));

  PuiseuxExpression x0 = PuiseuxExpression::variable(1, 0);
  CHECK(expr_scale(Rational(2), x0).eval({Rational(3)}) == Rational(6));

  PuiseuxExpression x0_of2 = PuiseuxExpression::variable(2, 0);
  PuiseuxExpression x1_of2 = PuiseuxExpression::variable(2, 1);
  CHECK(expr_neg(expr_min({x0_of2, x1_of2})).eval(coeffs("1,2")) == Rational(-1));
  CHECK(expr_min({x0_of2, x1_of2}).eval(coeffs("5,3")) == Rational(3));
  CHECK(expr_max({x0_of2, x1_of2}).eval(coeffs("5,3")) == Rational(5));
  CHECK(expr_sum({x0_of2, x1_of2}).eval(coeffs("5,3")) == Rational(8));

  AffineForm half_diff = AffineForm::zero(3);
  half_diff.coeffs[0] = Rational(1);
  half_diff.coeffs[2] = Rational(-1);
  CHECK(expr_scale(Rational(1, 2), PuiseuxExpression::affine(half_diff)).eval(coeffs("0,9,4")) ==
        Rational(-2));
}

TEST_CASE("algebra constructors validate their inputs", "[puiseux]") {
  PuiseuxExpression a = PuiseuxExpression::variable(2, 0);
  PuiseuxExpression b = PuiseuxExpression::variable(3, 0);
  CHECK_THROWS_AS(expr_min({a, b}), std::invalid_argument);
  CHECK_THROWS_AS(expr_min(std::vector<PuiseuxExpression>{}), std::invalid_argument);
  CHECK_THROWS_AS(expr_scale(Rational(0), a), std::invalid_argument);
  CHECK_THROWS_AS(expr_scale(Rational(-1), a), std::invalid_argument);
  CHECK_THROWS_AS(a.eval(coeffs("1,2,3")), std::invalid_argument);
}

TEST_CASE("quotient form of single leaves and maxima", "[puiseux][quotient]") {
  PuiseuxExpression leaf = PuiseuxExpression::affine(tie(1, 0, 1));
  QuotientForm q = to_quotient_form(leaf);
  REQUIRE(q.numerator.size() == 1);
  CHECK(q.numerator[0] == tie(1, 0, 1));
  REQUIRE(q.denominator.size() == 1);
  CHECK(q.denominator[0] == AffineForm::zero(2));

  PuiseuxExpression m = expr_max(
      {PuiseuxExpression::variable(2, 0), PuiseuxExpression::variable(2, 1)});
  QuotientForm qm = to_quotient_form(m);
  AffineForm both = AffineForm::zero(2);
  both.coeffs[0] = Rational(1);
  both.coeffs[1] = Rational(1);
  REQUIRE(qm.numerator.size() == 1);
  CHECK(qm.numerator[0] == both);
  REQUIRE(qm.denominator.size() == 2);
  CHECK(contains_form(qm.denominator, AffineForm::variable(2, 0)));
  CHECK(contains_form(qm.denominator, AffineForm::variable(2, 1)));
  CHECK(qm.eval(coeffs("3,5")) == Rational(5));
}

TEST_CASE("quotient form of g(2,1) matches the worked derivation", "[puiseux][quotient]") {
  QuotientForm q = to_quotient_form(tropnp::build_g_expr(2, 1));

  AffineForm num = AffineForm::zero(3);
  num.coeffs[0] = Rational(3, 2);
  num.coeffs[1] = Rational(-1);
  num.coeffs[2] = Rational(-1, 2);
  REQUIRE(q.numerator.size() == 1);
  CHECK(q.numerator[0] == num);

  REQUIRE(q.denominator.size() == 2);
  AffineForm d1 = AffineForm::zero(3);
  d1.coeffs[0] = Rational(1);
  d1.coeffs[1] = Rational(-1);
  AffineForm d2 = AffineForm::zero(3);
  d2.coeffs[0] = Rational(1, 2);
  d2.coeffs[2] = Rational(-1, 2);
  CHECK(contains_form(q.denominator, d1));
  CHECK(contains_form(q.denominator, d2));

  // Lists are kept in canonical lexicographic order.
  CHECK(lex_less(q.denominator[0], q.denominator[1]));

  CHECK(q.eval(coeffs("0,0,1")) == Rational(0));
  CHECK(q.eval(coeffs("0,0,1")) == g_numeric(coeffs("0,0,1"), 1));
}

TEST_CASE("quotient conversion preserves values on random expressions",
          "[puiseux][quotient][property]") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int vars = 2 + static_cast<int>(rng.below(3));
    PuiseuxExpression e = random_expression(rng, vars, 2);
    QuotientForm q = to_quotient_form(e);
    for (int i = 0; i < 200; ++i) {
      auto x = random_point(rng, vars, 50, 20);
      CHECK(e.eval(x) == q.eval(x));
    }
  }
}

TEST_CASE("term cap aborts oversized conversions", "[puiseux][quotient]") {
  CHECK_THROWS_AS(to_quotient_form(tropnp::build_g_expr(4, 2), 3), std::runtime_error);
  CHECK_THROWS_WITH(to_quotient_form(tropnp::build_g_expr(4, 2), 3), Catch::Contains("cap"));
}

TEST_CASE("integer-scaled min evaluation matches plain rational arithmetic",
          "[puiseux][property]") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    const int vars = 1 + static_cast<int>(rng.below(5));
    std::vector<AffineForm> forms;
    const std::size_t count = 1 + rng.below(8);
    for (std::size_t i = 0; i < count; ++i)
      forms.push_back(testsupport::random_leaf(rng, vars));

    tropnp::MinAffineEvaluator evaluator(forms);
    for (int i = 0; i < 20; ++i) {
      const auto x = random_point(rng, vars);
      Rational naive = forms[0].eval(x);
      for (const auto& f : forms) naive = std::min(naive, f.eval(x));
      CHECK(evaluator.eval(x) == naive);
      CHECK(min_affine_value(forms, x) == naive);
    }
  }
}

TEST_CASE("substitution cancels identical targets", "[puiseux][substitute]") {
  PuiseuxExpression e = tropnp::build_g_expr(1, 1);  // X_0 - X_1
  PuiseuxExpression x0 = PuiseuxExpression::variable(1, 0);
  PuiseuxExpression composed = substitute(e, {x0, x0});
  SplitMix64 rng(47);
  for (int i = 0; i < 20; ++i)
    CHECK(composed.eval(random_point(rng, 1, 100, 30)) == Rational(0));
}

TEST_CASE("substitution of affine leaves is the evaluation homomorphism",
          "[puiseux][substitute]") {
  AffineForm twice = AffineForm::zero(2);
  twice.coeffs[0] = Rational(2);
  PuiseuxExpression two_x0 = PuiseuxExpression::affine(twice);
  PuiseuxExpression x1 = PuiseuxExpression::variable(2, 1);

  PuiseuxExpression composed = substitute(tropnp::build_g_expr(1, 1), {two_x0, x1});
  CHECK(composed.eval(coeffs("1,3")) == Rational(-1));

  CHECK_THROWS_AS(substitute(tropnp::build_g_expr(2, 1), {two_x0, x1}),
                  std::invalid_argument);
  PuiseuxExpression mismatched = PuiseuxExpression::variable(3, 0);
  CHECK_THROWS_AS(substitute(tropnp::build_g_expr(1, 1), {two_x0, mismatched}),
                  std::invalid_argument);
}

TEST_CASE("substitution commutes with evaluation on random trees",
          "[puiseux][substitute][property]") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const int outer_vars = 2 + static_cast<int>(rng.below(3));
    const int inner_vars = 1 + static_cast<int>(rng.below(3));
    PuiseuxExpression e = random_expression(rng, outer_vars, 2);
    std::vector<PuiseuxExpression> subs;
    for (int i = 0; i < outer_vars; ++i)
      subs.push_back(random_expression(rng, inner_vars, 2));
    PuiseuxExpression composed = substitute(e, subs);

    for (int i = 0; i < 100; ++i) {
      auto z = random_point(rng, inner_vars, 50, 20);
      std::vector<Rational> images;
      images.reserve(subs.size());
      for (const auto& s : subs) images.push_back(s.eval(z));
      CHECK(composed.eval(z) == e.eval(images));
    }
  }
}

TEST_CASE("substituted roots remain tropical zeroes of the composed polynomial",
          "[puiseux][substitute][property]") {
  SplitMix64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const int degree = 1 + static_cast<int>(rng.below(3));
    const int inner_vars = 1 + static_cast<int>(rng.below(2));
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(degree)));

    std::vector<PuiseuxExpression> coefficient_exprs;
    for (int j = 0; j <= degree; ++j)
      coefficient_exprs.push_back(random_expression(rng, inner_vars, 2));
    PuiseuxExpression composed =
        substitute(tropnp::build_g_expr(degree, k), coefficient_exprs);

    for (int i = 0; i < 50; ++i) {
      auto z = random_point(rng, inner_vars, 50, 20);
      std::vector<Rational> values;
      for (const auto& c : coefficient_exprs) values.push_back(c.eval(z));
      CHECK(TropicalPolynomial(values).is_tropical_zero(composed.eval(z)));
    }
  }
}

TEST_CASE("symbolic builds agree with the numeric formulas pointwise",
          "[puiseux][property]") {
  SplitMix64 rng(61);
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      PuiseuxExpression primal = tropnp::build_g_expr(n, k);
      PuiseuxExpression dual = tropnp::build_g_expr_dual(n, k);
      for (int i = 0; i < 40; ++i) {
        auto x = random_point(rng, n + 1);
        Rational expected = g_numeric(x, k);
        CHECK(primal.eval(x) == expected);
        CHECK(dual.eval(x) == expected);
      }
    }
}

TEST_CASE("positive scaling scales the value", "[puiseux][property]") {
  SplitMix64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const int vars = 1 + static_cast<int>(rng.below(3));
    PuiseuxExpression e = random_expression(rng, vars, 2);
    Rational c(1 + static_cast<long long>(rng.below(5)),
               1 + static_cast<long long>(rng.below(4)));
    auto x = random_point(rng, vars, 50, 20);
    CHECK(expr_scale(c, e).eval(x) == c * e.eval(x));
  }
}
