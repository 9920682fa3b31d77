// Walkthrough of the library surface: numeric roots of a fixed polynomial,
// the Newton polygon behind them, the symbolic root expression, its quotient
// normal form, and one substitution round.

#include <iostream>

#include "tropnp/tropnp.hpp"

using namespace tropnp;

int main() {
  auto x = parse_coeffs("0,0,2,1");
  TropicalPolynomial f(x);

  std::cout << "f(y) = min(";
  for (int k = 0; k <= f.degree(); ++k)
    std::cout << (k ? ", " : "") << x[k] << " + " << k << "y";
  std::cout << ")\n\n";

  NewtonPolygon polygon(x);
  std::cout << "hull vertices:";
  for (int v : polygon.vertices()) std::cout << " " << v;
  std::cout << "\nroots (value x multiplicity):";
  for (const auto& e : polygon.roots().entries)
    std::cout << " " << e.value << " x" << e.multiplicity;
  std::cout << "\n\n";

  std::cout << "g_k by formula, polygon walk and cell continuation:\n";
  auto roots = all_roots(x);
  for (int k = 1; k <= f.degree(); ++k)
    std::cout << "  g_" << k << " = " << g_numeric(x, k) << " = " << roots[k - 1] << " = "
              << continuation_value(x, k) << "\n";

  PuiseuxExpression g2 = build_g_expr(f.degree(), 2);
  std::cout << "\nsymbolic g_2 as JSON:\n" << expr_to_json(g2).dump(2) << "\n";
  std::cout << "g_2 at x = " << g2.eval(x) << "\n";

  QuotientForm q = to_quotient_form(g2);
  std::cout << "quotient form sizes: " << q.numerator.size() << " / "
            << q.denominator.size() << ", same value: " << q.eval(x) << "\n";

  // Coefficients that are themselves expressions: closure under substitution.
  std::vector<PuiseuxExpression> cs;
  for (int j = 0; j <= 2; ++j) cs.push_back(PuiseuxExpression::variable(2, j % 2));
  PuiseuxExpression composed = substitute(build_g_expr(2, 1), cs);
  auto z = parse_coeffs("1,4");
  std::vector<Rational> values;
  for (const auto& c : cs) values.push_back(c.eval(z));
  std::cout << "\ncomposed g_1 at z = " << composed.eval(z) << ", is a zero of the composed "
            << "polynomial: " << std::boolalpha
            << TropicalPolynomial(values).is_tropical_zero(composed.eval(z)) << "\n";
  return 0;
}
