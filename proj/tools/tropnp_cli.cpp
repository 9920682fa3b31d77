// Command-line front end: roots / formula / eval / cells / verify / compose.
// JSON output is the stable, deterministic contract; text output is for
// humans. Exit codes: 0 success, 1 verification failure, 2 usage/parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropnp/tropnp.hpp"

namespace {

using tropnp::AffineForm;
using tropnp::CellWithWitness;
using tropnp::Json;
using tropnp::PuiseuxExpression;
using tropnp::QuotientForm;
using tropnp::Rational;
using tropnp::RootMultiset;
using tropnp::SplitMix64;
using tropnp::TropicalPolynomial;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("file '" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

// ---------------------------------------------------------------------------
// text rendering

std::string rational_text(const Rational& r) { return r.str(); }

std::string affine_text(const AffineForm& form) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
    const Rational& c = form.coeffs[i];
    if (c.is_zero()) continue;
    Rational mag = tropnp::abs(c);
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    if (!(mag == Rational(1))) out << mag.str() << "*";
    out << "X" << i;
  }
  if (!form.constant.is_zero() || first) {
    if (first) {
      out << form.constant.str();
    } else {
      out << (form.constant.sign() < 0 ? " - " : " + ") << tropnp::abs(form.constant).str();
    }
  }
  return out.str();
}

std::string expr_text(const PuiseuxExpression& e) {
  using Kind = PuiseuxExpression::Kind;
  switch (e.kind()) {
    case Kind::Affine:
      return affine_text(e.form());
    case Kind::Neg:
      return "-(" + expr_text(e.child(0)) + ")";
    case Kind::Scale:
      return e.factor().str() + "*(" + expr_text(e.child(0)) + ")";
    case Kind::Min:
    case Kind::Max:
    case Kind::Sum: {
      std::string name = e.kind() == Kind::Min ? "min" : e.kind() == Kind::Max ? "max" : "sum";
      std::string out = name + "(";
      for (std::size_t i = 0; i < e.child_count(); ++i) {
        if (i > 0) out += ", ";
        out += expr_text(e.child(i));
      }
      return out + ")";
    }
  }
  return "";
}

std::string form_list_text(const std::vector<AffineForm>& forms) {
  std::string out = "min{ ";
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (i > 0) out += ", ";
    out += affine_text(forms[i]);
  }
  return out + " }";
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_roots(const std::string& coeff_text, const std::string& format) {
  std::vector<Rational> coeffs = tropnp::parse_coeffs(coeff_text);
  TropicalPolynomial poly(coeffs);  // validates degree >= 1
  std::vector<Rational> roots = tropnp::all_roots(coeffs);
  RootMultiset multiset = tropnp::NewtonPolygon(coeffs).roots();
  if (format == "json") {
    print_json(tropnp::roots_json(roots, multiset));
  } else {
    std::cout << "roots:";
    for (const auto& r : roots) std::cout << " " << rational_text(r);
    std::cout << "\nmultiset:";
    for (const auto& e : multiset.entries)
      std::cout << " " << rational_text(e.value) << " (mult " << e.multiplicity << ")";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_formula(int n, int k, const std::string& form, std::size_t cap_terms, int cap_n,
                const std::string& format) {
  if (n > cap_n)
    throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the cap (" +
                                std::to_string(cap_n) + "); pass --cap-cells to raise it");
  if (form == "quotient") {
    QuotientForm q = tropnp::to_quotient_form(tropnp::build_g_expr(n, k), cap_terms);
    if (format == "json") {
      print_json(tropnp::quotient_to_json(q));
    } else {
      std::cout << "num: " << form_list_text(q.numerator) << "\n"
                << "den: " << form_list_text(q.denominator) << "\n";
    }
    return kExitOk;
  }
  PuiseuxExpression e =
      form == "dual" ? tropnp::build_g_expr_dual(n, k) : tropnp::build_g_expr(n, k);
  if (format == "json")
    print_json(tropnp::expr_to_json(e));
  else
    std::cout << expr_text(e) << "\n";
  return kExitOk;
}

int cmd_eval(const std::string& expr_path, const std::string& point_text,
             const std::string& format) {
  Json j = read_json_file(expr_path);
  std::vector<Rational> point = tropnp::parse_coeffs(point_text);
  Rational value;
  if (j.is_object() && j.contains("tree"))
    value = tropnp::expr_from_json(j).eval(point);
  else if (j.is_object() && j.contains("num"))
    value = tropnp::quotient_from_json(j).eval(point);
  else
    throw std::invalid_argument("file '" + expr_path +
                                "' holds neither an expression nor a quotient form");
  if (format == "json") {
    Json out;
    out["value"] = value.str();
    print_json(out);
  } else {
    std::cout << rational_text(value) << "\n";
  }
  return kExitOk;
}

int cmd_cells(int n, int cap_cells, const std::string& format) {
  if (n > cap_cells)
    throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the enumeration cap (" +
                                std::to_string(cap_cells) +
                                "); pass --cap-cells to raise it");
  std::vector<CellWithWitness> cells = tropnp::enumerate_cells(n, cap_cells);
  if (format == "json") {
    print_json(tropnp::cells_json(n, cells));
  } else {
    for (const auto& c : cells) {
      std::cout << "S={";
      for (std::size_t i = 0; i < c.cell.members.size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << c.cell.members[i];
      }
      std::cout << "} witness=";
      for (std::size_t i = 0; i < c.witness.size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << rational_text(c.witness[i]);
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

struct Check {
  std::string name;
  long long failures = 0;
};

int cmd_verify(int n, int trials, std::uint64_t seed, const std::string& format) {
  if (n < 1) throw std::invalid_argument("verify: degree n must be >= 1");
  SplitMix64 rng(seed);
  Check zero{"zero-property"};
  Check dual{"primal-dual-equality"};
  Check triple{"triple-agreement"};
  Check multiset{"multiset-agreement"};
  Check monotone{"monotonicity"};

  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> coeffs = tropnp::random_coeffs(rng, n);
    TropicalPolynomial poly(coeffs);
    std::vector<Rational> roots = tropnp::all_roots(coeffs);
    tropnp::CellSignature cell = tropnp::classify_cell(coeffs);

    for (int k = 1; k <= n; ++k) {
      Rational gk = tropnp::g_numeric(coeffs, k);
      if (!poly.is_tropical_zero(gk)) ++zero.failures;
      if (!(gk == tropnp::g_numeric_dual(coeffs, k))) ++dual.failures;
      if (!(roots[static_cast<std::size_t>(k - 1)] == gk &&
            tropnp::continuation_value(coeffs, k) == gk))
        ++triple.failures;
    }

    if (!(roots == poly.oracle_roots().expanded())) ++multiset.failures;

    bool weakly_decreasing = true;
    bool strictly_decreasing = true;
    for (std::size_t i = 1; i < roots.size(); ++i) {
      if (roots[i] > roots[i - 1]) weakly_decreasing = false;
      if (!(roots[i] < roots[i - 1])) strictly_decreasing = false;
    }
    if (!weakly_decreasing || strictly_decreasing != cell.is_open_cell()) ++monotone.failures;
  }

  const std::vector<Check> checks = {zero, dual, triple, multiset, monotone};
  bool all_passed = true;
  for (const auto& c : checks) all_passed = all_passed && c.failures == 0;

  if (format == "json") {
    Json j;
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = seed;
    Json list = Json::array();
    for (const auto& c : checks) {
      Json entry;
      entry["name"] = c.name;
      entry["passed"] = c.failures == 0;
      entry["failures"] = c.failures;
      list.push_back(std::move(entry));
    }
    j["checks"] = std::move(list);
    j["all_passed"] = all_passed;
    print_json(j);
  } else {
    for (const auto& c : checks) {
      std::cout << "check " << c.name << ": " << (c.failures == 0 ? "pass" : "FAIL");
      if (c.failures > 0) std::cout << " (" << c.failures << " failures)";
      std::cout << " [" << trials << " trials]\n";
    }
    std::cout << (all_passed ? "all checks passed" : "verification FAILED") << "\n";
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

int cmd_compose(int k, const std::vector<std::string>& coeff_paths, int trials,
                std::uint64_t seed, const std::string& format) {
  const int degree = static_cast<int>(coeff_paths.size()) - 1;
  if (degree < 1)
    throw std::invalid_argument("compose: need at least two coefficient expression files");
  std::vector<PuiseuxExpression> coeff_exprs;
  coeff_exprs.reserve(coeff_paths.size());
  for (const auto& path : coeff_paths)
    coeff_exprs.push_back(tropnp::expr_from_json(read_json_file(path)));

  PuiseuxExpression composed = tropnp::substitute(tropnp::build_g_expr(degree, k), coeff_exprs);

  SplitMix64 rng(seed);
  const int vars = composed.var_count();
  int zero_failures = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> z = tropnp::random_coeffs(rng, vars - 1);
    Rational y = composed.eval(z);
    std::vector<Rational> values;
    values.reserve(coeff_exprs.size());
    for (const auto& c : coeff_exprs) values.push_back(c.eval(z));
    if (!TropicalPolynomial(values).is_tropical_zero(y)) ++zero_failures;
  }

  if (format == "json") {
    Json j;
    j["degree"] = degree;
    j["k"] = k;
    j["expression"] = tropnp::expr_to_json(composed);
    Json spot;
    spot["trials"] = trials;
    spot["seed"] = seed;
    spot["all_zero"] = zero_failures == 0;
    spot["failures"] = zero_failures;
    j["spot_check"] = std::move(spot);
    print_json(j);
  } else {
    std::cout << "composed g_" << k << " of a degree-" << degree
              << " polynomial, over " << vars << " variables\n"
              << expr_text(composed) << "\n"
              << "spot check: "
              << (zero_failures == 0 ? "all points are tropical zeroes"
                                     : std::to_string(zero_failures) + " points FAILED")
              << " [" << trials << " trials]\n";
  }
  return zero_failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical polynomial roots, Newton polygons and Newton-Puiseux expressions"};
  app.require_subcommand(1);
  std::string format = "json";

  std::string coeff_text;
  auto* roots = app.add_subcommand("roots", "numeric parametric roots of a coefficient vector");
  roots->add_option("coeffs", coeff_text, "comma-separated rational coefficients x_0..x_n")
      ->required();
  roots->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  int n = 0, k = 0;
  std::string form = "primal";
  std::size_t cap_terms = tropnp::kDefaultTermCap;
  int cap_n = tropnp::kDefaultCellCap;
  auto* formula = app.add_subcommand("formula", "symbolic root expression g_k for degree n");
  formula->add_option("--n", n, "polynomial degree")->required();
  formula->add_option("--k", k, "root index, 1-based")->required();
  formula->add_option("--form", form, "primal, dual or quotient")
      ->check(CLI::IsMember({"primal", "dual", "quotient"}));
  formula->add_option("--cap-terms", cap_terms, "quotient form list cap");
  formula->add_option("--cap-cells", cap_n, "cap on the degree n");
  formula->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string expr_path, point_text;
  auto* eval = app.add_subcommand("eval", "evaluate an expression file at a point");
  eval->add_option("file", expr_path, "expression or quotient JSON file")->required();
  eval->add_option("point", point_text, "comma-separated rational point")->required();
  eval->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  int cap_cells = tropnp::kDefaultCellCap;
  auto* cells = app.add_subcommand("cells", "enumerate all 2^(n-1) cells with witnesses");
  cells->add_option("--n", n, "polynomial degree")->required();
  cells->add_option("--cap-cells", cap_cells, "enumeration cap on n");
  cells->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  int trials = 100;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "randomized cross-checks of the root formulas");
  verify->add_option("--n", n, "polynomial degree")->required();
  verify->add_option("--trials", trials, "number of random coefficient vectors");
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> coeff_paths;
  auto* compose = app.add_subcommand(
      "compose", "substitute coefficient expressions into g_k and spot-check the result");
  compose->add_option("--k", k, "root index, 1-based")->required();
  compose->add_option("files", coeff_paths,
                      "m+1 expression JSON files, coefficients c_0..c_m")
      ->required();
  compose->add_option("--trials", trials, "spot-check sample count");
  compose->add_option("--seed", seed, "PRNG seed");
  compose->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (roots->parsed()) return cmd_roots(coeff_text, format);
    if (formula->parsed()) return cmd_formula(n, k, form, cap_terms, cap_n, format);
    if (eval->parsed()) return cmd_eval(expr_path, point_text, format);
    if (cells->parsed()) return cmd_cells(n, cap_cells, format);
    if (verify->parsed()) return cmd_verify(n, trials, seed, format);
    if (compose->parsed()) return cmd_compose(k, coeff_paths, trials, seed, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
