#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropnp/rational.hpp"

namespace tropnp {

/// Affine function of X_0..X_{vars-1}: coeffs . X + constant.
struct AffineForm {
  std::vector<Rational> coeffs;
  Rational constant;

  static AffineForm zero(int vars) {
    AffineForm f;
    f.coeffs.assign(static_cast<std::size_t>(vars), Rational(0));
    return f;
  }

  static AffineForm variable(int vars, int index) {
    AffineForm f = zero(vars);
    f.coeffs.at(static_cast<std::size_t>(index)) = Rational(1);
    return f;
  }

  int vars() const { return static_cast<int>(coeffs.size()); }

  Rational eval(const std::vector<Rational>& x) const {
    Rational acc = constant;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (!coeffs[j].is_zero()) acc += coeffs[j] * x[j];
    return acc;
  }

  AffineForm scaled(const Rational& c) const {
    AffineForm f;
    f.coeffs.reserve(coeffs.size());
    for (const auto& v : coeffs) f.coeffs.push_back(v * c);
    f.constant = constant * c;
    return f;
  }

  friend AffineForm operator+(const AffineForm& a, const AffineForm& b) {
    AffineForm f;
    f.coeffs.reserve(a.coeffs.size());
    for (std::size_t j = 0; j < a.coeffs.size(); ++j)
      f.coeffs.push_back(a.coeffs[j] + b.coeffs[j]);
    f.constant = a.constant + b.constant;
    return f;
  }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Lexicographic order by coefficient vector, then constant; the canonical
/// order for serialized form lists.
inline bool lex_less(const AffineForm& a, const AffineForm& b) {
  if (a.coeffs != b.coeffs)
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                        b.coeffs.end());
  return a.constant < b.constant;
}

/// Canonical list layout: lexicographically sorted with duplicate
/// coefficient vectors collapsed to the entry with the smaller constant.
inline void normalize_forms(std::vector<AffineForm>& forms) {
  std::sort(forms.begin(), forms.end(), lex_less);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (kept > 0 && forms[kept - 1].coeffs == forms[i].coeffs) continue;  // larger constant
    if (kept != i) forms[kept] = std::move(forms[i]);
    ++kept;
  }
  forms.resize(kept);
}

/**
 * Piecewise-linear expression in X_0..X_{vars-1}: an immutable tree whose
 * leaves are affine forms and whose inner nodes are MIN/MAX/SUM lists, NEG,
 * or SCALE by a positive rational. Values share subtrees freely; nothing is
 * mutated after construction.
 */
class PuiseuxExpression {
 public:
  enum class Kind { Affine, Min, Max, Sum, Neg, Scale };

  static PuiseuxExpression affine(AffineForm form) {
    if (form.vars() < 1)
      throw std::invalid_argument("PuiseuxExpression: need at least one variable");
    int vars = form.vars();
    auto node = std::make_shared<Node>();
    node->kind = Kind::Affine;
    node->form = std::move(form);
    return PuiseuxExpression(vars, std::move(node));
  }

  static PuiseuxExpression variable(int vars, int index) {
    return affine(AffineForm::variable(vars, index));
  }

  static PuiseuxExpression constant(int vars, Rational value) {
    AffineForm f = AffineForm::zero(vars);
    f.constant = std::move(value);
    return affine(std::move(f));
  }

  Kind kind() const { return root_->kind; }
  int var_count() const { return vars_; }

  /// Leaf payload; only valid when kind() == Kind::Affine.
  const AffineForm& form() const { return root_->form; }
  /// Scale factor; only valid when kind() == Kind::Scale.
  const Rational& factor() const { return root_->factor; }

  std::size_t child_count() const { return root_->children.size(); }
  PuiseuxExpression child(std::size_t i) const {
    return PuiseuxExpression(vars_, root_->children.at(i));
  }

  Rational eval(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != vars_)
      throw std::invalid_argument("eval: point has " + std::to_string(x.size()) +
                                  " entries, expression has " + std::to_string(vars_) +
                                  " variables");
    return eval_node(*root_, x);
  }

  friend bool operator==(const PuiseuxExpression& a, const PuiseuxExpression& b) {
    return a.vars_ == b.vars_ && nodes_equal(*a.root_, *b.root_);
  }

  friend PuiseuxExpression expr_min(std::vector<PuiseuxExpression> items);
  friend PuiseuxExpression expr_max(std::vector<PuiseuxExpression> items);
  friend PuiseuxExpression expr_sum(std::vector<PuiseuxExpression> items);
  friend PuiseuxExpression expr_neg(const PuiseuxExpression& e);
  friend PuiseuxExpression expr_scale(const Rational& c, const PuiseuxExpression& e);
  friend PuiseuxExpression substitute(const PuiseuxExpression& e,
                                      const std::vector<PuiseuxExpression>& subs);

 private:
  struct Node {
    Kind kind = Kind::Affine;
    AffineForm form;    // Affine
    Rational factor;    // Scale
    std::vector<std::shared_ptr<const Node>> children;
  };
  using NodePtr = std::shared_ptr<const Node>;

  PuiseuxExpression(int vars, NodePtr root) : vars_(vars), root_(std::move(root)) {}

  static PuiseuxExpression list_node(Kind kind, const char* what,
                                     std::vector<PuiseuxExpression> items) {
    if (items.empty()) throw std::invalid_argument(std::string(what) + ": empty operand list");
    int vars = items.front().vars_;
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->children.reserve(items.size());
    for (const auto& item : items) {
      if (item.vars_ != vars)
        throw std::invalid_argument(std::string(what) + ": mixed variable counts");
      node->children.push_back(item.root_);
    }
    return PuiseuxExpression(vars, std::move(node));
  }

  static Rational eval_node(const Node& node, const std::vector<Rational>& x) {
    switch (node.kind) {
      case Kind::Affine:
        return node.form.eval(x);
      case Kind::Neg:
        return -eval_node(*node.children[0], x);
      case Kind::Scale:
        return node.factor * eval_node(*node.children[0], x);
      case Kind::Sum: {
        Rational acc;
        for (const auto& c : node.children) acc += eval_node(*c, x);
        return acc;
      }
      case Kind::Min:
      case Kind::Max: {
        Rational best = eval_node(*node.children[0], x);
        for (std::size_t i = 1; i < node.children.size(); ++i) {
          Rational v = eval_node(*node.children[i], x);
          if (node.kind == Kind::Min ? v < best : v > best) best = std::move(v);
        }
        return best;
      }
    }
    throw std::logic_error("eval: corrupt node kind");
  }

  static bool nodes_equal(const Node& a, const Node& b) {
    if (&a == &b) return true;
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    if (a.kind == Kind::Affine && !(a.form == b.form)) return false;
    if (a.kind == Kind::Scale && !(a.factor == b.factor)) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
      if (!nodes_equal(*a.children[i], *b.children[i])) return false;
    return true;
  }

  static NodePtr make_list(Kind kind, std::vector<NodePtr> children) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->children = std::move(children);
    return node;
  }

  int vars_;
  NodePtr root_;
};

inline PuiseuxExpression expr_min(std::vector<PuiseuxExpression> items) {
  return PuiseuxExpression::list_node(PuiseuxExpression::Kind::Min, "expr_min",
                                      std::move(items));
}

inline PuiseuxExpression expr_max(std::vector<PuiseuxExpression> items) {
  return PuiseuxExpression::list_node(PuiseuxExpression::Kind::Max, "expr_max",
                                      std::move(items));
}

inline PuiseuxExpression expr_sum(std::vector<PuiseuxExpression> items) {
  return PuiseuxExpression::list_node(PuiseuxExpression::Kind::Sum, "expr_sum",
                                      std::move(items));
}

inline PuiseuxExpression expr_neg(const PuiseuxExpression& e) {
  auto node = std::make_shared<PuiseuxExpression::Node>();
  node->kind = PuiseuxExpression::Kind::Neg;
  node->children = {e.root_};
  return PuiseuxExpression(e.vars_, std::move(node));
}

inline PuiseuxExpression expr_scale(const Rational& c, const PuiseuxExpression& e) {
  if (!(Rational(0) < c))
    throw std::invalid_argument("expr_scale: scale factor must be positive");
  auto node = std::make_shared<PuiseuxExpression::Node>();
  node->kind = PuiseuxExpression::Kind::Scale;
  node->factor = c;
  node->children = {e.root_};
  return PuiseuxExpression(e.vars_, std::move(node));
}

namespace detail {

/// Leaf (X_p - X_q)/(q - p) over n+1 variables.
inline AffineForm tie_leaf(int n, int p, int q) {
  AffineForm f = AffineForm::zero(n + 1);
  Rational w(1, static_cast<long long>(q - p));
  f.coeffs[static_cast<std::size_t>(p)] = w;
  f.coeffs[static_cast<std::size_t>(q)] = -w;
  return f;
}

inline void check_g_index(int n, int k) {
  if (n < 1) throw std::invalid_argument("build_g_expr: degree must be >= 1");
  if (k < 1 || k > n)
    throw std::out_of_range("root index k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(n) + "]");
}

}  // namespace detail

/**
 * Symbolic k-th root of the degree-n polynomial with parametric coefficients:
 * MIN over p in [0,k-1] of MAX over q in [k,n] of (X_p - X_q)/(q - p).
 * Degree 1 degenerates to the single leaf X_0 - X_1.
 */
inline PuiseuxExpression build_g_expr(int n, int k) {
  detail::check_g_index(n, k);
  if (n == 1) return PuiseuxExpression::affine(detail::tie_leaf(1, 0, 1));
  std::vector<PuiseuxExpression> mins;
  mins.reserve(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) {
    std::vector<PuiseuxExpression> maxes;
    maxes.reserve(static_cast<std::size_t>(n - k + 1));
    for (int q = k; q <= n; ++q)
      maxes.push_back(PuiseuxExpression::affine(detail::tie_leaf(n, p, q)));
    mins.push_back(expr_max(std::move(maxes)));
  }
  return expr_min(std::move(mins));
}

/// Dual layering of build_g_expr: MAX over q of MIN over p of the same leaves.
inline PuiseuxExpression build_g_expr_dual(int n, int k) {
  detail::check_g_index(n, k);
  if (n == 1) return PuiseuxExpression::affine(detail::tie_leaf(1, 0, 1));
  std::vector<PuiseuxExpression> maxes;
  maxes.reserve(static_cast<std::size_t>(n - k + 1));
  for (int q = k; q <= n; ++q) {
    std::vector<PuiseuxExpression> mins;
    mins.reserve(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p)
      mins.push_back(PuiseuxExpression::affine(detail::tie_leaf(n, p, q)));
    maxes.push_back(expr_min(std::move(mins)));
  }
  return expr_max(std::move(maxes));
}

/**
 * Rewrites every leaf of e over the substitution targets: a leaf with
 * coefficients c and constant a becomes the SUM of SCALE(c_i, subs_i) for
 * c_i > 0, NEG(SCALE(-c_i, subs_i)) for c_i < 0, plus a constant leaf when
 * a != 0; inner nodes are copied. Evaluation commutes: eval(substitute(e,
 * subs), z) == eval(e, [eval(s, z) for s in subs]).
 */
inline PuiseuxExpression substitute(const PuiseuxExpression& e,
                                    const std::vector<PuiseuxExpression>& subs) {
  if (subs.size() != static_cast<std::size_t>(e.var_count()))
    throw std::invalid_argument("substitute: expected " + std::to_string(e.var_count()) +
                                " substitutions, got " + std::to_string(subs.size()));
  const int target_vars = subs.empty() ? 0 : subs.front().var_count();
  for (const auto& s : subs)
    if (s.var_count() != target_vars)
      throw std::invalid_argument("substitute: mixed variable counts in substitutions");

  struct Rewriter {
    const std::vector<PuiseuxExpression>& subs;
    int target_vars;

    PuiseuxExpression leaf(const AffineForm& form) const {
      std::vector<PuiseuxExpression> parts;
      for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
        const Rational& c = form.coeffs[i];
        if (c.is_zero()) continue;
        if (c.sign() > 0)
          parts.push_back(expr_scale(c, subs[i]));
        else
          parts.push_back(expr_neg(expr_scale(-c, subs[i])));
      }
      const bool has_contribution = !parts.empty();
      if (!form.constant.is_zero() || !has_contribution)
        parts.push_back(PuiseuxExpression::constant(target_vars, form.constant));
      if (!has_contribution) return parts.front();  // pure constant leaf
      return expr_sum(std::move(parts));
    }

    PuiseuxExpression walk(const PuiseuxExpression& node) const {
      using Kind = PuiseuxExpression::Kind;
      switch (node.kind()) {
        case Kind::Affine:
          return leaf(node.form());
        case Kind::Neg:
          return expr_neg(walk(node.child(0)));
        case Kind::Scale:
          return expr_scale(node.factor(), walk(node.child(0)));
        case Kind::Min:
        case Kind::Max:
        case Kind::Sum: {
          std::vector<PuiseuxExpression> children;
          children.reserve(node.child_count());
          for (std::size_t i = 0; i < node.child_count(); ++i)
            children.push_back(walk(node.child(i)));
          if (node.kind() == Kind::Min) return expr_min(std::move(children));
          if (node.kind() == Kind::Max) return expr_max(std::move(children));
          return expr_sum(std::move(children));
        }
      }
      throw std::logic_error("substitute: corrupt node kind");
    }
  };

  return Rewriter{subs, target_vars}.walk(e);
}

inline constexpr std::size_t kDefaultTermCap = 100000;

/**
 * Tropical quotient: value = min over numerator forms minus min over
 * denominator forms. Lists are kept sorted in the canonical lexicographic
 * order with duplicate coefficient vectors collapsed to the smaller constant.
 * Sound but not minimal; redundant forms are not eliminated.
 */
struct QuotientForm {
  int vars = 0;
  std::vector<AffineForm> numerator;
  std::vector<AffineForm> denominator;

  Rational eval(const std::vector<Rational>& x) const;
};

/**
 * Exact min over a fixed affine-form list, evaluated at one point or many.
 * The list's common denominator and integer coefficient weights are computed
 * once at construction; each evaluation then scales the point to integers and
 * runs a pure integer inner loop, so no per-term gcd work is repeated.
 */
class MinAffineEvaluator {
 public:
  explicit MinAffineEvaluator(const std::vector<AffineForm>& forms) {
    if (forms.empty()) throw std::invalid_argument("MinAffineEvaluator: empty form list");
    vars_ = forms.front().vars();
    for (const auto& f : forms) {
      for (const auto& c : f.coeffs)
        if (c.den() != 1) form_den_ = lcm(form_den_, c.den());
      if (f.constant.den() != 1) form_den_ = lcm(form_den_, f.constant.den());
    }
    weights_.reserve(forms.size());
    constants_.reserve(forms.size());
    for (const auto& f : forms) {
      std::vector<BigInt> row;
      row.reserve(f.coeffs.size());
      for (const auto& c : f.coeffs) row.push_back(c.num() * (form_den_ / c.den()));
      weights_.push_back(std::move(row));
      constants_.push_back(f.constant.num() * (form_den_ / f.constant.den()));
    }
  }

  Rational eval(const std::vector<Rational>& x) const {
    BigInt point_den = 1;
    for (const auto& xi : x) point_den = lcm(point_den, xi.den());
    std::vector<BigInt> scaled_point;
    scaled_point.reserve(x.size());
    for (const auto& xi : x) scaled_point.push_back(xi.num() * (point_den / xi.den()));

    bool first = true;
    BigInt best;
    BigInt value;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      value = constants_[i] * point_den;
      const auto& row = weights_[i];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        value += row[j] * scaled_point[j];
      }
      if (first || value < best) {
        best = value;
        first = false;
      }
    }
    return Rational(best, form_den_ * point_den);
  }

 private:
  int vars_ = 0;
  BigInt form_den_ = 1;
  std::vector<std::vector<BigInt>> weights_;  // coefficient numerators * (form_den / den)
  std::vector<BigInt> constants_;             // constants scaled by form_den
};

/// One-shot min over an affine-form list at x.
inline Rational min_affine_value(const std::vector<AffineForm>& forms,
                                 const std::vector<Rational>& x) {
  return MinAffineEvaluator(forms).eval(x);
}

inline Rational QuotientForm::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != vars)
    throw std::invalid_argument("QuotientForm::eval: point has " + std::to_string(x.size()) +
                                " entries, form has " + std::to_string(vars) + " variables");
  return min_affine_value(numerator, x) - min_affine_value(denominator, x);
}

namespace detail {

struct VectorLess {
  bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Form list keyed by coefficient vector; the map keeps lists deduplicated,
// lexicographically sorted and bounded by the term cap as they are built.
class FormList {
 public:
  explicit FormList(std::size_t cap) : cap_(cap) {}

  void add(std::vector<Rational> coeffs, Rational constant) {
    auto [it, inserted] = forms_.try_emplace(std::move(coeffs), std::move(constant));
    if (!inserted) {
      if (constant < it->second) it->second = std::move(constant);
    } else if (forms_.size() > cap_) {
      throw std::runtime_error("to_quotient_form: term cap of " + std::to_string(cap_) +
                               " forms per list exceeded; raise the cap to continue");
    }
  }

  std::vector<AffineForm> take() && {
    std::vector<AffineForm> out;
    out.reserve(forms_.size());
    for (auto& [coeffs, constant] : forms_)
      out.push_back(AffineForm{coeffs, constant});
    return out;
  }

 private:
  std::map<std::vector<Rational>, Rational, VectorLess> forms_;
  std::size_t cap_;
};

struct QF {
  std::vector<AffineForm> num;
  std::vector<AffineForm> den;
};

inline std::vector<AffineForm> pairwise_sums(const std::vector<AffineForm>& a,
                                             const std::vector<AffineForm>& b,
                                             std::size_t cap) {
  FormList out(cap);
  for (const auto& fa : a)
    for (const auto& fb : b) {
      AffineForm s = fa + fb;
      out.add(std::move(s.coeffs), std::move(s.constant));
    }
  return std::move(out).take();
}

inline QF qf_sum(const QF& a, const QF& b, std::size_t cap) {
  return {pairwise_sums(a.num, b.num, cap), pairwise_sums(a.den, b.den, cap)};
}

inline QF qf_neg(QF a) { return {std::move(a.den), std::move(a.num)}; }

inline QF qf_min(const QF& a, const QF& b, std::size_t cap) {
  FormList num(cap);
  for (const auto& fa : a.num)
    for (const auto& fb : b.den) {
      AffineForm s = fa + fb;
      num.add(std::move(s.coeffs), std::move(s.constant));
    }
  for (const auto& fb : b.num)
    for (const auto& fa : a.den) {
      AffineForm s = fb + fa;
      num.add(std::move(s.coeffs), std::move(s.constant));
    }
  return {std::move(num).take(), pairwise_sums(a.den, b.den, cap)};
}

// max(u, v) = u + v - min(u, v)
inline QF qf_max(const QF& a, const QF& b, std::size_t cap) {
  return qf_sum(qf_sum(a, b, cap), qf_neg(qf_min(a, b, cap)), cap);
}

inline QF qf_scale(const QF& a, const Rational& c) {
  QF out;
  out.num.reserve(a.num.size());
  out.den.reserve(a.den.size());
  for (const auto& f : a.num) out.num.push_back(f.scaled(c));
  for (const auto& f : a.den) out.den.push_back(f.scaled(c));
  return out;  // positive scaling preserves order, so lists stay sorted
}

}  // namespace detail

/**
 * Converts an expression to its tropical-quotient normal form by structural
 * recursion; MIN combines cross sums, MAX goes through the sum-minus-min
 * identity, and n-ary nodes fold left. List growth is combinatorial, so any
 * list exceeding the cap aborts with std::runtime_error.
 */
inline QuotientForm to_quotient_form(const PuiseuxExpression& e,
                                     std::size_t term_cap = kDefaultTermCap) {
  using Kind = PuiseuxExpression::Kind;
  struct Converter {
    std::size_t cap;
    int vars;

    detail::QF walk(const PuiseuxExpression& node) const {
      switch (node.kind()) {
        case Kind::Affine:
          return {{node.form()}, {AffineForm::zero(vars)}};
        case Kind::Neg:
          return detail::qf_neg(walk(node.child(0)));
        case Kind::Scale:
          return detail::qf_scale(walk(node.child(0)), node.factor());
        case Kind::Sum:
        case Kind::Min:
        case Kind::Max: {
          detail::QF acc = walk(node.child(0));
          for (std::size_t i = 1; i < node.child_count(); ++i) {
            detail::QF next = walk(node.child(i));
            if (node.kind() == Kind::Sum)
              acc = detail::qf_sum(acc, next, cap);
            else if (node.kind() == Kind::Min)
              acc = detail::qf_min(acc, next, cap);
            else
              acc = detail::qf_max(acc, next, cap);
          }
          return acc;
        }
      }
      throw std::logic_error("to_quotient_form: corrupt node kind");
    }
  };

  detail::QF qf = Converter{term_cap, e.var_count()}.walk(e);
  return QuotientForm{e.var_count(), std::move(qf.num), std::move(qf.den)};
}

}  // namespace tropnp
