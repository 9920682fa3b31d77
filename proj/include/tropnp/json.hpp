#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropnp/newton_polygon.hpp"
#include "tropnp/polynomial.hpp"
#include "tropnp/puiseux.hpp"
#include "tropnp/rational.hpp"

namespace tropnp {

// All JSON uses insertion-ordered objects and rationals-as-strings so that a
// given value always serializes to the same bytes.
using Json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_from_json(const Json& j, const char* where) {
  if (!j.is_string())
    throw std::invalid_argument(std::string(where) + ": rationals must be strings");
  return Rational::parse(j.get<std::string>());
}

inline Json rational_list_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

}  // namespace detail

inline Json affine_to_json(const AffineForm& form) {
  Json j;
  j["coeffs"] = detail::rational_list_json(form.coeffs);
  j["const"] = form.constant.str();
  return j;
}

inline AffineForm affine_from_json(const Json& j, int vars) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("const"))
    throw std::invalid_argument("affine form: expected {\"coeffs\": [...], \"const\": ...}");
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != vars)
    throw std::invalid_argument("affine form: expected " + std::to_string(vars) +
                                " coefficients");
  AffineForm form;
  form.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) form.coeffs.push_back(detail::rational_from_json(c, "coeffs"));
  form.constant = detail::rational_from_json(j.at("const"), "const");
  return form;
}

namespace detail {

inline Json expr_node_json(const PuiseuxExpression& e) {
  using Kind = PuiseuxExpression::Kind;
  Json node;
  switch (e.kind()) {
    case Kind::Affine:
      node["affine"] = affine_to_json(e.form());
      return node;
    case Kind::Neg:
      node["neg"] = expr_node_json(e.child(0));
      return node;
    case Kind::Scale: {
      Json payload;
      payload["c"] = e.factor().str();
      payload["of"] = expr_node_json(e.child(0));
      node["scale"] = std::move(payload);
      return node;
    }
    case Kind::Min:
    case Kind::Max:
    case Kind::Sum: {
      Json list = Json::array();
      for (std::size_t i = 0; i < e.child_count(); ++i) list.push_back(expr_node_json(e.child(i)));
      node[e.kind() == Kind::Min ? "min" : e.kind() == Kind::Max ? "max" : "sum"] =
          std::move(list);
      return node;
    }
  }
  throw std::logic_error("expr_node_json: corrupt node kind");
}

inline PuiseuxExpression expr_node_from_json(const Json& node, int vars) {
  if (!node.is_object() || node.size() != 1)
    throw std::invalid_argument("expression node: expected a single-key object");
  const std::string& key = node.begin().key();
  const Json& payload = node.begin().value();

  if (key == "affine") return PuiseuxExpression::affine(affine_from_json(payload, vars));
  if (key == "neg") return expr_neg(expr_node_from_json(payload, vars));
  if (key == "scale") {
    if (!payload.is_object() || !payload.contains("c") || !payload.contains("of"))
      throw std::invalid_argument("scale node: expected {\"c\": ..., \"of\": ...}");
    return expr_scale(rational_from_json(payload.at("c"), "scale"),
                      expr_node_from_json(payload.at("of"), vars));
  }
  if (key == "min" || key == "max" || key == "sum") {
    if (!payload.is_array() || payload.empty())
      throw std::invalid_argument(key + " node: expected a nonempty array");
    std::vector<PuiseuxExpression> children;
    children.reserve(payload.size());
    for (const auto& c : payload) children.push_back(expr_node_from_json(c, vars));
    if (key == "min") return expr_min(std::move(children));
    if (key == "max") return expr_max(std::move(children));
    return expr_sum(std::move(children));
  }
  throw std::invalid_argument("expression node: unknown kind '" + key + "'");
}

}  // namespace detail

inline Json expr_to_json(const PuiseuxExpression& e) {
  Json j;
  j["vars"] = e.var_count();
  j["tree"] = detail::expr_node_json(e);
  return j;
}

inline PuiseuxExpression expr_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("tree"))
    throw std::invalid_argument("expression: expected {\"vars\": ..., \"tree\": ...}");
  const Json& vars = j.at("vars");
  if (!vars.is_number_integer() || vars.get<int>() < 1)
    throw std::invalid_argument("expression: \"vars\" must be a positive integer");
  return detail::expr_node_from_json(j.at("tree"), vars.get<int>());
}

inline Json quotient_to_json(const QuotientForm& q) {
  Json j;
  j["vars"] = q.vars;
  Json num = Json::array();
  for (const auto& f : q.numerator) num.push_back(affine_to_json(f));
  Json den = Json::array();
  for (const auto& f : q.denominator) den.push_back(affine_to_json(f));
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  return j;
}

inline QuotientForm quotient_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument(
        "quotient form: expected {\"vars\": ..., \"num\": [...], \"den\": [...]}");
  const Json& vars = j.at("vars");
  if (!vars.is_number_integer() || vars.get<int>() < 1)
    throw std::invalid_argument("quotient form: \"vars\" must be a positive integer");
  QuotientForm q;
  q.vars = vars.get<int>();
  for (const auto& f : j.at("num")) q.numerator.push_back(affine_from_json(f, q.vars));
  for (const auto& f : j.at("den")) q.denominator.push_back(affine_from_json(f, q.vars));
  if (q.numerator.empty() || q.denominator.empty())
    throw std::invalid_argument("quotient form: \"num\" and \"den\" must be nonempty");
  normalize_forms(q.numerator);
  normalize_forms(q.denominator);
  return q;
}

/// The `roots` report: { "roots": [...], "multiset": [{"value":..., "mult":...}] }.
inline Json roots_json(const std::vector<Rational>& roots, const RootMultiset& multiset) {
  Json j;
  j["roots"] = detail::rational_list_json(roots);
  Json entries = Json::array();
  for (const auto& e : multiset.entries) {
    Json entry;
    entry["value"] = e.value.str();
    entry["mult"] = e.multiplicity;
    entries.push_back(std::move(entry));
  }
  j["multiset"] = std::move(entries);
  return j;
}

/// The `cells` report: { "n": ..., "cells": [{"S": [...], "witness": [...]}] }.
inline Json cells_json(int n, const std::vector<CellWithWitness>& cells) {
  Json j;
  j["n"] = n;
  Json list = Json::array();
  for (const auto& c : cells) {
    Json entry;
    entry["S"] = c.cell.members;
    entry["witness"] = detail::rational_list_json(c.witness);
    list.push_back(std::move(entry));
  }
  j["cells"] = std::move(list);
  return j;
}

}  // namespace tropnp
