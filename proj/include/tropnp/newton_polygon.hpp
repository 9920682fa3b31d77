#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropnp/polynomial.hpp"
#include "tropnp/rational.hpp"

namespace tropnp {

/// Hull edge between vertex abscissas i < j. The root is the pairwise tie
/// value (x_i - x_j)/(j - i), i.e. the negated geometric slope.
struct PolygonEdge {
  int from = 0;
  int to = 0;
  Rational root;
  int multiplicity = 0;  // to - from

  friend bool operator==(const PolygonEdge&, const PolygonEdge&) = default;
};

/**
 * Newton polygon of a coefficient vector: the lower convex hull of the
 * points (k, x_k), k = 0..n. Vertices are strict: a point lying exactly on
 * the interior of a hull edge is not a vertex. Built by a single monotone
 * pass (abscissas are already sorted) with exact-rational convexity tests.
 */
class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<Rational> coeffs) : heights_(std::move(coeffs)) {
    if (heights_.size() < 2)
      throw std::invalid_argument("NewtonPolygon: need at least two points");
    build();
  }

  int degree() const { return static_cast<int>(heights_.size()) - 1; }
  const std::vector<Rational>& heights() const { return heights_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<PolygonEdge>& edges() const { return edges_; }

  /// Edge roots with multiplicities; strictly decreasing because the edge
  /// slopes strictly increase left to right.
  RootMultiset roots() const {
    RootMultiset out;
    for (const auto& e : edges_) out.entries.push_back({e.root, e.multiplicity});
    return out;
  }

 private:
  // Strictly-below test for the middle point b against the chord a..c:
  // (x_b - x_a) / (b - a) < (x_c - x_b) / (c - b), cross-multiplied so only
  // exact products are compared.
  static bool keeps_strict_turn(int a, const Rational& xa, int b, const Rational& xb, int c,
                                const Rational& xc) {
    return (xb - xa) * Rational(c - b) < (xc - xb) * Rational(b - a);
  }

  void build() {
    const int n = degree();
    vertices_.clear();
    for (int k = 0; k <= n; ++k) {
      const Rational& xk = heights_[static_cast<std::size_t>(k)];
      while (vertices_.size() >= 2) {
        int b = vertices_[vertices_.size() - 1];
        int a = vertices_[vertices_.size() - 2];
        if (keeps_strict_turn(a, heights_[static_cast<std::size_t>(a)], b,
                              heights_[static_cast<std::size_t>(b)], k, xk))
          break;
        vertices_.pop_back();  // b is on or above the chord a..k
      }
      vertices_.push_back(k);
    }
    edges_.clear();
    for (std::size_t t = 0; t + 1 < vertices_.size(); ++t) {
      int i = vertices_[t];
      int j = vertices_[t + 1];
      edges_.push_back({i, j,
                        (heights_[static_cast<std::size_t>(i)] -
                         heights_[static_cast<std::size_t>(j)]) /
                            Rational(j - i),
                        j - i});
    }
  }

  std::vector<Rational> heights_;
  std::vector<int> vertices_;  // always contains 0 and n
  std::vector<PolygonEdge> edges_;
};

/**
 * Names the polyhedron of coefficient vectors whose Newton polygon has
 * vertex set {0, n} plus exactly the members of S, S subset of {1..n-1}.
 */
struct CellSignature {
  int n = 0;
  std::vector<int> members;  // sorted, deduplicated

  CellSignature() = default;
  CellSignature(int degree, std::vector<int> s) : n(degree), members(std::move(s)) {
    if (n < 1) throw std::invalid_argument("CellSignature: degree must be >= 1");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int s : members)
      if (s < 1 || s > n - 1)
        throw std::invalid_argument("CellSignature: member " + std::to_string(s) +
                                    " outside {1.." + std::to_string(n - 1) + "}");
  }

  /// The full signature {1..n-1}, on which every point is a hull vertex.
  bool is_open_cell() const { return static_cast<int>(members.size()) == n - 1; }

  friend bool operator==(const CellSignature&, const CellSignature&) = default;
};

/// Signature of the cell containing the given coefficient vector: the strict
/// vertex set of its Newton polygon minus the endpoints.
inline CellSignature classify_cell(const std::vector<Rational>& coeffs) {
  NewtonPolygon polygon(coeffs);
  std::vector<int> interior;
  for (int v : polygon.vertices())
    if (v != 0 && v != polygon.degree()) interior.push_back(v);
  return CellSignature(polygon.degree(), std::move(interior));
}

/**
 * A point classified into cell S: vertices sit on the parabola k^2 (strictly
 * convex, small integral values) and every other index is lifted 1 above the
 * chord of its bracketing vertex pair.
 */
inline std::vector<Rational> cell_witness(int n, const std::vector<int>& s) {
  CellSignature cell(n, s);  // validates bounds
  std::vector<int> anchors = cell.members;
  anchors.insert(anchors.begin(), 0);
  anchors.push_back(n);

  std::vector<Rational> x(static_cast<std::size_t>(n) + 1);
  for (std::size_t t = 0; t + 1 < anchors.size(); ++t) {
    int i = anchors[t];
    int j = anchors[t + 1];
    x[static_cast<std::size_t>(i)] = Rational(static_cast<long long>(i) * i);
    for (int k = i + 1; k < j; ++k) {
      // Chord through (i, i^2), (j, j^2) evaluated at k, plus the unit lift.
      long long chord = static_cast<long long>(i) * i +
                        static_cast<long long>(i + j) * (k - i);
      x[static_cast<std::size_t>(k)] = Rational(chord + 1);
    }
  }
  x[static_cast<std::size_t>(n)] = Rational(static_cast<long long>(n) * n);
  return x;
}

struct CellWithWitness {
  CellSignature cell;
  std::vector<Rational> witness;
};

inline constexpr int kDefaultCellCap = 12;

/**
 * All 2^(n-1) cells with verified witness points, subsets in binary-counter
 * order (bit b of the counter toggles member b+1).
 */
inline std::vector<CellWithWitness> enumerate_cells(int n, int cap = kDefaultCellCap) {
  if (n < 1) throw std::invalid_argument("enumerate_cells: degree must be >= 1");
  if (n > cap)
    throw std::invalid_argument("enumerate_cells: n=" + std::to_string(n) +
                                " exceeds the enumeration cap (" + std::to_string(cap) + ")");
  // 2^(n-1) cells; past this even a raised cap is not tractable.
  if (n > 24)
    throw std::invalid_argument("enumerate_cells: 2^" + std::to_string(n - 1) +
                                " cells is beyond the supported range (n <= 24)");
  std::vector<CellWithWitness> out;
  const std::uint64_t count = 1ULL << (n - 1);
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<int> members;
    for (int b = 0; b < n - 1; ++b)
      if (mask & (1ULL << b)) members.push_back(b + 1);
    CellSignature cell(n, std::move(members));
    std::vector<Rational> witness = cell_witness(n, cell.members);
    if (!(classify_cell(witness) == cell))
      throw std::logic_error("enumerate_cells: witness failed verification");
    out.push_back({std::move(cell), std::move(witness)});
  }
  return out;
}

}  // namespace tropnp
