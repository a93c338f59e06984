#pragma once

#include "geodesic/hypergraph.hpp"
#include "geodesic/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodesic {

struct MetricViolation {
  enum class Kind { NonzeroDiagonal, Asymmetric, NonPositive, Triangle };
  Kind kind;
  // Point indices. Triangle: dist(p,q) + dist(q,r) < dist(p,r).
  int p = 0, q = 0, r = 0;

  std::string describe(const std::vector<std::string>& labels) const {
    switch (kind) {
      case Kind::NonzeroDiagonal:
        return "nonzero diagonal at " + labels[p];
      case Kind::Asymmetric:
        return "asymmetric distance between " + labels[p] + " and " + labels[q];
      case Kind::NonPositive:
        return "nonpositive distance between " + labels[p] + " and " + labels[q];
      case Kind::Triangle:
        return "triangle inequality fails: d(" + labels[p] + "," + labels[q] + ")+d(" +
               labels[q] + "," + labels[r] + ") < d(" + labels[p] + "," + labels[r] + ")";
    }
    return {};
  }
};

class MetricError : public std::runtime_error {
 public:
  MetricError(std::string what, std::vector<MetricViolation> v)
      : std::runtime_error(std::move(what)), violations_(std::move(v)) {}
  const std::vector<MetricViolation>& violations() const { return violations_; }

 private:
  std::vector<MetricViolation> violations_;
};

using DistanceMatrix = std::vector<std::vector<Rational>>;

class MetricSpace;
MetricSpace validate_metric(std::vector<std::string> points, const DistanceMatrix& dist);

// Finite metric space with exact rational distances. Only obtainable through
// validate_metric (or derived from a validated space), so every instance
// satisfies the metric axioms.
class MetricSpace {
 public:
  int size() const { return int(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  int index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::out_of_range("unknown point '" + label + "'");
    return int(it - labels_.begin());
  }

  const Rational& dist(int i, int j) const { return d_[std::size_t(i) * labels_.size() + j]; }
  const Rational& dist(const std::string& a, const std::string& b) const {
    return dist(index_of(a), index_of(b));
  }

  DistanceMatrix matrix() const {
    DistanceMatrix m(size(), std::vector<Rational>(size()));
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) m[i][j] = dist(i, j);
    return m;
  }

  // [i j k]: j lies between i and k.
  bool between(int i, int j, int k) const {
    return i != j && j != k && i != k && dist(i, j) + dist(j, k) == dist(i, k);
  }

  // The middle point of {i,j,k}, if any. At most one exists since distances
  // between distinct points are positive.
  std::optional<int> middle(int i, int j, int k) const {
    if (between(j, i, k)) return i;
    if (between(i, j, k)) return j;
    if (between(i, k, j)) return k;
    return std::nullopt;
  }

  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  MetricSpace(std::vector<std::string> labels, std::vector<Rational> d)
      : labels_(std::move(labels)), d_(std::move(d)) {}

  friend MetricSpace validate_metric(std::vector<std::string>, const DistanceMatrix&);
  friend MetricSpace induced_subspace(const MetricSpace&, const std::vector<int>&);

  std::vector<std::string> labels_;
  std::vector<Rational> d_;
};

// Axiom violations of a square matrix; empty means it is a metric.
inline std::vector<MetricViolation> metric_violations(const DistanceMatrix& d) {
  using K = MetricViolation::Kind;
  std::vector<MetricViolation> out;
  const int n = int(d.size());
  for (int i = 0; i < n; ++i) {
    if (d[i][i] != 0) out.push_back({K::NonzeroDiagonal, i, i, i});
    for (int j = i + 1; j < n; ++j) {
      if (d[i][j] != d[j][i]) out.push_back({K::Asymmetric, i, j, j});
      if (d[i][j] <= 0 || d[j][i] <= 0) out.push_back({K::NonPositive, i, j, j});
    }
  }
  if (!out.empty()) return out;
  for (int p = 0; p < n; ++p)
    for (int r = p + 1; r < n; ++r)
      for (int q = 0; q < n; ++q)
        if (q != p && q != r && d[p][q] + d[q][r] < d[p][r])
          out.push_back({K::Triangle, p, q, r});
  return out;
}

inline MetricSpace validate_metric(std::vector<std::string> points, const DistanceMatrix& dist) {
  if (dist.size() != points.size())
    throw std::invalid_argument("distance matrix has " + std::to_string(dist.size()) +
                                " rows for " + std::to_string(points.size()) + " points");
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist[i].size() != points.size())
      throw std::invalid_argument("distance matrix row " + std::to_string(i) + " has " +
                                  std::to_string(dist[i].size()) + " entries, expected " +
                                  std::to_string(points.size()));
  {
    std::set<std::string> uniq(points.begin(), points.end());
    if (uniq.size() != points.size()) throw std::invalid_argument("duplicate point labels");
  }
  auto violations = metric_violations(dist);
  if (!violations.empty()) {
    std::string msg = "not a metric: " + violations.front().describe(points);
    if (violations.size() > 1)
      msg += " (and " + std::to_string(violations.size() - 1) + " more)";
    throw MetricError(msg, std::move(violations));
  }
  std::vector<Rational> flat;
  flat.reserve(points.size() * points.size());
  for (const auto& row : dist) flat.insert(flat.end(), row.begin(), row.end());
  return MetricSpace(std::move(points), std::move(flat));
}

// Restriction of M to the points at `subset`, in that order.
inline MetricSpace induced_subspace(const MetricSpace& m, const std::vector<int>& subset) {
  if (subset.size() < 2) throw std::invalid_argument("subspace needs at least two points");
  std::set<int> uniq(subset.begin(), subset.end());
  if (uniq.size() != subset.size()) throw std::invalid_argument("repeated point in subset");
  std::vector<std::string> labels;
  std::vector<Rational> d;
  for (int i : subset) {
    if (i < 0 || i >= m.size()) throw std::out_of_range("subset index out of range");
    labels.push_back(m.label(i));
  }
  for (int i : subset)
    for (int j : subset) d.push_back(m.dist(i, j));
  return MetricSpace(std::move(labels), std::move(d));
}

inline MetricSpace induced_subspace(const MetricSpace& m, const std::vector<std::string>& subset) {
  std::vector<int> idx;
  for (const auto& s : subset) idx.push_back(m.index_of(s));
  return induced_subspace(m, idx);
}

// [u v w] by point index, canonical with u < w.
struct BetweennessTriple {
  int u = 0, v = 0, w = 0;

  static BetweennessTriple of(int u, int v, int w) { return u < w ? BetweennessTriple{u, v, w} : BetweennessTriple{w, v, u}; }
  auto operator<=>(const BetweennessTriple&) const = default;
};

inline std::vector<BetweennessTriple> betweenness_triples(const MetricSpace& m) {
  std::vector<BetweennessTriple> out;
  for (const auto& t : all_triples(m.size())) {
    auto mid = m.middle(t.v[0], t.v[1], t.v[2]);
    if (!mid) continue;
    int a = -1, b = -1;
    for (int x : t.v)
      if (x != *mid) (a < 0 ? a : b) = x;
    out.push_back(BetweennessTriple::of(a, *mid, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string to_string(const MetricSpace& m, const BetweennessTriple& t) {
  return "[" + m.label(t.u) + " " + m.label(t.v) + " " + m.label(t.w) + "]";
}

inline Hypergraph3 hypergraph_of(const MetricSpace& m) {
  std::vector<Triple> t;
  for (const auto& b : betweenness_triples(m)) t.push_back(Triple::of(b.u, b.v, b.w));
  return Hypergraph3(m.size(), std::move(t));
}

// L(pq): p, q and every point collinear with them. Sorted point indices.
inline std::vector<int> line(const MetricSpace& m, int p, int q) {
  if (p == q) throw std::invalid_argument("a line needs two distinct points");
  std::vector<int> out;
  for (int z = 0; z < m.size(); ++z)
    if (z == p || z == q || m.middle(p, q, z)) out.push_back(z);
  return out;
}

inline std::set<std::string> line(const MetricSpace& m, const std::string& p, const std::string& q) {
  std::set<std::string> out;
  for (int z : line(m, m.index_of(p), m.index_of(q))) out.insert(m.label(z));
  return out;
}

// Groups the pairs of `subset` (by position in subset) by equality of lines.
inline PairEquivalence line_partition(const MetricSpace& m, const std::vector<int>& subset) {
  if (subset.size() < 2) throw std::invalid_argument("line partition needs two points");
  std::map<std::vector<int>, std::vector<Pair>> by_line;
  for (int i = 0; i < int(subset.size()); ++i)
    for (int j = i + 1; j < int(subset.size()); ++j)
      by_line[line(m, subset[i], subset[j])].push_back({i, j});
  std::vector<std::vector<Pair>> classes;
  for (auto& [l, pairs] : by_line) classes.push_back(std::move(pairs));
  return PairEquivalence(int(subset.size()), std::move(classes));
}

inline bool check_meq(const MetricSpace& m, const std::vector<int>& subset, const PairEquivalence& eq) {
  if (eq.vertex_count() != int(subset.size()))
    throw std::invalid_argument("equivalence is defined on " + std::to_string(eq.vertex_count()) +
                                " points but the subset has " + std::to_string(subset.size()));
  return line_partition(m, subset) == eq;
}

inline std::vector<int> all_points(const MetricSpace& m) {
  std::vector<int> v(m.size());
  for (int i = 0; i < m.size(); ++i) v[i] = i;
  return v;
}

}  // namespace geodesic
