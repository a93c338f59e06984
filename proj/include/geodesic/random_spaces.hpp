#pragma once

// Seeded random inputs for the property suites. All distances are exact
// rationals; the generators favour small integers and halves so that tight
// triangles (and hence betweenness) occur often.

#include "geodesic/hypergraph.hpp"
#include "geodesic/metric_space.hpp"
#include "geodesic/properties.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodesic {

using Rng = std::mt19937_64;

namespace detail {

inline Rational random_step(Rng& rng, int max_units) {
  // Multiples of 1/2 in [1/2, max_units].
  std::uniform_int_distribution<int> d(1, 2 * max_units);
  return Rational(d(rng), 2);
}

inline std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline void shortest_paths(DistanceMatrix& d) {
  const int n = int(d.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
}

}  // namespace detail

// Shortest-path metric of a random connected weighted graph on n points.
inline MetricSpace random_metric_space(Rng& rng, int n) {
  if (n < 2) throw std::invalid_argument("random metric needs two points");
  std::bernoulli_distribution keep(0.5);
  const Rational far = Rational(4 * n * n);
  DistanceMatrix d(n, std::vector<Rational>(n, far));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 1; i < n; ++i) {
    // A random spanning tree keeps the graph connected.
    int a = perm[i], b = perm[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    d[a][b] = d[b][a] = detail::random_step(rng, 3);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d[i][j] == far && keep(rng)) d[i][j] = d[j][i] = detail::random_step(rng, 4);
  detail::shortest_paths(d);
  return validate_metric(detail::numbered(n), d);
}

// Points 0..k-1 on a line (in that order) plus an apex, last. The apex sits
// at a random distance from a few anchor points and reaches the rest along
// the line, with rejection whenever it would shorten a line distance.
inline MetricSpace random_linear_with_apex(Rng& rng, int k) {
  if (k < 2) throw std::invalid_argument("linear core needs two points");
  while (true) {
    std::vector<Rational> pos(k);
    for (int i = 1; i < k; ++i) pos[i] = pos[i - 1] + detail::random_step(rng, 2);
    DistanceMatrix d(k + 1, std::vector<Rational>(k + 1));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) d[i][j] = pos[i] < pos[j] ? pos[j] - pos[i] : pos[i] - pos[j];

    std::uniform_int_distribution<int> anchors(1, std::min(k, 3));
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::vector<Rational> apex(k, Rational(-1));
    for (int a = anchors(rng); a > 0; --a) {
      int p = pick(rng);
      Rational w = detail::random_step(rng, 3);
      for (int i = 0; i < k; ++i) {
        Rational via = w + d[p][i];
        if (apex[i] < 0 || via < apex[i]) apex[i] = via;
      }
    }
    for (int i = 0; i < k; ++i) d[i][k] = d[k][i] = apex[i];
    if (!metric_violations(d).empty()) continue;
    DistanceMatrix closed = d;
    detail::shortest_paths(closed);
    if (closed != d) continue;
    auto labels = detail::numbered(k);
    labels.push_back("x");
    return validate_metric(labels, d);
  }
}

struct CollinearSample {
  MetricSpace space;
  std::vector<int> subset;  // the collinear points, in shuffled order
  std::vector<int> truth;   // the same points in line order
};

// k >= 5 points at distinct rational positions on a line, labels shuffled,
// plus up to two off-line points.
inline CollinearSample random_collinear(Rng& rng, int k) {
  if (k < 5) throw std::invalid_argument("collinear sample needs five points");
  const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
  const int n = k + extra;
  std::vector<Rational> pos(k);
  for (int i = 1; i < k; ++i) pos[i] = pos[i - 1] + detail::random_step(rng, 2);
  const Rational span = pos[k - 1];
  DistanceMatrix d(n, std::vector<Rational>(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) d[i][j] = pos[i] < pos[j] ? pos[j] - pos[i] : pos[i] - pos[j];
  // Each off-line point is equidistant from the whole line, far enough out
  // that it is never between two points and never has one between it and
  // another.
  for (int e = k; e < n; ++e) {
    Rational c = span + detail::random_step(rng, 2);
    for (int i = 0; i < k; ++i) d[e][i] = d[i][e] = c;
    for (int f = k; f < e; ++f) d[e][f] = d[f][e] = span + Rational(1, 2);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  DistanceMatrix shuffled(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) shuffled[perm[i]][perm[j]] = d[i][j];
  CollinearSample s{validate_metric(detail::numbered(n), shuffled), {}, {}};
  for (int i = 0; i < k; ++i) s.truth.push_back(perm[i]);
  s.subset = s.truth;
  std::shuffle(s.subset.begin(), s.subset.end(), rng);
  return s;
}

inline Hypergraph3 random_hypergraph(Rng& rng, int n, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  std::vector<Triple> t;
  for (const auto& tr : all_triples(n))
    if (keep(rng)) t.push_back(tr);
  return Hypergraph3(n, std::move(t));
}

}  // namespace geodesic
