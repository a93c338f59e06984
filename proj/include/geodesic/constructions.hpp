#pragma once

#include "geodesic/hypergraph.hpp"
#include "geodesic/metric_space.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace geodesic {

struct DistanceChart {
  std::vector<std::string> points;
  DistanceMatrix dist;
};

namespace detail {

inline DistanceChart integer_chart(std::vector<std::string> points,
                                   const std::vector<std::vector<int>>& rows) {
  DistanceChart c{std::move(points), {}};
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (int v : row) r.emplace_back(v);
    c.dist.push_back(std::move(r));
  }
  return c;
}

// Every construction states the based hypergraph it realizes; a mismatch
// means the data is wrong, not the caller.
inline MetricSpace verified(const DistanceChart& chart, const Graph& g, const char* name) {
  MetricSpace m = validate_metric(chart.points, chart.dist);
  if (hypergraph_of(m) != based_hypergraph(g))
    throw std::logic_error(std::string(name) + " does not realize its based hypergraph");
  return m;
}

}  // namespace detail

// Points 0..2s on a line at unit spacing, plus an apex x at distance s from
// even points and s+1 from odd ones. Realizes the based hypergraph of the
// cycle 0-1-...-2s-0 (apex last).
inline MetricSpace odd_cycle_metric(int s) {
  if (s < 1) throw std::invalid_argument("odd_cycle_metric needs s >= 1");
  const int n = 2 * s + 1;
  DistanceChart c;
  for (int i = 0; i < n; ++i) c.points.push_back(std::to_string(i));
  c.points.push_back("x");
  c.dist.assign(n + 1, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c.dist[i][j] = i < j ? j - i : i - j;
    c.dist[i][n] = c.dist[n][i] = i % 2 == 0 ? s : s + 1;
  }
  return detail::verified(c, cycle_graph(n), "odd_cycle_metric");
}

// Realizes the based hypergraph of the path 0-1-...-(k-1), by restricting the
// odd-cycle metric with s = k to its first k points and the apex. With s = k
// the pair {0, k-1} is not a cycle edge.
inline MetricSpace path_based_metric(int k) {
  if (k < 2) throw std::invalid_argument("path_based_metric needs k >= 2");
  MetricSpace full = odd_cycle_metric(k);
  std::vector<int> keep;
  for (int i = 0; i < k; ++i) keep.push_back(i);
  keep.push_back(full.size() - 1);
  MetricSpace m = induced_subspace(full, keep);
  if (hypergraph_of(m) != based_hypergraph(path_graph(k)))
    throw std::logic_error("path_based_metric does not realize its based hypergraph");
  return m;
}

inline DistanceChart c4_chart() {
  return detail::integer_chart({"a", "b", "c", "d", "x"}, {{0, 1, 2, 1, 2},
                                                           {1, 0, 1, 2, 3},
                                                           {2, 1, 0, 1, 2},
                                                           {1, 2, 1, 0, 3},
                                                           {2, 3, 2, 3, 0}});
}

// The cycle a-b-c-d-a with apex x.
inline Graph c4_chart_graph() { return cycle_graph(4); }

inline MetricSpace c4_based_metric() {
  return detail::verified(c4_chart(), c4_chart_graph(), "c4 chart");
}

inline DistanceChart p5bar_minus_a_chart() {
  return detail::integer_chart({"e", "b", "c", "d", "x"}, {{0, 1, 2, 3, 2},
                                                           {1, 0, 1, 2, 3},
                                                           {2, 1, 0, 1, 4},
                                                           {3, 2, 1, 0, 3},
                                                           {2, 3, 4, 3, 0}});
}

// Edges eb, ec, bc, cd on points e, b, c, d (positions 0..3).
inline Graph p5bar_minus_a_graph() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

inline MetricSpace p5bar_minus_a_metric() {
  return detail::verified(p5bar_minus_a_chart(), p5bar_minus_a_graph(), "p5bar-minus-a chart");
}

// Complement of the path c-a-e-d-b: a, b, c, d, e = 0..4 with edges
// ab, bc, cd, da, eb, ec.
inline Graph house_graph() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}, {2, 4}}); }

}  // namespace geodesic
