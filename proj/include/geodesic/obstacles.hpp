#pragma once

#include "geodesic/constructions.hpp"
#include "geodesic/hypergraph.hpp"
#include "geodesic/metric_space.hpp"
#include "geodesic/recognizer.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodesic {

// Evidence that the two-class equivalence of `graph` (edges vs. non-edges)
// is realized by no metric space on any superset of its vertices: neither
// the based hypergraph of the graph nor that of its complement is metric.
struct ObstacleCertificate {
  Graph graph;
  Verdict graph_verdict;       // based(graph): non-metric
  Verdict complement_verdict;  // based(complement(graph)): non-metric
};

struct ObstacleOutcome {
  enum class Status {
    Certified,     // certificate holds, the equivalence is an obstacle
    Undetermined,  // one based hypergraph is metric; nothing follows
    Inapplicable,  // the graph or its complement has no edges
  };
  Status status = Status::Undetermined;
  std::string reason;
  std::optional<ObstacleCertificate> certificate;
};

inline const char* to_string(ObstacleOutcome::Status s) {
  switch (s) {
    case ObstacleOutcome::Status::Certified: return "certified";
    case ObstacleOutcome::Status::Undetermined: return "undetermined";
    case ObstacleOutcome::Status::Inapplicable: return "inapplicable";
  }
  return "?";
}

// The certificate condition is sufficient only, so an undetermined outcome
// says nothing about whether the equivalence is an obstacle.
inline ObstacleOutcome certify_obstacle(const Graph& g, const DecideOptions& opts = {}) {
  ObstacleOutcome out;
  Graph co = complement(g);
  if (g.edges().empty() || co.edges().empty()) {
    out.status = ObstacleOutcome::Status::Inapplicable;
    out.reason = g.edges().empty() ? "graph has no edges" : "complement has no edges";
    return out;
  }
  Verdict vg = decide_metric(based_hypergraph(g), opts);
  if (vg.metric) {
    out.reason = "based hypergraph of the graph is metric";
    return out;
  }
  Verdict vc = decide_metric(based_hypergraph(co), opts);
  if (vc.metric) {
    out.reason = "based hypergraph of the complement is metric";
    return out;
  }
  out.status = ObstacleOutcome::Status::Certified;
  out.certificate = ObstacleCertificate{g, std::move(vg), std::move(vc)};
  return out;
}

// One deleted cycle vertex, with its realization of the remaining
// equivalence.
struct DeletionCheck {
  Vertex removed = 0;
  std::vector<Vertex> kept;  // cycle vertices in path order
  MetricSpace witness;       // points: path positions 0..n-2, then the apex
  bool equivalence_realized = false;
  int distinct_lines = 0;
  bool lines_as_expected = false;   // edges span everything, non-edges only the kept set
  bool kept_set_collinear = false;  // every three kept points are collinear

  bool ok() const {
    return equivalence_realized && distinct_lines == 2 && lines_as_expected && kept_set_collinear;
  }
};

// For the cycle C_n (n even, n > 4), realizes the equivalence restricted to
// every one-vertex deletion. Smaller subsets need no separate check: the
// same witness space, restricted, serves every subset of a kept set.
inline std::vector<DeletionCheck> cycle_obstacle_minimality(int n) {
  if (n % 2 != 0 || n <= 4) throw std::invalid_argument("cycle length must be even and above 4");
  const Graph cycle = cycle_graph(n);
  const MetricSpace base = path_based_metric(n - 1);
  const int apex = base.size() - 1;
  std::vector<DeletionCheck> out;
  for (Vertex r = 0; r < n; ++r) {
    DeletionCheck chk{r, {}, base};
    for (int i = 1; i < n; ++i) chk.kept.push_back((r + i) % n);
    Graph f = cycle.induced(chk.kept);

    std::vector<int> positions;
    for (int i = 0; i + 1 < n; ++i) positions.push_back(i);
    chk.equivalence_realized = check_meq(base, positions, graph_equivalence(f));

    std::vector<int> with_apex = positions;
    with_apex.push_back(apex);
    std::set<std::vector<int>> lines;
    chk.lines_as_expected = true;
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j + 1 < n; ++j) {
        auto l = line(base, i, j);
        lines.insert(l);
        if (l != (f.adjacent(i, j) ? with_apex : positions)) chk.lines_as_expected = false;
      }
    chk.distinct_lines = int(lines.size());

    chk.kept_set_collinear = true;
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j + 1 < n; ++j)
        for (int k = j + 1; k + 1 < n; ++k)
          if (!base.middle(i, j, k)) chk.kept_set_collinear = false;
    out.push_back(std::move(chk));
  }
  return out;
}

inline bool verify_cycle_obstacle_minimality(int n) {
  for (const auto& c : cycle_obstacle_minimality(n))
    if (!c.ok()) return false;
  return true;
}

}  // namespace geodesic
