#pragma once

#include "geodesic/canonical.hpp"
#include "geodesic/recognizer.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace geodesic {

// One hypergraph per isomorphism class on n vertices, by triple count and
// then canonical mask. Grown one triple at a time from the empty hypergraph.
inline std::vector<TripleMask> isomorphism_classes(int n) {
  const auto& table = permutation_table(n);
  const int tc = triple_count(n);
  std::vector<TripleMask> all;
  std::set<TripleMask> level{0};
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    std::set<TripleMask> next;
    for (TripleMask m : level)
      for (int r = 0; r < tc; ++r)
        if (!(m >> r & 1)) next.insert(table.canonical(m | TripleMask{1} << r));
    level = std::move(next);
  }
  return all;
}

struct EnumerationResult {
  int vertex_count = 0;
  std::vector<Hypergraph3> minimal_nonmetric;  // canonical representatives
  bool truncated = false;
  std::size_t classes_total = 0;
  std::size_t classes_examined = 0;
};

// Every isomorphism class on n vertices that is non-metric while all its
// one-vertex deletions are metric. Stops early, flagging truncation, once
// `budget` has elapsed.
inline EnumerationResult enumerate_minimal_nonmetric(int n, std::chrono::duration<double> budget,
                                                     const DecideOptions& opts = {}) {
  if (n < 3 || n > 6) throw std::invalid_argument("enumeration supports 3 <= n <= 6");
  const auto deadline = std::chrono::steady_clock::now() + budget;

  // Metricity of (n-1)-vertex classes, keyed by canonical mask.
  std::map<TripleMask, bool> smaller;
  const auto& sub_table = permutation_table(n - 1);
  auto metric_minor = [&](const Hypergraph3& g) {
    TripleMask key = sub_table.canonical(triple_mask(g));
    auto it = smaller.find(key);
    if (it != smaller.end()) return it->second;
    bool m = decide_metric(hypergraph_from_mask(n - 1, key), opts).metric;
    smaller.emplace(key, m);
    return m;
  };

  EnumerationResult res;
  res.vertex_count = n;
  auto classes = isomorphism_classes(n);
  res.classes_total = classes.size();
  for (TripleMask mask : classes) {
    if (std::chrono::steady_clock::now() > deadline) {
      res.truncated = true;
      break;
    }
    ++res.classes_examined;
    Hypergraph3 h = hypergraph_from_mask(n, mask);
    bool minors_metric = true;
    for (Vertex v = 0; v < n && minors_metric; ++v) minors_metric = metric_minor(h.without_vertex(v));
    if (minors_metric && !decide_metric(h, opts).metric) res.minimal_nonmetric.push_back(std::move(h));
  }
  return res;
}

}  // namespace geodesic
