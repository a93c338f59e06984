#pragma once

#include "geodesic/feasibility.hpp"
#include "geodesic/hypergraph.hpp"
#include "geodesic/metric_space.hpp"
#include "geodesic/orientation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace geodesic {

struct DecideOptions {
  // Enumerate every total orientation with no propagation or pruning.
  bool naive = false;
  // Solve the partial system every `prune_every` decisions and cut the
  // subtree when it is infeasible.
  bool relaxation_pruning = true;
  int prune_every = 1;
  // Branch over linear orders of a complete core of >= 5 vertices instead of
  // over its triples one at a time.
  bool core_order_branching = true;
  int threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;           // total orientations handed to the solver
  std::uint64_t leaf_infeasible = 0;  // ... that had no realization
  std::uint64_t relaxation_calls = 0;
  std::uint64_t core_size = 0;
  std::uint64_t core_orders = 0;
  std::map<std::string, std::uint64_t> conflicts;  // by cause

  std::uint64_t total_conflicts() const {
    std::uint64_t s = 0;
    for (const auto& [k, v] : conflicts) s += v;
    return s;
  }

  void merge(const SearchStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    leaf_infeasible += o.leaf_infeasible;
    relaxation_calls += o.relaxation_calls;
    core_orders += o.core_orders;
    for (const auto& [k, v] : o.conflicts) conflicts[k] += v;
  }
};

inline const char* cause_name(Conflict::Cause c) {
  return c == Conflict::Cause::NonHyperedge ? "non-hyperedge" : "middle-clash";
}

struct Verdict {
  bool metric = false;
  std::optional<MetricSpace> witness;  // set iff metric
  SearchStats stats;
};

// Integer distance matrix realizing `h` from a solver witness indexed by
// pair_rank. Throws std::logic_error if the witness does not realize h.
inline MetricSpace realization_from_solution(const Hypergraph3& h, const std::vector<Rational>& d) {
  const int n = h.vertex_count();
  BigInt scale = 1;
  for (const auto& v : d) scale = lcm(scale, BigInt(denominator(v)));
  DistanceMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) m[a][b] = m[b][a] = d[pair_rank(a, b)] * scale;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  MetricSpace out = validate_metric(std::move(labels), m);
  if (hypergraph_of(out) != h) throw std::logic_error("realization does not reproduce hypergraph");
  return out;
}

// Largest vertex set with all triples present, grown greedily from each
// start vertex in ascending order (first largest wins).
inline std::vector<Vertex> find_complete_core(const Hypergraph3& h) {
  std::vector<Vertex> best;
  for (Vertex start = 0; start < h.vertex_count(); ++start) {
    std::vector<Vertex> s{start};
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (v == start) continue;
      bool ok = true;
      for (std::size_t i = 0; i < s.size() && ok; ++i)
        for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = h.contains(s[i], s[j], v);
      if (ok) s.push_back(v);
    }
    if (s.size() > best.size()) best = s;
  }
  std::sort(best.begin(), best.end());
  return best;
}

namespace detail {

class Search {
 public:
  Search(const Hypergraph3& h, const DecideOptions& opts) : h_(h), opts_(opts) {
    if (opts_.prune_every < 1) opts_.prune_every = 1;
  }

  struct Node {
    OrientationAssignment a;
    int decisions = 0;
  };

  // Children of `node` that survive closure and the relaxation check, in
  // branching order. Returns nullopt when node is total.
  std::optional<std::vector<Node>> expand(const Node& node, SearchStats& st) const {
    ++st.nodes;
    auto pick = choose_triple(node.a);
    if (!pick) return std::nullopt;
    std::vector<Node> out;
    for (Vertex mid : pick->v) {
      Node child{node.a, node.decisions + 1};
      child.a.set(*pick, mid);
      std::vector<int> queue{pick->rank()};
      if (auto c = propagate(h_.membership(), child.a, queue)) {
        ++st.conflicts[cause_name(c->cause)];
        continue;
      }
      if (opts_.relaxation_pruning && child.decisions % opts_.prune_every == 0) {
        ++st.relaxation_calls;
        if (!solve_exact_feasibility(build_relaxation_system(h_, child.a))) {
          ++st.conflicts["relaxation"];
          continue;
        }
      }
      out.push_back(std::move(child));
    }
    return out;
  }

  std::optional<MetricSpace> solve_leaf(const Node& node, SearchStats& st) const {
    ++st.leaves;
    auto sol = solve_exact_feasibility(build_feasibility_system(h_, node.a));
    if (!sol) {
      ++st.leaf_infeasible;
      ++st.conflicts["leaf-infeasible"];
      return std::nullopt;
    }
    return realization_from_solution(h_, *sol);
  }

  // Depth-first; `cancelled` is polled once per node.
  std::optional<MetricSpace> dfs(const Node& node, SearchStats& st,
                                 const std::function<bool()>& cancelled) const {
    if (cancelled && cancelled()) return std::nullopt;
    auto children = expand(node, st);
    if (!children) return solve_leaf(node, st);
    for (const auto& c : *children)
      if (auto w = dfs(c, st, cancelled)) return w;
    return std::nullopt;
  }

  // Starting nodes: one per linear order of a complete core (mod reversal)
  // when core branching applies, otherwise the empty assignment.
  std::vector<Node> roots(SearchStats& st) const {
    const int n = h_.vertex_count();
    if (opts_.core_order_branching) {
      auto core = find_complete_core(h_);
      if (core.size() >= 5) {
        st.core_size = core.size();
        std::vector<Node> out;
        std::vector<Vertex> order = core;
        do {
          if (order.front() > order.back()) continue;
          ++st.core_orders;
          Node node{OrientationAssignment(n), 0};
          std::vector<int> queue;
          const int k = int(order.size());
          for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
              for (int w = v + 1; w < k; ++w) {
                Triple t = Triple::of(order[u], order[v], order[w]);
                node.a.set(t, order[v]);
                queue.push_back(t.rank());
              }
          if (auto c = propagate(h_.membership(), node.a, queue)) {
            ++st.conflicts[cause_name(c->cause)];
            continue;
          }
          out.push_back(std::move(node));
        } while (std::next_permutation(order.begin(), order.end()));
        return out;
      }
    }
    return {Node{OrientationAssignment(n), 0}};
  }

 private:
  // Unassigned hyperedge sharing the most vertices with assigned hyperedges
  // (summed over them); ties go to the lexicographically smallest triple.
  std::optional<Triple> choose_triple(const OrientationAssignment& a) const {
    std::vector<int> touch(h_.vertex_count(), 0);
    bool any_open = false;
    for (const auto& t : h_.triples()) {
      if (a.middle(t))
        for (Vertex v : t.v) ++touch[v];
      else
        any_open = true;
    }
    if (!any_open) return std::nullopt;
    std::optional<Triple> best;
    int best_score = -1;
    for (const auto& t : h_.triples()) {
      if (a.middle(t)) continue;
      int score = touch[t.v[0]] + touch[t.v[1]] + touch[t.v[2]];
      if (score > best_score) {
        best_score = score;
        best = t;
      }
    }
    return best;
  }

  const Hypergraph3& h_;
  DecideOptions opts_;
};

inline Verdict decide_naive(const Hypergraph3& h) {
  Verdict v;
  const auto& tri = h.triples();
  std::vector<int> digit(tri.size(), 0);
  while (true) {
    OrientationAssignment a(h.vertex_count());
    for (std::size_t i = 0; i < tri.size(); ++i) a.set(tri[i], tri[i].v[digit[i]]);
    ++v.stats.nodes;
    ++v.stats.leaves;
    if (auto sol = solve_exact_feasibility(build_feasibility_system(h, a))) {
      v.metric = true;
      v.witness = realization_from_solution(h, *sol);
      return v;
    }
    ++v.stats.leaf_infeasible;
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == 2) digit[i++] = 0;
    if (i == digit.size()) break;
    ++digit[i];
  }
  return v;
}

inline Verdict decide_parallel(const Search& search, std::vector<Search::Node> frontier,
                               SearchStats stats, int threads) {
  // Grow the frontier level by level, keeping depth-first order, until there
  // is enough work to share.
  const std::size_t target = std::size_t(threads) * 8;
  std::vector<char> total(frontier.size(), 0);
  while (frontier.size() < target) {
    std::vector<Search::Node> next;
    std::vector<char> next_total;
    bool grew = false;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (total[i]) {
        next.push_back(std::move(frontier[i]));
        next_total.push_back(1);
        continue;
      }
      auto children = search.expand(frontier[i], stats);
      if (!children) {
        // Total: already counted as a node, solved by a worker.
        --stats.nodes;
        next.push_back(std::move(frontier[i]));
        next_total.push_back(1);
        continue;
      }
      grew = true;
      for (auto& c : *children) {
        next.push_back(std::move(c));
        next_total.push_back(0);
      }
    }
    frontier = std::move(next);
    total = std::move(next_total);
    if (!grew) break;
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::optional<MetricSpace>> found(frontier.size());
  std::atomic<std::size_t> next{0}, best{kNone};
  std::mutex mu;
  auto worker = [&] {
    SearchStats local;
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= frontier.size() || i > best.load()) break;
      auto cancelled = [&] { return best.load() < i; };
      if (auto w = search.dfs(frontier[i], local, cancelled)) {
        found[i] = std::move(w);
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
    std::lock_guard lock(mu);
    stats.merge(local);
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Verdict v;
  v.stats = std::move(stats);
  if (best.load() != kNone) {
    v.metric = true;
    v.witness = std::move(found[best.load()]);
  }
  return v;
}

}  // namespace detail

// Default worker count from GEODESIC_THREADS, else 1.
inline int default_thread_count() {
  if (const char* env = std::getenv("GEODESIC_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

// Complete search for a metric space whose collinear triples are exactly the
// triples of h. A metric verdict carries an integer realization that has
// been re-checked against h.
inline Verdict decide_metric(const Hypergraph3& h, const DecideOptions& opts = {}) {
  if (h.vertex_count() < 2) throw std::invalid_argument("decide_metric needs at least two vertices");
  if (h.vertex_count() > kMaxRankedVertices)
    throw std::invalid_argument("too many vertices for the recognizer");
  if (opts.naive) return detail::decide_naive(h);

  detail::Search search(h, opts);
  SearchStats stats;
  auto roots = search.roots(stats);
  if (opts.threads > 1) return detail::decide_parallel(search, std::move(roots), std::move(stats), opts.threads);

  Verdict v;
  for (const auto& r : roots) {
    if (auto w = search.dfs(r, stats, {})) {
      v.metric = true;
      v.witness = std::move(w);
      break;
    }
  }
  v.stats = std::move(stats);
  return v;
}

struct MinimalityReport {
  Verdict whole;
  std::vector<Verdict> deletions;  // deletions[v]: h without vertex v

  bool minimal_nonmetric() const {
    if (whole.metric) return false;
    return std::all_of(deletions.begin(), deletions.end(), [](const Verdict& d) { return d.metric; });
  }
};

inline MinimalityReport minimality_report(const Hypergraph3& h, const DecideOptions& opts = {}) {
  if (h.vertex_count() < 3) throw std::invalid_argument("minimality needs at least three vertices");
  MinimalityReport r;
  r.whole = decide_metric(h, opts);
  for (Vertex v = 0; v < h.vertex_count(); ++v) r.deletions.push_back(decide_metric(h.without_vertex(v), opts));
  return r;
}

inline bool is_minimal_nonmetric(const Hypergraph3& h, const DecideOptions& opts = {}) {
  if (h.vertex_count() < 3) throw std::invalid_argument("minimality needs at least three vertices");
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (!decide_metric(h.without_vertex(v), opts).metric) return false;
  return !decide_metric(h, opts).metric;
}

}  // namespace geodesic
