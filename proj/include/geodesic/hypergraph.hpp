#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geodesic {

using Vertex = int;

// Colex ranks: pair {a<b} -> b(b-1)/2 + a, triple {a<b<c} -> C(c,3)+C(b,2)+a.
// Both are dense over {0..n-1} for every n.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }
constexpr int triple_count(int n) { return n * (n - 1) * (n - 2) / 6; }

constexpr int pair_rank(int a, int b) {
  if (a > b) std::swap(a, b);
  return b * (b - 1) / 2 + a;
}

constexpr int triple_rank(int a, int b, int c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a;
}

struct Pair {
  Vertex a = 0, b = 0;  // a < b

  static Pair of(Vertex x, Vertex y) { return x < y ? Pair{x, y} : Pair{y, x}; }
  auto operator<=>(const Pair&) const = default;
};

struct Triple {
  std::array<Vertex, 3> v{};  // strictly increasing

  static Triple of(Vertex x, Vertex y, Vertex z) {
    Triple t{{x, y, z}};
    std::sort(t.v.begin(), t.v.end());
    return t;
  }
  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  int rank() const { return triple_rank(v[0], v[1], v[2]); }
  auto operator<=>(const Triple&) const = default;
};

constexpr int kMaxRankedVertices = 32;

// Inverse of triple_rank for vertices below kMaxRankedVertices.
inline const Triple& triple_at(int rank) {
  static const std::vector<Triple> table = [] {
    std::vector<Triple> t(triple_count(kMaxRankedVertices));
    for (int c = 2; c < kMaxRankedVertices; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) t[triple_rank(a, b, c)] = Triple{{a, b, c}};
    return t;
  }();
  return table[rank];
}

inline std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) out.push_back({{a, b, c}});
  return out;
}

// 3-uniform hypergraph on {0..n-1}. Triples are kept sorted and unique.
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  explicit Hypergraph3(int n, std::vector<Triple> triples = {}) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& t : triples) {
      t = Triple::of(t.v[0], t.v[1], t.v[2]);
      if (t.v[0] < 0 || t.v[2] >= n)
        throw std::invalid_argument("triple vertex out of range");
      if (t.v[0] == t.v[1] || t.v[1] == t.v[2])
        throw std::invalid_argument("triple with repeated vertex");
    }
    std::sort(triples.begin(), triples.end());
    if (std::adjacent_find(triples.begin(), triples.end()) != triples.end())
      throw std::invalid_argument("duplicate triple");
    triples_ = std::move(triples);
    member_.assign(triple_count(n), false);
    for (const auto& t : triples_) member_[t.rank()] = true;
  }

  int vertex_count() const { return n_; }
  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool contains(Vertex a, Vertex b, Vertex c) const { return member_[triple_rank(a, b, c)]; }
  bool contains(const Triple& t) const { return member_[t.rank()]; }
  // Indexed by triple_rank.
  const std::vector<bool>& membership() const { return member_; }

  // Subhypergraph induced on `keep`, relabelled to positions 0..|keep|-1.
  Hypergraph3 induced(const std::vector<Vertex>& keep) const {
    std::vector<Triple> out;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        for (std::size_t k = j + 1; k < keep.size(); ++k)
          if (contains(keep[i], keep[j], keep[k]))
            out.push_back(Triple::of(int(i), int(j), int(k)));
    return Hypergraph3(int(keep.size()), std::move(out));
  }

  Hypergraph3 without_vertex(Vertex v) const {
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < n_; ++u)
      if (u != v) keep.push_back(u);
    return induced(keep);
  }

  friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) {
    return a.n_ == b.n_ && a.triples_ == b.triples_;
  }

 private:
  int n_ = 0;
  std::vector<Triple> triples_;
  std::vector<bool> member_;
};

inline Hypergraph3 complete_hypergraph(int n) { return Hypergraph3(n, all_triples(n)); }

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<Pair> edges = {}) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges) {
      e = Pair::of(e.a, e.b);
      if (e.a < 0 || e.b >= n) throw std::invalid_argument("edge vertex out of range");
      if (e.a == e.b) throw std::invalid_argument("loop edge");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(pair_count(n), false);
    for (const auto& e : edges_) adj_[pair_rank(e.a, e.b)] = true;
  }

  int vertex_count() const { return n_; }
  const std::vector<Pair>& edges() const { return edges_; }
  bool adjacent(Vertex a, Vertex b) const { return a != b && adj_[pair_rank(a, b)]; }

  Graph induced(const std::vector<Vertex>& keep) const {
    std::vector<Pair> out;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) out.push_back({int(i), int(j)});
    return Graph(int(keep.size()), std::move(out));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Pair> edges_;
  std::vector<bool> adj_;
};

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Pair> e;
  for (int i = 0; i < n; ++i) e.push_back(Pair::of(i, (i + 1) % n));
  return Graph(n, std::move(e));
}

// Path 0-1-...-(n-1) on n vertices.
inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Pair> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<Pair> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return Graph(n, std::move(e));
}

inline Graph complement(const Graph& g) {
  std::vector<Pair> e;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (!g.adjacent(a, b)) e.push_back({a, b});
  return Graph(g.vertex_count(), std::move(e));
}

// Graph G together with the apex vertex x = n. Expands to every triple of
// {0..n-1} plus {u, v, x} for each edge {u, v}.
struct BasedHypergraph {
  Graph graph;

  Vertex apex() const { return graph.vertex_count(); }

  Hypergraph3 expand() const {
    const int n = graph.vertex_count();
    std::vector<Triple> t = all_triples(n);
    for (const auto& e : graph.edges()) t.push_back(Triple::of(e.a, e.b, n));
    return Hypergraph3(n + 1, std::move(t));
  }
};

inline Hypergraph3 based_hypergraph(const Graph& g) { return BasedHypergraph{g}.expand(); }

// Partition of the pairs of {0..n-1}. Blocks are stored canonically:
// pairs sorted inside a block, blocks ordered by their smallest pair.
class PairEquivalence {
 public:
  PairEquivalence() = default;
  PairEquivalence(int n, std::vector<std::vector<Pair>> classes) : n_(n) {
    std::vector<int> seen(pair_count(n), 0);
    for (auto& block : classes) {
      if (block.empty()) throw std::invalid_argument("empty equivalence class");
      for (auto& p : block) {
        p = Pair::of(p.a, p.b);
        if (p.a < 0 || p.b >= n || p.a == p.b)
          throw std::invalid_argument("pair out of range");
        if (seen[pair_rank(p.a, p.b)]++)
          throw std::invalid_argument("pair listed in two classes");
      }
      std::sort(block.begin(), block.end());
    }
    for (int c : seen)
      if (c == 0) throw std::invalid_argument("equivalence classes do not cover every pair");
    std::sort(classes.begin(), classes.end());
    classes_ = std::move(classes);
  }

  int vertex_count() const { return n_; }
  const std::vector<std::vector<Pair>>& classes() const { return classes_; }

  bool equivalent(Pair p, Pair q) const {
    p = Pair::of(p.a, p.b);
    q = Pair::of(q.a, q.b);
    for (const auto& block : classes_) {
      bool hp = std::binary_search(block.begin(), block.end(), p);
      bool hq = std::binary_search(block.begin(), block.end(), q);
      if (hp || hq) return hp && hq;
    }
    return false;
  }

  friend bool operator==(const PairEquivalence&, const PairEquivalence&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<Pair>> classes_;
};

// Edges form one class and non-edges the other; either may be absent.
inline PairEquivalence graph_equivalence(const Graph& g) {
  std::vector<Pair> in, out;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      (g.adjacent(a, b) ? in : out).push_back({a, b});
  std::vector<std::vector<Pair>> classes;
  if (!in.empty()) classes.push_back(std::move(in));
  if (!out.empty()) classes.push_back(std::move(out));
  return PairEquivalence(g.vertex_count(), std::move(classes));
}

}  // namespace geodesic
