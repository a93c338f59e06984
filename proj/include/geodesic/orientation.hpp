#pragma once

#include "geodesic/hypergraph.hpp"
#include "geodesic/metric_space.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace geodesic {

// Partial map from triples of {0..n-1} to their middle vertex.
class OrientationAssignment {
 public:
  static constexpr std::int8_t kUnassigned = -1;

  OrientationAssignment() = default;
  explicit OrientationAssignment(int n) : n_(n), middle_(triple_count(n), kUnassigned) {}

  int vertex_count() const { return n_; }

  std::optional<Vertex> middle(Vertex a, Vertex b, Vertex c) const {
    auto m = middle_[triple_rank(a, b, c)];
    if (m == kUnassigned) return std::nullopt;
    return m;
  }
  std::optional<Vertex> middle(const Triple& t) const { return middle(t.v[0], t.v[1], t.v[2]); }

  // [a b c] is asserted.
  bool asserts(Vertex a, Vertex b, Vertex c) const { return middle_[triple_rank(a, b, c)] == b; }

  bool assigned(int rank) const { return middle_[rank] != kUnassigned; }
  Vertex middle_at(int rank) const { return middle_[rank]; }

  // Throws if the triple already has a different middle.
  void set(const Triple& t, Vertex mid) {
    if (!t.contains(mid)) throw std::invalid_argument("middle must belong to its triple");
    auto& slot = middle_[t.rank()];
    if (slot != kUnassigned && slot != mid)
      throw std::logic_error("triple already has a different middle");
    slot = std::int8_t(mid);
  }

  std::size_t assigned_count() const {
    std::size_t c = 0;
    for (auto m : middle_) c += m != kUnassigned;
    return c;
  }

  std::vector<BetweennessTriple> facts() const {
    std::vector<BetweennessTriple> out;
    for (const auto& t : all_triples(n_)) {
      auto m = middle(t);
      if (!m) continue;
      int a = -1, b = -1;
      for (int x : t.v)
        if (x != *m) (a < 0 ? a : b) = x;
      out.push_back(BetweennessTriple::of(a, *m, b));
    }
    return out;
  }

  static OrientationAssignment of(const MetricSpace& m) {
    OrientationAssignment a(m.size());
    for (const auto& b : betweenness_triples(m)) a.set(Triple::of(b.u, b.v, b.w), b.v);
    return a;
  }

  friend bool operator==(const OrientationAssignment&, const OrientationAssignment&) = default;

 private:
  int n_ = 0;
  std::vector<std::int8_t> middle_;
};

struct Conflict {
  enum class Cause {
    NonHyperedge,  // a forced fact lands on a triple outside the hypergraph
    MiddleClash,   // a forced fact disagrees with an existing middle
  };
  Cause cause;
  std::array<Vertex, 4> quad{};  // the four points of the firing rule
  Triple target;                 // the triple the forced fact was about
};

namespace detail {

// Worklist propagation of [abd],[bcd] => [abc],[acd]. `queue` holds ranks of
// triples whose middles are new since the last fixpoint.
inline std::optional<Conflict> propagate(const std::vector<bool>& hyperedge,
                                         OrientationAssignment& a, std::vector<int>& queue) {
  const int n = a.vertex_count();
  std::optional<Conflict> conflict;
  auto force = [&](Vertex x, Vertex y, Vertex z, Vertex mid, const std::array<Vertex, 4>& quad) {
    int r = triple_rank(x, y, z);
    if (!hyperedge[r]) {
      conflict = Conflict{Conflict::Cause::NonHyperedge, quad, Triple::of(x, y, z)};
      return false;
    }
    if (a.assigned(r)) {
      if (a.middle_at(r) == mid) return true;
      conflict = Conflict{Conflict::Cause::MiddleClash, quad, Triple::of(x, y, z)};
      return false;
    }
    a.set(Triple::of(x, y, z), mid);
    queue.push_back(r);
    return true;
  };

  while (!queue.empty()) {
    int r = queue.back();
    queue.pop_back();
    const Triple& t = triple_at(r);
    Vertex m = a.middle_at(r);
    Vertex ends[2];
    int k = 0;
    for (Vertex v : t.v)
      if (v != m) ends[k++] = v;

    for (int side = 0; side < 2; ++side) {
      Vertex p = ends[side], d = ends[1 - side];  // fact [p m d]
      for (Vertex z = 0; z < n; ++z) {
        if (z == p || z == m || z == d) continue;
        // [p m d] as [abd] with partner [m z d] as [bcd].
        if (a.asserts(m, z, d)) {
          std::array<Vertex, 4> quad{p, m, z, d};
          if (!force(p, m, z, m, quad) || !force(p, z, d, z, quad)) return conflict;
        }
        // [p m d] as [bcd] with partner [z p d] as [abd].
        if (a.asserts(z, p, d)) {
          std::array<Vertex, 4> quad{z, p, m, d};
          if (!force(z, p, m, p, quad) || !force(z, m, d, m, quad)) return conflict;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Least fixpoint of `a` under the four-point betweenness rule, or the first
// conflict met on the way.
inline std::variant<OrientationAssignment, Conflict> orientation_closure(const Hypergraph3& h,
                                                                         OrientationAssignment a) {
  if (a.vertex_count() != h.vertex_count())
    throw std::invalid_argument("assignment and hypergraph disagree on vertex count");
  std::vector<int> queue;
  for (int r = 0; r < triple_count(h.vertex_count()); ++r) {
    if (!a.assigned(r)) continue;
    if (!h.membership()[r]) throw std::invalid_argument("assignment orients a non-hyperedge");
    queue.push_back(r);
  }
  // Process in ascending rank order for determinism.
  std::reverse(queue.begin(), queue.end());
  if (auto c = detail::propagate(h.membership(), a, queue)) return *c;
  return a;
}

}  // namespace geodesic
