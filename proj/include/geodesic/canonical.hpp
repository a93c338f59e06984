#pragma once

#include "geodesic/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodesic {

constexpr int kMaxCanonicalVertices = 8;

// Triple set as a bitmask over triple_rank (56 bits suffice for 8 vertices).
using TripleMask = std::uint64_t;

inline TripleMask triple_mask(const Hypergraph3& h) {
  if (h.vertex_count() > kMaxCanonicalVertices)
    throw std::invalid_argument("canonical forms support at most 8 vertices");
  TripleMask m = 0;
  for (const auto& t : h.triples()) m |= TripleMask{1} << t.rank();
  return m;
}

inline Hypergraph3 hypergraph_from_mask(int n, TripleMask mask) {
  std::vector<Triple> t;
  for (int r = 0; r < triple_count(n); ++r)
    if (mask >> r & 1) t.push_back(triple_at(r));
  return Hypergraph3(n, std::move(t));
}

// For every vertex permutation of {0..n-1}, the induced map on triple ranks.
class PermutationTable {
 public:
  explicit PermutationTable(int n) : n_(n) {
    if (n > kMaxCanonicalVertices)
      throw std::invalid_argument("canonical forms support at most 8 vertices");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    const int tc = triple_count(n);
    do {
      std::vector<std::uint8_t> map(tc);
      for (int r = 0; r < tc; ++r) {
        const Triple& t = triple_at(r);
        map[r] = std::uint8_t(triple_rank(p[t.v[0]], p[t.v[1]], p[t.v[2]]));
      }
      maps_.push_back(std::move(map));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  int vertex_count() const { return n_; }

  TripleMask apply(std::size_t perm, TripleMask mask) const {
    TripleMask out = 0;
    const auto& map = maps_[perm];
    while (mask) {
      int r = __builtin_ctzll(mask);
      mask &= mask - 1;
      out |= TripleMask{1} << map[r];
    }
    return out;
  }

  TripleMask canonical(TripleMask mask) const {
    TripleMask best = mask;
    for (std::size_t p = 0; p < maps_.size(); ++p) best = std::min(best, apply(p, mask));
    return best;
  }

 private:
  int n_;
  std::vector<std::vector<std::uint8_t>> maps_;
};

inline const PermutationTable& permutation_table(int n) {
  static const std::vector<PermutationTable> tables = [] {
    std::vector<PermutationTable> t;
    for (int k = 0; k <= kMaxCanonicalVertices; ++k) t.emplace_back(k);
    return t;
  }();
  if (n < 0 || n > kMaxCanonicalVertices)
    throw std::invalid_argument("canonical forms support at most 8 vertices");
  return tables[n];
}

// Minimum triple mask over all relabelings, as bytes: the vertex count
// followed by the mask, most significant byte first. Two hypergraphs get the
// same string iff they are isomorphic.
inline std::string canonical_form(const Hypergraph3& h) {
  TripleMask m = permutation_table(h.vertex_count()).canonical(triple_mask(h));
  std::string out(1, char(h.vertex_count()));
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(char((m >> shift) & 0xff));
  return out;
}

inline bool isomorphic(const Hypergraph3& a, const Hypergraph3& b) {
  return a.vertex_count() == b.vertex_count() && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace geodesic
