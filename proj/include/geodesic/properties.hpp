#pragma once

#include "geodesic/metric_space.hpp"
#include "geodesic/orientation.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodesic {

// Orders `subset` so that [o_u o_v o_w] holds whenever u < v < w, if such an
// order exists and the diametral-endpoint heuristic finds it. Always succeeds
// when |subset| >= 5; for three or four points a cyclic configuration (four
// points with [abc],[bcd],[cda],[dab]) has no such order and yields nullopt.
//
// Precondition: every three points of `subset` are collinear in m.
inline std::optional<std::vector<int>> recover_linear_order(const MetricSpace& m,
                                                            const std::vector<int>& subset) {
  const int k = int(subset.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        if (!m.middle(subset[i], subset[j], subset[l]))
          throw std::invalid_argument("points " + m.label(subset[i]) + ", " + m.label(subset[j]) +
                                      ", " + m.label(subset[l]) + " are not collinear");
  if (k <= 2) return subset;

  int end = subset[0];
  Rational best = -1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (m.dist(subset[i], subset[j]) > best) {
        best = m.dist(subset[i], subset[j]);
        end = subset[i];
      }
  std::vector<int> order = subset;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return m.dist(end, a) < m.dist(end, b); });
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      for (int w = v + 1; w < k; ++w)
        if (!m.between(order[u], order[v], order[w])) return std::nullopt;
  return order;
}

// Apex-collinear pairs of an ordered core, split by which point is the middle.
// Pairs hold positions (j, l) with j < l in the core order.
struct ApexClassification {
  int size = 0;           // number of core points
  std::set<Pair> near;    // [x j l]: the smaller endpoint j is the middle
  std::set<Pair> apex;    // [j x l]: the apex is the middle
  std::set<Pair> far;     // [j l x]: the larger endpoint l is the middle

  bool in_near(int j, int l) const { return near.count({j, l}) > 0; }
  bool in_apex(int j, int l) const { return apex.count({j, l}) > 0; }
  bool in_far(int j, int l) const { return far.count({j, l}) > 0; }
};

inline bool is_linear_order(const MetricSpace& m, const std::vector<int>& order) {
  for (std::size_t u = 0; u < order.size(); ++u)
    for (std::size_t v = u + 1; v < order.size(); ++v)
      for (std::size_t w = v + 1; w < order.size(); ++w)
        if (!m.between(order[u], order[v], order[w])) return false;
  return true;
}

inline ApexClassification apex_classification(const MetricSpace& m, const std::vector<int>& order,
                                              int apex) {
  if (std::find(order.begin(), order.end(), apex) != order.end())
    throw std::invalid_argument("apex belongs to the ordered core");
  if (!is_linear_order(m, order))
    throw std::invalid_argument("core order is not linear in the metric");
  ApexClassification c;
  c.size = int(order.size());
  for (int j = 0; j < c.size; ++j)
    for (int l = j + 1; l < c.size; ++l) {
      if (m.between(apex, order[j], order[l])) c.near.insert({j, l});
      if (m.between(order[j], apex, order[l])) c.apex.insert({j, l});
      if (m.between(order[j], order[l], apex)) c.far.insert({j, l});
    }
  return c;
}

// The implications every apex classification of a genuine metric obeys. The
// strict variants of the two mixed rules demand the conclusion in its
// increasing orientation.
enum class ApexRule {
  NearSplits,        // (j,l) near, j<k<l  =>  (j,k), (k,l) near
  FarSplits,         // (j,l) far,  j<k<l  =>  (j,k), (k,l) far
  ApexExtendsLeft,   // (j,l) apex, i<j    =>  (i,j) far, (i,l) apex
  ApexExtendsRight,  // (j,l) apex, l<m    =>  (j,m) apex, (l,m) near
  NearChains,        // (i,j), (j,k) near  =>  (i,k) near
  FarChains,         // (i,j), (j,k) far   =>  (i,k) far
  ApexNear,          // (i,k) apex, (j,k) near  =>  (i,j) or (j,i) apex
  ApexFar,           // (i,k) apex, (i,j) far   =>  (j,k) or (k,j) apex
  ApexNearStrict,    // ... => (i,j) apex
  ApexFarStrict,     // ... => (j,k) apex
};

inline const char* to_string(ApexRule r) {
  switch (r) {
    case ApexRule::NearSplits: return "near-splits";
    case ApexRule::FarSplits: return "far-splits";
    case ApexRule::ApexExtendsLeft: return "apex-extends-left";
    case ApexRule::ApexExtendsRight: return "apex-extends-right";
    case ApexRule::NearChains: return "near-chains";
    case ApexRule::FarChains: return "far-chains";
    case ApexRule::ApexNear: return "apex-near";
    case ApexRule::ApexFar: return "apex-far";
    case ApexRule::ApexNearStrict: return "apex-near-strict";
    case ApexRule::ApexFarStrict: return "apex-far-strict";
  }
  return "?";
}

struct ApexViolation {
  ApexRule rule;
  std::array<int, 3> positions{};  // the quantified indices, in rule order
};

inline std::vector<ApexViolation> check_apex_implications(const ApexClassification& c) {
  std::vector<ApexViolation> out;
  const int n = c.size;
  auto apex_any = [&](int a, int b) { return c.in_apex(std::min(a, b), std::max(a, b)); };

  for (auto [j, l] : c.near)
    for (int k = j + 1; k < l; ++k)
      if (!c.in_near(j, k) || !c.in_near(k, l)) out.push_back({ApexRule::NearSplits, {j, k, l}});
  for (auto [j, l] : c.far)
    for (int k = j + 1; k < l; ++k)
      if (!c.in_far(j, k) || !c.in_far(k, l)) out.push_back({ApexRule::FarSplits, {j, k, l}});
  for (auto [j, l] : c.apex) {
    for (int i = 0; i < j; ++i)
      if (!c.in_far(i, j) || !c.in_apex(i, l))
        out.push_back({ApexRule::ApexExtendsLeft, {i, j, l}});
    for (int m = l + 1; m < n; ++m)
      if (!c.in_apex(j, m) || !c.in_near(l, m))
        out.push_back({ApexRule::ApexExtendsRight, {j, l, m}});
  }
  for (auto [i, j] : c.near)
    for (int k = j + 1; k < n; ++k)
      if (c.in_near(j, k) && !c.in_near(i, k)) out.push_back({ApexRule::NearChains, {i, j, k}});
  for (auto [i, j] : c.far)
    for (int k = j + 1; k < n; ++k)
      if (c.in_far(j, k) && !c.in_far(i, k)) out.push_back({ApexRule::FarChains, {i, j, k}});
  for (auto [i, k] : c.apex)
    for (int j = 0; j < n; ++j) {
      if (j == i || j == k) continue;
      if (j < k && c.in_near(j, k)) {
        if (!apex_any(i, j)) out.push_back({ApexRule::ApexNear, {i, j, k}});
        if (!(i < j && c.in_apex(i, j))) out.push_back({ApexRule::ApexNearStrict, {i, j, k}});
      }
      if (i < j && c.in_far(i, j)) {
        if (!apex_any(j, k)) out.push_back({ApexRule::ApexFar, {i, j, k}});
        if (!(j < k && c.in_apex(j, k))) out.push_back({ApexRule::ApexFarStrict, {i, j, k}});
      }
    }
  return out;
}

// An ordered 4-tuple with [abd] and [bcd] asserted but [abc] or [acd] missing.
struct FourPointViolation {
  std::array<int, 4> points{};
};

inline std::vector<FourPointViolation> check_menger(const OrientationAssignment& facts) {
  std::vector<FourPointViolation> out;
  const int n = facts.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        if (a == b || b == d || a == d || !facts.asserts(a, b, d)) continue;
        for (int c = 0; c < n; ++c) {
          if (c == a || c == b || c == d || !facts.asserts(b, c, d)) continue;
          if (!facts.asserts(a, b, c) || !facts.asserts(a, c, d)) out.push_back({{a, b, c, d}});
        }
      }
  return out;
}

inline std::vector<FourPointViolation> check_menger(const MetricSpace& m) {
  return check_menger(OrientationAssignment::of(m));
}

}  // namespace geodesic
