#pragma once

// The fixed list of claims that `geodesic verify-paper` and the acceptance
// test replay. Each claim is a self-contained check; adding one means adding
// a row to the table in replay_manifest().

#include "geodesic/canonical.hpp"
#include "geodesic/constructions.hpp"
#include "geodesic/enumerate.hpp"
#include "geodesic/hypergraph.hpp"
#include "geodesic/metric_space.hpp"
#include "geodesic/obstacles.hpp"
#include "geodesic/properties.hpp"
#include "geodesic/random_spaces.hpp"
#include "geodesic/recognizer.hpp"

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace geodesic {

// Knobs for tests and the CLI. The chart overrides exist for negative
// controls: a corrupted chart must make its claims fail.
struct ReplayHooks {
  std::optional<DistanceChart> c4_chart;
  std::optional<DistanceChart> p5bar_minus_a_chart;
  DecideOptions decide;
  std::uint64_t seed = 0x5eed'1234'abcdULL;
  int property_cases = 1000;
  int oracle_random_cases = 200;
  double enumeration_budget_seconds = 600;
};

struct ClaimOutcome {
  bool pass = false;
  std::string detail;
};

struct Claim {
  std::string id;
  std::string statement;
  int criterion = 0;               // acceptance criterion this claim belongs to
  double budget_seconds = 0;       // 0: no runtime requirement
  std::function<ClaimOutcome(const ReplayHooks&)> run;
};

struct ReplayEntry {
  std::string id;
  std::string statement;
  int criterion = 0;
  bool pass = false;
  double elapsed_seconds = 0;
  std::string detail;
};

struct ReplayReport {
  std::vector<ReplayEntry> entries;

  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return !entries.empty();
  }
};

namespace replay {

inline ClaimOutcome ok(std::string detail = {}) { return {true, std::move(detail)}; }
inline ClaimOutcome fail(std::string detail) { return {false, std::move(detail)}; }

// "[uvw]" with u, v, w single-label points, canonical by label order of the
// endpoints.
inline std::string fact(const std::string& u, const std::string& v, const std::string& w) {
  return u < w ? "[" + u + v + w + "]" : "[" + w + v + u + "]";
}

inline std::set<std::string> facts_of(const MetricSpace& m) {
  std::set<std::string> out;
  for (const auto& b : betweenness_triples(m)) out.insert(fact(m.label(b.u), m.label(b.v), m.label(b.w)));
  return out;
}

inline std::set<std::string> facts_from(const std::vector<std::string>& listed) {
  std::set<std::string> out;
  for (const auto& s : listed) out.insert(fact(s.substr(0, 1), s.substr(1, 1), s.substr(2, 1)));
  return out;
}

inline std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
  return out;
}

// Listed facts must be exactly the betweenness of m; every orientation of the
// listed non-collinear triples must be absent.
inline ClaimOutcome chart_betweenness(const DistanceChart& chart, const std::vector<std::string>& present,
                                      const std::vector<std::string>& absent_triples) {
  MetricSpace m = validate_metric(chart.points, chart.dist);
  auto got = facts_of(m);
  auto want = facts_from(present);
  if (got != want) return fail("betweenness is {" + join(got) + "}, expected {" + join(want) + "}");
  for (const auto& t : absent_triples) {
    int a = m.index_of(t.substr(0, 1)), b = m.index_of(t.substr(1, 1)), c = m.index_of(t.substr(2, 1));
    if (m.middle(a, b, c)) return fail("{" + t + "} has a middle but should have none");
  }
  return ok(std::to_string(got.size()) + " facts match");
}

inline ClaimOutcome chart_realizes(const DistanceChart& chart, const Hypergraph3& expected) {
  MetricSpace m = validate_metric(chart.points, chart.dist);
  if (hypergraph_of(m) != expected) return fail("collinear triples differ from the based hypergraph");
  return ok();
}

inline std::string verdict_word(const Verdict& v) { return v.metric ? "metric" : "nonmetric"; }

inline ClaimOutcome expect_verdicts(const std::vector<std::pair<std::string, Hypergraph3>>& cases, bool metric,
                                    const DecideOptions& opts) {
  std::string detail;
  for (const auto& [name, h] : cases) {
    Verdict v = decide_metric(h, opts);
    if (v.metric != metric) return fail(name + " is " + verdict_word(v));
    if (v.metric && hypergraph_of(*v.witness) != h) return fail(name + " witness does not re-verify");
    detail += (detail.empty() ? "" : ", ") + name + " " + verdict_word(v) + " (" +
              std::to_string(v.stats.nodes) + " nodes)";
  }
  return ok(detail);
}

inline ClaimOutcome triangle_free_apex_pairs(const ReplayHooks& hooks) {
  const std::vector<std::pair<std::string, Graph>> graphs = {
      {"P4", path_graph(4)}, {"P5", path_graph(5)}, {"C5", cycle_graph(5)}, {"C7", cycle_graph(7)}};
  std::string detail;
  for (const auto& [name, g] : graphs) {
    const int n = g.vertex_count();
    Verdict v = decide_metric(based_hypergraph(g), hooks.decide);
    if (!v.metric) return fail("based " + name + " reported nonmetric");
    std::vector<int> core(n);
    for (int i = 0; i < n; ++i) core[i] = i;
    auto order = recover_linear_order(*v.witness, core);
    if (!order) return fail("no linear order recovered for the core of based " + name);
    ApexClassification c = apex_classification(*v.witness, *order, n);
    for (const auto* s : {&c.near, &c.far})
      for (auto [j, l] : *s)
        if (l != j + 1) return fail(name + ": non-consecutive pair (" + std::to_string(j) + "," + std::to_string(l) + ") in near/far");
    for (auto [j, l] : c.apex)
      if (j != 0 || l != n - 1) return fail(name + ": apex-middle pair other than the extreme one");
    if (!check_apex_implications(c).empty()) return fail(name + ": apex implications violated");
    detail += (detail.empty() ? "" : ", ") + name + " ok";
  }
  return ok(detail);
}

inline ClaimOutcome parity_alternation(const ReplayHooks& hooks) {
  std::string detail;
  for (int n : {5, 7}) {
    Verdict v = decide_metric(based_hypergraph(cycle_graph(n)), hooks.decide);
    if (!v.metric) return fail("based C" + std::to_string(n) + " reported nonmetric");
    std::vector<int> core(n);
    for (int i = 0; i < n; ++i) core[i] = i;
    auto order = recover_linear_order(*v.witness, core);
    if (!order) return fail("no linear order recovered");
    ApexClassification c = apex_classification(*v.witness, *order, n);
    if (c.apex != std::set<Pair>{{0, n - 1}}) return fail("extreme pair is not apex-middle");
    for (int i = 0; i + 1 < n; ++i) {
      bool want_near = i % 2 == 0;
      if (c.in_near(i, i + 1) != want_near || c.in_far(i, i + 1) == want_near)
        return fail("C" + std::to_string(n) + ": consecutive pair " + std::to_string(i) + " breaks alternation");
    }
    detail += (detail.empty() ? "" : ", ") + std::string("C") + std::to_string(n) + " alternates";
  }
  return ok(detail);
}

inline ClaimOutcome oracle_agreement(const std::vector<Hypergraph3>& cases, const DecideOptions& opts) {
  int metric = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    DecideOptions naive = opts;
    naive.naive = true;
    bool fast = decide_metric(cases[i], opts).metric;
    bool slow = decide_metric(cases[i], naive).metric;
    if (fast != slow) return fail("disagreement on case " + std::to_string(i));
    metric += fast;
  }
  return ok(std::to_string(cases.size()) + " cases agree, " + std::to_string(metric) + " metric");
}

}  // namespace replay

inline const std::vector<Claim>& replay_manifest() {
  using namespace replay;
  static const std::vector<Claim> claims = {
      {"odd-cycle-construction",
       "the explicit odd-cycle metric realizes the based hypergraph of C_{2s+1} for s = 1..5", 1, 30,
       [](const ReplayHooks&) {
         for (int s = 1; s <= 5; ++s)
           if (hypergraph_of(odd_cycle_metric(s)) != based_hypergraph(cycle_graph(2 * s + 1)))
             return fail("s = " + std::to_string(s));
         return ok("s = 1..5");
       }},
      {"odd-cycles-metric", "the based hypergraphs of C3, C5 and C7 are decided metric", 1, 30,
       [](const ReplayHooks& h) {
         return expect_verdicts({{"C3", based_hypergraph(cycle_graph(3))},
                                 {"C5", based_hypergraph(cycle_graph(5))},
                                 {"C7", based_hypergraph(cycle_graph(7))}},
                                true, h.decide);
       }},
      {"c4-chart-betweenness",
       "the C4 chart has exactly [abc] [bcd] [cda] [dab] [xab] [xad] [xcb] [xcd] and no middle for {x,a,c}, {x,b,d}",
       2, 0,
       [](const ReplayHooks& h) {
         return chart_betweenness(h.c4_chart.value_or(c4_chart()),
                                  {"abc", "bcd", "cda", "dab", "xab", "xad", "xcb", "xcd"}, {"xac", "xbd"});
       }},
      {"c4-chart-realizes", "the C4 chart realizes the based hypergraph of C4", 2, 0,
       [](const ReplayHooks& h) {
         return chart_realizes(h.c4_chart.value_or(c4_chart()), based_hypergraph(c4_chart_graph()));
       }},
      {"c4-metric", "the based hypergraph of C4 is decided metric", 2, 0,
       [](const ReplayHooks& h) { return expect_verdicts({{"C4", based_hypergraph(cycle_graph(4))}}, true, h.decide); }},
      {"even-cycle-c6", "the based hypergraph of C6 is decided nonmetric", 3, 120,
       [](const ReplayHooks& h) { return expect_verdicts({{"C6", based_hypergraph(cycle_graph(6))}}, false, h.decide); }},
      {"even-cycle-c8", "the based hypergraph of C8 is decided nonmetric", 3, 900,
       [](const ReplayHooks& h) { return expect_verdicts({{"C8", based_hypergraph(cycle_graph(8))}}, false, h.decide); }},
      {"even-cycle-c6-minimal", "every one-vertex deletion of the based hypergraph of C6 is metric", 3, 120,
       [](const ReplayHooks& h) {
         if (!is_minimal_nonmetric(based_hypergraph(cycle_graph(6)), h.decide)) return fail("not minimal nonmetric");
         return ok("all 7 deletions metric");
       }},
      {"house-nonmetric", "the based hypergraph of the complement of P5 is decided nonmetric", 4, 0,
       [](const ReplayHooks& h) { return expect_verdicts({{"P5-bar", based_hypergraph(house_graph())}}, false, h.decide); }},
      {"house-deletions-metric", "all five deletions of a vertex of the complement of P5 leave a metric based hypergraph",
       4, 0,
       [](const ReplayHooks& h) {
         const Hypergraph3 based = based_hypergraph(house_graph());
         for (Vertex v = 0; v < 5; ++v)
           if (!decide_metric(based.without_vertex(v), h.decide).metric)
             return fail("deleting " + std::string(1, char('a' + v)) + " leaves a nonmetric hypergraph");
         return ok("a..e");
       }},
      {"house-minus-a-chart",
       "the chart on {e,b,c,d,x} has exactly [ebc] [ebd] [ecd] [bcd] [xeb] [xec] [xdc] [xbc], no middle for {x,e,d}, {x,b,d}, and realizes the deletion of a",
       4, 0,
       [](const ReplayHooks& h) {
         DistanceChart chart = h.p5bar_minus_a_chart.value_or(p5bar_minus_a_chart());
         auto listed = chart_betweenness(chart, {"ebc", "ebd", "ecd", "bcd", "xeb", "xec", "xdc", "xbc"}, {"xed", "xbd"});
         if (!listed.pass) return listed;
         // House points a..e are 0..4 and the apex is 5; the chart lists e, b, c, d, x.
         return chart_realizes(chart, based_hypergraph(house_graph()).induced({4, 1, 2, 3, 5}));
       }},
      {"obstacle-c6", "the equivalence of C6 is certified an obstacle", 5, 0,
       [](const ReplayHooks& h) {
         auto o = certify_obstacle(cycle_graph(6), h.decide);
         return o.status == ObstacleOutcome::Status::Certified ? ok() : fail(o.reason);
       }},
      {"obstacle-c8", "the equivalence of C8 is certified an obstacle", 5, 0,
       [](const ReplayHooks& h) {
         auto o = certify_obstacle(cycle_graph(8), h.decide);
         return o.status == ObstacleOutcome::Status::Certified ? ok() : fail(o.reason);
       }},
      {"cycle-obstacle-minimal", "every one-vertex deletion of C6 and C8 is realized with exactly two lines", 5, 0,
       [](const ReplayHooks&) {
         for (int n : {6, 8})
           for (const auto& c : cycle_obstacle_minimality(n))
             if (!c.ok())
               return fail("C" + std::to_string(n) + " without " + std::to_string(c.removed) + ": " +
                           std::to_string(c.distinct_lines) + " lines");
         return ok("C6 and C8");
       }},
      {"c4-not-obstacle", "C4 gets no certificate and the C4 chart realizes its equivalence", 5, 0,
       [](const ReplayHooks& h) {
         auto o = certify_obstacle(cycle_graph(4), h.decide);
         if (o.status == ObstacleOutcome::Status::Certified) return fail("C4 certified");
         DistanceChart chart = h.c4_chart.value_or(c4_chart());
         MetricSpace m = validate_metric(chart.points, chart.dist);
         if (!check_meq(m, {0, 1, 2, 3}, graph_equivalence(cycle_graph(4))))
           return fail("chart lines do not realize the C4 equivalence");
         return ok(std::string("certify: ") + to_string(o.status));
       }},
      {"oracle-four-vertices", "search and naive enumeration agree on every hypergraph on 4 vertices", 6, 0,
       [](const ReplayHooks& h) {
         std::vector<Hypergraph3> cases;
         for (TripleMask m = 0; m < 16; ++m) cases.push_back(hypergraph_from_mask(4, m));
         return oracle_agreement(cases, h.decide);
       }},
      {"oracle-five-vertices", "search and naive enumeration agree on random hypergraphs on 5 vertices", 6, 0,
       [](const ReplayHooks& h) {
         Rng rng(h.seed);
         std::vector<Hypergraph3> cases;
         for (int i = 0; i < h.oracle_random_cases; ++i) cases.push_back(random_hypergraph(rng, 5));
         return oracle_agreement(cases, h.decide);
       }},
      {"four-point-rule", "random metric spaces on up to 7 points satisfy the four-point betweenness rule", 7, 0,
       [](const ReplayHooks& h) {
         Rng rng(h.seed + 1);
         std::size_t facts = 0;
         for (int i = 0; i < h.property_cases; ++i) {
           MetricSpace m = random_metric_space(rng, 3 + i % 5);
           facts += betweenness_triples(m).size();
           if (!check_menger(m).empty()) return fail("violation in case " + std::to_string(i));
         }
         return ok(std::to_string(h.property_cases) + " spaces, " + std::to_string(facts) + " facts");
       }},
      {"apex-implications", "random linear cores with an apex obey every apex implication, strict forms included", 7, 0,
       [](const ReplayHooks& h) {
         Rng rng(h.seed + 2);
         int with_apex_middle = 0;
         for (int i = 0; i < h.property_cases; ++i) {
           int k = 2 + i % 6;
           MetricSpace m = random_linear_with_apex(rng, k);
           std::vector<int> order(k);
           for (int j = 0; j < k; ++j) order[j] = j;
           ApexClassification c = apex_classification(m, order, k);
           with_apex_middle += !c.apex.empty();
           auto v = check_apex_implications(c);
           if (!v.empty()) return fail(std::string(to_string(v.front().rule)) + " fails in case " + std::to_string(i));
         }
         return ok(std::to_string(h.property_cases) + " spaces, " + std::to_string(with_apex_middle) +
                   " with an apex-middle pair");
       }},
      {"linear-order-recovery", "collinear sets of at least 5 points always get a linear order back", 7, 0,
       [](const ReplayHooks& h) {
         Rng rng(h.seed + 3);
         for (int i = 0; i < h.property_cases; ++i) {
           CollinearSample s = random_collinear(rng, 5 + i % 4);
           auto order = recover_linear_order(s.space, s.subset);
           if (!order || !is_linear_order(s.space, *order)) return fail("case " + std::to_string(i));
           auto rev = s.truth;
           std::reverse(rev.begin(), rev.end());
           if (*order != s.truth && *order != rev) return fail("case " + std::to_string(i) + " recovered a different order");
         }
         return ok(std::to_string(h.property_cases) + " configurations");
       }},
      {"witness-reverification", "every metric verdict on a random metric hypergraph carries a witness with the same triples",
       7, 0,
       [](const ReplayHooks& h) {
         Rng rng(h.seed + 4);
         for (int i = 0; i < h.property_cases; ++i) {
           Hypergraph3 target = hypergraph_of(random_metric_space(rng, 3 + i % 4));
           Verdict v = decide_metric(target, h.decide);
           if (!v.metric) return fail("case " + std::to_string(i) + " decided nonmetric");
           if (hypergraph_of(*v.witness) != target) return fail("case " + std::to_string(i) + " witness mismatch");
         }
         return ok(std::to_string(h.property_cases) + " verdicts");
       }},
      {"triangle-free-apex-pairs",
       "for triangle-free P4, P5, C5, C7 the witness has only consecutive near/far pairs and only the extreme apex pair",
       8, 0, [](const ReplayHooks& h) { return triangle_free_apex_pairs(h); }},
      {"odd-cycle-alternation", "in witnesses for C5 and C7 consecutive pairs alternate near, far, ..., far", 8, 0,
       [](const ReplayHooks& h) { return parity_alternation(h); }},
      {"enumeration-three", "no hypergraph on 3 vertices is minimal nonmetric", 9, 0,
       [](const ReplayHooks& h) {
         auto r = enumerate_minimal_nonmetric(3, std::chrono::duration<double>(h.enumeration_budget_seconds), h.decide);
         if (r.truncated) return fail("budget exhausted");
         return r.minimal_nonmetric.empty() ? ok(std::to_string(r.classes_total) + " classes")
                                            : fail(std::to_string(r.minimal_nonmetric.size()) + " found");
       }},
      {"enumeration-six-house", "enumeration on 6 vertices rediscovers the based complement of P5", 9, 0,
       [](const ReplayHooks& h) {
         auto r = enumerate_minimal_nonmetric(6, std::chrono::duration<double>(h.enumeration_budget_seconds), h.decide);
         const Hypergraph3 house = based_hypergraph(house_graph());
         int hits = 0;
         for (const auto& g : r.minimal_nonmetric) hits += isomorphic(g, house);
         std::string detail = std::to_string(r.minimal_nonmetric.size()) + " minimal nonmetric of " +
                              std::to_string(r.classes_examined) + "/" + std::to_string(r.classes_total) + " classes" +
                              (r.truncated ? " (truncated)" : "");
         return hits == 1 ? ok(detail) : fail(detail + ", " + std::to_string(hits) + " isomorphic to the house");
       }},
  };
  return claims;
}

// Runs the claim whose id equals `only` (all claims when empty). A claim that
// throws fails with the exception text; one over its budget fails too.
inline ReplayReport run_replay(const ReplayHooks& hooks = {}, const std::string& only = {},
                               const std::function<void(const ReplayEntry&)>& progress = {}) {
  ReplayReport report;
  for (const auto& c : replay_manifest()) {
    if (!only.empty() && c.id != only) continue;
    ReplayEntry e{c.id, c.statement, c.criterion, false, 0, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
      ClaimOutcome o = c.run(hooks);
      e.pass = o.pass;
      e.detail = std::move(o.detail);
    } catch (const std::exception& ex) {
      e.detail = std::string("exception: ") + ex.what();
    }
    e.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && e.elapsed_seconds > c.budget_seconds) {
      e.pass = false;
      std::ostringstream os;
      os << "over budget (" << e.elapsed_seconds << " s > " << c.budget_seconds << " s)";
      e.detail += (e.detail.empty() ? "" : "; ") + os.str();
    }
    if (progress) progress(e);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace geodesic
