#include "geodesic/constructions.hpp"
#include "geodesic/random_spaces.hpp"
#include "geodesic/recognizer.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace geodesic;

namespace {

Hypergraph3 based_cycle(int n) { return based_hypergraph(cycle_graph(n)); }

// Nonmetric hypergraphs on 6 vertices with few triples, found by exhaustive
// enumeration and confirmed by an external LP solver.
Hypergraph3 six_vertex_nonmetric() {
  return Hypergraph3(6, {Triple::of(0, 1, 4), Triple::of(0, 1, 5), Triple::of(0, 3, 4), Triple::of(0, 3, 5),
                         Triple::of(1, 2, 4), Triple::of(1, 2, 5), Triple::of(2, 3, 4)});
}

}  // namespace

TEST(DecideMetric, OddCyclesAreMetric) {
  for (int n : {3, 5, 7}) {
    Verdict v = decide_metric(based_cycle(n));
    ASSERT_TRUE(v.metric) << n;
    EXPECT_EQ(hypergraph_of(*v.witness), based_cycle(n));
  }
}

TEST(DecideMetric, C6IsNotMetric) {
  Verdict v = decide_metric(based_cycle(6));
  EXPECT_FALSE(v.metric);
  EXPECT_FALSE(v.witness);
  EXPECT_GT(v.stats.nodes, 0u);
  EXPECT_GT(v.stats.total_conflicts(), 0u);
}

TEST(DecideMetric, HouseIsNotMetric) { EXPECT_FALSE(decide_metric(based_hypergraph(house_graph())).metric); }

TEST(DecideMetric, C4IsMetric) { EXPECT_TRUE(decide_metric(based_cycle(4)).metric); }

TEST(DecideMetric, TinyHypergraphs) {
  EXPECT_TRUE(decide_metric(complete_hypergraph(3)).metric);
  EXPECT_TRUE(decide_metric(Hypergraph3(3)).metric);
  EXPECT_TRUE(decide_metric(Hypergraph3(2)).metric);
  EXPECT_THROW(decide_metric(Hypergraph3(1)), std::invalid_argument);
  EXPECT_THROW(decide_metric(Hypergraph3(0)), std::invalid_argument);
}

TEST(DecideMetric, WitnessIsIntegral) {
  Verdict v = decide_metric(based_cycle(5));
  ASSERT_TRUE(v.metric);
  for (int i = 0; i < v.witness->size(); ++i)
    for (int j = 0; j < v.witness->size(); ++j) EXPECT_EQ(denominator(v.witness->dist(i, j)), 1);
}

TEST(DecideMetric, OptionVariantsAgree) {
  const std::vector<Hypergraph3> cases = {based_cycle(5), based_cycle(6), based_hypergraph(house_graph()),
                                          based_hypergraph(complement(cycle_graph(6))), six_vertex_nonmetric(),
                                          based_hypergraph(path_graph(5))};
  for (const auto& h : cases) {
    bool base = decide_metric(h).metric;
    for (int variant = 0; variant < 4; ++variant) {
      DecideOptions o;
      o.relaxation_pruning = variant & 1;
      o.core_order_branching = variant & 2;
      o.prune_every = 1 + variant;
      EXPECT_EQ(decide_metric(h, o).metric, base) << variant;
    }
  }
}

TEST(DecideMetric, NaiveAgreesOnSixVertexNonmetric) {
  DecideOptions naive;
  naive.naive = true;
  Verdict v = decide_metric(six_vertex_nonmetric(), naive);
  EXPECT_FALSE(v.metric);
  EXPECT_EQ(v.stats.leaves, 2187u);  // 3^7 orientations
  EXPECT_FALSE(decide_metric(six_vertex_nonmetric()).metric);
}

TEST(DecideMetric, NaiveAgreesOnSmallRandomHypergraphs) {
  Rng rng(43);
  DecideOptions naive;
  naive.naive = true;
  int nonmetric = 0;
  for (int i = 0; i < 60; ++i) {
    Hypergraph3 h = random_hypergraph(rng, 6, 0.3);
    if (h.size() > 7) continue;
    bool fast = decide_metric(h).metric;
    EXPECT_EQ(fast, decide_metric(h, naive).metric) << i;
    nonmetric += !fast;
  }
  SUCCEED() << nonmetric << " nonmetric";
}

TEST(DecideMetric, MetricHypergraphsOfRandomSpacesAreRecognized) {
  Rng rng(47);
  for (int i = 0; i < 200; ++i) {
    Hypergraph3 h = hypergraph_of(random_metric_space(rng, 3 + i % 5));
    Verdict v = decide_metric(h);
    ASSERT_TRUE(v.metric) << i;
    EXPECT_EQ(hypergraph_of(*v.witness), h);
  }
}

TEST(DecideMetric, Deterministic) {
  for (const auto& h : {based_cycle(7), based_hypergraph(path_graph(6))}) {
    Verdict a = decide_metric(h), b = decide_metric(h);
    ASSERT_TRUE(a.metric && b.metric);
    EXPECT_EQ(*a.witness, *b.witness);
    EXPECT_EQ(a.stats.nodes, b.stats.nodes);
  }
}

TEST(DecideMetric, ParallelMatchesSequential) {
  DecideOptions par;
  par.threads = 4;
  for (const auto& h : {based_cycle(5), based_cycle(7), based_hypergraph(path_graph(6)), based_cycle(6),
                        based_hypergraph(house_graph())}) {
    Verdict s = decide_metric(h), p = decide_metric(h, par);
    ASSERT_EQ(s.metric, p.metric);
    if (s.metric) {
      EXPECT_EQ(*s.witness, *p.witness);
    }
  }
}

TEST(DecideMetric, ThreadCountFromEnvironment) {
  ::setenv("GEODESIC_THREADS", "3", 1);
  EXPECT_EQ(default_thread_count(), 3);
  ::setenv("GEODESIC_THREADS", "zero", 1);
  EXPECT_EQ(default_thread_count(), 1);
  ::unsetenv("GEODESIC_THREADS");
  EXPECT_EQ(default_thread_count(), 1);
}

TEST(RealizationFromSolution, RejectsWrongSolution) {
  Hypergraph3 h(3, {Triple::of(0, 1, 2)});
  std::vector<Rational> d = {1, 1, 1};  // equilateral: no collinear triple
  EXPECT_THROW(realization_from_solution(h, d), std::logic_error);
}

TEST(FindCompleteCore, BasedHypergraphCore) {
  auto core = find_complete_core(based_cycle(6));
  EXPECT_EQ(core.size(), 6u);
  for (auto v : core) EXPECT_LT(v, 6);
}

TEST(Minimality, C6IsMinimalNonmetric) {
  MinimalityReport r = minimality_report(based_cycle(6));
  EXPECT_FALSE(r.whole.metric);
  ASSERT_EQ(r.deletions.size(), 7u);
  for (const auto& d : r.deletions) EXPECT_TRUE(d.metric);
  EXPECT_TRUE(r.minimal_nonmetric());
  EXPECT_TRUE(is_minimal_nonmetric(based_cycle(6)));
}

TEST(Minimality, HouseIsMinimalNonmetric) { EXPECT_TRUE(is_minimal_nonmetric(based_hypergraph(house_graph()))); }

TEST(Minimality, MetricHypergraphIsNot) {
  EXPECT_FALSE(is_minimal_nonmetric(based_cycle(5)));
  EXPECT_THROW(is_minimal_nonmetric(Hypergraph3(2)), std::invalid_argument);
}

TEST(Minimality, IsolatedVertexBreaksMinimality) {
  // Adding an isolated vertex keeps the hypergraph nonmetric but breaks
  // minimality: deleting that vertex leaves based C6.
  Hypergraph3 c6 = based_cycle(6);
  std::vector<Triple> t = c6.triples();
  Hypergraph3 padded(8, t);
  EXPECT_FALSE(decide_metric(padded).metric);
  EXPECT_FALSE(is_minimal_nonmetric(padded));
}
