#include "geodesic/constructions.hpp"
#include "geodesic/metric_space.hpp"
#include "geodesic/random_spaces.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>

using namespace geodesic;

namespace {

MetricSpace line_space(int n) {
  DistanceMatrix d(n, std::vector<Rational>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) d[i][j] = i < j ? j - i : i - j;
  }
  return validate_metric(labels, d);
}

MetricSpace equilateral() { return validate_metric({"p", "q", "r"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}); }

MetricSpace c4() { return c4_based_metric(); }

std::set<std::string> labels(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }

}  // namespace

TEST(ValidateMetric, TwoPointsIsValid) {
  MetricSpace m = validate_metric({"p", "q"}, {{0, 1}, {1, 0}});
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(m.dist("p", "q"), 1);
}

TEST(ValidateMetric, ChartIsValid) {
  auto c = c4_chart();
  EXPECT_NO_THROW(validate_metric(c.points, c.dist));
}

TEST(ValidateMetric, ReportsTriangleViolationWithWitness) {
  try {
    validate_metric({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    FAIL() << "expected MetricError";
  } catch (const MetricError& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    const auto& v = e.violations()[0];
    EXPECT_EQ(v.kind, MetricViolation::Kind::Triangle);
    EXPECT_EQ(std::set<int>({v.p, v.q, v.r}), std::set<int>({0, 1, 2}));
    EXPECT_EQ(v.q, 1);  // the point the short path goes through
  }
}

TEST(ValidateMetric, ReportsEveryAxiom) {
  auto kinds = [](const DistanceMatrix& d) {
    std::set<MetricViolation::Kind> k;
    for (const auto& v : metric_violations(d)) k.insert(v.kind);
    return k;
  };
  using K = MetricViolation::Kind;
  EXPECT_TRUE(kinds({{1, 1}, {1, 0}}).count(K::NonzeroDiagonal));
  EXPECT_TRUE(kinds({{0, 1}, {2, 0}}).count(K::Asymmetric));
  EXPECT_TRUE(kinds({{0, 0}, {0, 0}}).count(K::NonPositive));
  EXPECT_TRUE(kinds({{0, -1}, {-1, 0}}).count(K::NonPositive));
}

TEST(ValidateMetric, MalformedInputIsAnArgumentError) {
  EXPECT_THROW(validate_metric({"a", "b"}, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(validate_metric({"a", "b"}, {{0, 1}, {1}}), std::invalid_argument);
  EXPECT_THROW(validate_metric({"a", "a"}, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Betweenness, ChartFacts) {
  MetricSpace m = c4();
  std::set<std::string> got;
  for (const auto& b : betweenness_triples(m)) got.insert(to_string(m, b));
  // Endpoints are written in point order: [xab] is [b a x].
  EXPECT_EQ(got, labels({"[a b c]", "[a d c]", "[b a d]", "[b c d]", "[b a x]", "[d a x]", "[b c x]", "[d c x]"}));
  int a = m.index_of("a"), b = m.index_of("b"), c = m.index_of("c"), d = m.index_of("d"), x = m.index_of("x");
  EXPECT_FALSE(m.middle(x, a, c));
  EXPECT_FALSE(m.middle(x, b, d));
}

TEST(Betweenness, CollinearAndEquilateral) {
  auto facts = betweenness_triples(line_space(3));
  ASSERT_EQ(facts.size(), 1u);
  EXPECT_EQ(facts[0], BetweennessTriple::of(2, 1, 0));
  EXPECT_TRUE(betweenness_triples(equilateral()).empty());
  EXPECT_EQ(hypergraph_of(equilateral()).size(), 0u);
}

TEST(Betweenness, AtMostOneMiddleOnRandomSpaces) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    MetricSpace m = random_metric_space(rng, 3 + i % 5);
    for (const auto& t : all_triples(m.size())) {
      auto [a, b, c] = t.v;
      int count = m.between(b, a, c) + m.between(a, b, c) + m.between(a, c, b);
      EXPECT_LE(count, 1);
    }
  }
}

TEST(HypergraphOf, ChartAndOddCycle) {
  EXPECT_EQ(hypergraph_of(c4()), based_hypergraph(cycle_graph(4)));
  EXPECT_EQ(hypergraph_of(odd_cycle_metric(2)), based_hypergraph(cycle_graph(5)));
}

TEST(Line, ChartLines) {
  MetricSpace m = c4();
  EXPECT_EQ(line(m, "a", "b"), labels({"a", "b", "c", "d", "x"}));
  EXPECT_EQ(line(m, "a", "c"), labels({"a", "b", "c", "d"}));
  EXPECT_EQ(line(m, "a", "x"), labels({"a", "b", "d", "x"}));
  EXPECT_THROW(line(m, 0, 0), std::invalid_argument);
}

TEST(Line, TwoPointSpace) {
  MetricSpace m = validate_metric({"p", "q"}, {{0, 1}, {1, 0}});
  EXPECT_EQ(line(m, "p", "q"), labels({"p", "q"}));
}

TEST(LinePartition, ChartCoreHasTwoBlocks) {
  MetricSpace m = c4();
  PairEquivalence eq = line_partition(m, {0, 1, 2, 3});
  EXPECT_EQ(eq, graph_equivalence(cycle_graph(4)));
}

TEST(LinePartition, CollinearIsOneBlockEquilateralIsThree) {
  EXPECT_EQ(line_partition(line_space(3), {0, 1, 2}).classes().size(), 1u);
  EXPECT_EQ(line_partition(equilateral(), {0, 1, 2}).classes().size(), 3u);
  EXPECT_THROW(line_partition(equilateral(), {0}), std::invalid_argument);
}

TEST(LinePartition, InvariantUnderRelabeling) {
  MetricSpace m = c4();
  std::vector<int> perm = {4, 2, 0, 3, 1};
  DistanceMatrix d(5, std::vector<Rational>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) d[perm[i]][perm[j]] = m.dist(i, j);
  MetricSpace p = validate_metric({"0", "1", "2", "3", "4"}, d);
  std::vector<int> subset;
  for (int i = 0; i < 5; ++i) subset.push_back(perm[i]);
  EXPECT_EQ(line_partition(p, subset), line_partition(m, all_points(m)));
}

TEST(InducedSubspace, RestrictingChartKeepsCoreFacts) {
  MetricSpace m = c4();
  MetricSpace core = induced_subspace(m, std::vector<std::string>{"a", "b", "c", "d"});
  EXPECT_EQ(core.size(), 4);
  EXPECT_EQ(hypergraph_of(core), complete_hypergraph(4));
  EXPECT_EQ(betweenness_triples(core).size(), 4u);
  EXPECT_THROW(induced_subspace(m, std::vector<int>{1}), std::invalid_argument);
  EXPECT_EQ(induced_subspace(m, std::vector<int>{0, 4}).size(), 2);
}

TEST(InducedSubspace, OddCycleWindowRealizesPath) {
  MetricSpace m = induced_subspace(odd_cycle_metric(3), std::vector<std::string>{"0", "1", "2", "3", "x"});
  EXPECT_EQ(hypergraph_of(m), based_hypergraph(path_graph(4)));
}

TEST(InducedSubspace, RestrictionCommutesWithHypergraph) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    MetricSpace m = random_metric_space(rng, 4 + i % 4);
    std::vector<int> keep;
    for (int p = 0; p < m.size(); ++p)
      if (p % 2 == i % 2 || p == 0) keep.push_back(p);
    if (keep.size() < 2) continue;
    EXPECT_EQ(hypergraph_of(induced_subspace(m, keep)), hypergraph_of(m).induced(keep));
  }
}

TEST(CheckMeq, ChartRealizesC4Equivalence) {
  EXPECT_TRUE(check_meq(c4(), {0, 1, 2, 3}, graph_equivalence(cycle_graph(4))));
}

TEST(CheckMeq, CollinearDoesNotRealizeSingletons) {
  PairEquivalence singletons(3, {{{0, 1}}, {{0, 2}}, {{1, 2}}});
  EXPECT_FALSE(check_meq(line_space(3), {0, 1, 2}, singletons));
  EXPECT_THROW(check_meq(line_space(3), {0, 1}, singletons), std::invalid_argument);
}

TEST(CheckMeq, OwnPartitionRoundTrips) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    MetricSpace m = random_metric_space(rng, 3 + i % 5);
    EXPECT_TRUE(check_meq(m, all_points(m), line_partition(m, all_points(m))));
  }
}
