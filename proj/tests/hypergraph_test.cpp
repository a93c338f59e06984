#include "geodesic/canonical.hpp"
#include "geodesic/hypergraph.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace geodesic;

TEST(Ranks, PairAndTripleRanksAreDenseAndInvertible) {
  std::set<int> seen;
  for (int c = 2; c < 9; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) {
        int r = triple_rank(a, b, c);
        EXPECT_TRUE(seen.insert(r).second);
        EXPECT_EQ(triple_at(r), Triple::of(c, a, b));
        EXPECT_EQ(triple_rank(c, a, b), r);
      }
  EXPECT_EQ(int(seen.size()), triple_count(9));
  EXPECT_EQ(*seen.rbegin(), triple_count(9) - 1);
  EXPECT_EQ(pair_count(6), 15);
  EXPECT_EQ(pair_rank(1, 0), pair_rank(0, 1));
}

TEST(Hypergraph3, RejectsBadTriples) {
  EXPECT_THROW(Hypergraph3(3, {Triple{{0, 1, 3}}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph3(3, {Triple{{0, 1, 1}}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph3(-1), std::invalid_argument);
}

TEST(Hypergraph3, RejectsDuplicates) {
  EXPECT_THROW(Hypergraph3(4, {Triple{{2, 1, 0}}, Triple{{0, 1, 2}}}), std::invalid_argument);
}

TEST(Hypergraph3, NormalizesAndSorts) {
  Hypergraph3 h(4, {Triple{{3, 2, 1}}, Triple{{2, 1, 0}}});
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(h.triples().front(), Triple::of(0, 1, 2));
  EXPECT_TRUE(h.contains(3, 2, 1));
  EXPECT_FALSE(h.contains(0, 1, 3));
}

TEST(Hypergraph3, InducedRelabelsByPosition) {
  Hypergraph3 h(5, {Triple::of(1, 3, 4), Triple::of(0, 1, 2)});
  Hypergraph3 sub = h.induced({4, 3, 1});
  EXPECT_EQ(sub, Hypergraph3(3, {Triple::of(0, 1, 2)}));
  EXPECT_EQ(h.without_vertex(0), Hypergraph3(4, {Triple::of(0, 2, 3)}));
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(BasedHypergraph, CountsForC4AndC6) {
  Hypergraph3 c4 = based_hypergraph(cycle_graph(4));
  EXPECT_EQ(c4.vertex_count(), 5);
  EXPECT_EQ(c4.size(), 8u);
  Hypergraph3 c6 = based_hypergraph(cycle_graph(6));
  EXPECT_EQ(c6.vertex_count(), 7);
  EXPECT_EQ(c6.size(), 26u);
  EXPECT_EQ(BasedHypergraph{cycle_graph(6)}.apex(), 6);
}

TEST(BasedHypergraph, EdgelessGraphLeavesApexIsolated) {
  Hypergraph3 h = based_hypergraph(Graph(3));
  EXPECT_EQ(h, Hypergraph3(4, {Triple::of(0, 1, 2)}));
}

TEST(BasedHypergraph, ApexTriplesAreExactlyTheEdges) {
  Graph g = cycle_graph(5);
  Hypergraph3 h = based_hypergraph(g);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) EXPECT_EQ(h.contains(u, v, 5), g.adjacent(u, v));
}

TEST(GraphEquivalence, TwoBlocksOrOne) {
  auto c4 = graph_equivalence(cycle_graph(4));
  ASSERT_EQ(c4.classes().size(), 2u);
  EXPECT_TRUE(c4.equivalent({0, 1}, {2, 3}));
  EXPECT_TRUE(c4.equivalent({0, 2}, {1, 3}));
  EXPECT_FALSE(c4.equivalent({0, 1}, {0, 2}));

  EXPECT_EQ(graph_equivalence(complete_graph(4)).classes().size(), 1u);
  EXPECT_EQ(graph_equivalence(Graph(4)).classes().size(), 1u);

  auto c6 = graph_equivalence(cycle_graph(6));
  std::multiset<std::size_t> sizes;
  for (const auto& b : c6.classes()) sizes.insert(b.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{6, 9}));
}

TEST(PairEquivalence, RejectsNonPartitions) {
  EXPECT_THROW(PairEquivalence(3, {{{0, 1}}, {{0, 2}}}), std::invalid_argument);
  EXPECT_THROW(PairEquivalence(3, {{{0, 1}, {0, 2}}, {{1, 2}, {0, 1}}}), std::invalid_argument);
  EXPECT_THROW(PairEquivalence(3, {{{0, 1}, {0, 2}, {1, 2}}, {}}), std::invalid_argument);
}

TEST(PairEquivalence, EqualityIgnoresBlockOrder) {
  PairEquivalence a(3, {{{0, 1}}, {{0, 2}, {1, 2}}});
  PairEquivalence b(3, {{{1, 2}, {0, 2}}, {{0, 1}}});
  EXPECT_EQ(a, b);
}

TEST(Complement, EdgeCountsAndTriangles) {
  Graph p5c = complement(path_graph(5));
  EXPECT_EQ(p5c.edges().size(), 6u);
  Graph c6c = complement(cycle_graph(6));
  EXPECT_TRUE(c6c.adjacent(0, 2) && c6c.adjacent(2, 4) && c6c.adjacent(0, 4));
  EXPECT_EQ(complement(complement(cycle_graph(7))), cycle_graph(7));
}

TEST(Complement, C5IsSelfComplementary) {
  // Compare based hypergraphs up to isomorphism.
  EXPECT_TRUE(isomorphic(based_hypergraph(complement(cycle_graph(5))), based_hypergraph(cycle_graph(5))));
  EXPECT_FALSE(isomorphic(based_hypergraph(complement(path_graph(4))), based_hypergraph(cycle_graph(4))));
}
