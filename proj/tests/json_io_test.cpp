#include "geodesic/constructions.hpp"
#include "geodesic/json_io.hpp"
#include "geodesic/random_spaces.hpp"

#include <gtest/gtest.h>

using namespace geodesic;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(JsonRoundTrip, RandomMetrics) {
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    MetricSpace m = random_metric_space(rng, 2 + i % 7);
    Json j = parse_json_text(to_json(m).dump());
    MetricSpace back = metric_from_json(j);
    EXPECT_EQ(back.labels(), m.labels());
    for (int p = 0; p < m.size(); ++p)
      for (int q = 0; q < m.size(); ++q) EXPECT_EQ(back.dist(p, q), m.dist(p, q));
  }
}

TEST(JsonRoundTrip, GraphsAndHypergraphs) {
  Rng rng(62);
  for (int i = 0; i < 100; ++i) {
    Hypergraph3 h = random_hypergraph(rng, 3 + i % 6);
    EXPECT_EQ(hypergraph_from_json(parse_json_text(to_json(h).dump())), h);
  }
  for (const Graph& g : {cycle_graph(6), house_graph(), Graph(3)})
    EXPECT_EQ(graph_from_json(to_json(g)), g);
}

TEST(JsonMetric, AcceptsIntegersAndFractions) {
  Json j = parse_json_text(R"({"points": ["p", "q"], "dist": [[0, "3/2"], ["3/2", "0"]]})");
  MetricSpace m = metric_from_json(j);
  EXPECT_EQ(m.dist(0, 1), Rational(3, 2));
  EXPECT_EQ(to_json(m)["dist"][0][1], "3/2");
}

TEST(JsonMetric, RejectsBadShapes) {
  EXPECT_THROW(metric_from_json(Json::array()), FormatError);
  EXPECT_THROW(metric_from_json(parse_json_text(R"({"points": ["a"]})")), FormatError);
  EXPECT_THROW(metric_from_json(parse_json_text(R"({"points": ["a","b"], "dist": [["0","1"]]})")), FormatError);
  EXPECT_THROW(metric_from_json(parse_json_text(R"({"points": ["a","b"], "dist": [["0","1"],["1"]]})")),
               FormatError);
  EXPECT_THROW(metric_from_json(parse_json_text(R"({"points": ["a","a"], "dist": [["0","1"],["1","0"]]})")),
               FormatError);
}

TEST(JsonMetric, ErrorsCarryThePath) {
  std::string msg = error_of([] {
    metric_from_json(parse_json_text(R"({"points": ["a","b"], "dist": [["0","1"],["x","0"]]})"));
  });
  EXPECT_NE(msg.find("dist[1][0]"), std::string::npos) << msg;
  msg = error_of([] { metric_from_json(parse_json_text(R"({"points": ["a","b"], "dist": [["0",1.5],["1","0"]]})")); });
  EXPECT_NE(msg.find("dist[0][1]"), std::string::npos) << msg;
}

TEST(JsonMetric, AxiomViolationsAreMetricErrors) {
  Json asym = parse_json_text(R"({"points": ["a","b"], "dist": [["0","1"],["2","0"]]})");
  EXPECT_THROW(metric_from_json(asym), MetricError);
  Json tri = parse_json_text(
      R"({"points": ["a","b","c"], "dist": [["0","1","3"],["1","0","1"],["3","1","0"]]})");
  std::string msg = error_of([&] { metric_from_json(tri); });
  EXPECT_NE(msg.find("triangle"), std::string::npos) << msg;
}

TEST(JsonText, SyntaxErrorReportsLine) {
  std::string msg = error_of([] { parse_json_text("{\n  \"n\": 3,\n  \"edges\": [[0, 1],\n}"); });
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), FormatError);
}

TEST(JsonGraph, RejectsBadInput) {
  EXPECT_THROW(graph_from_json(parse_json_text(R"({"n": 3, "edges": [[0, 0]]})")), FormatError);
  EXPECT_THROW(graph_from_json(parse_json_text(R"({"n": 3, "edges": [[0, 5]]})")), FormatError);
  EXPECT_THROW(graph_from_json(parse_json_text(R"({"n": 3, "edges": [[0]]})")), FormatError);
  EXPECT_THROW(graph_from_json(parse_json_text(R"({"n": "3", "edges": []})")), FormatError);
  EXPECT_THROW(hypergraph_from_json(parse_json_text(R"({"n": 4, "triples": [[0, 1, 1]]})")), FormatError);
  EXPECT_THROW(hypergraph_from_json(parse_json_text(R"({"n": 4, "triples": [[0, 1, 2], [2, 1, 0]]})")),
               FormatError);
}

TEST(JsonVerdict, Contents) {
  Json metric = to_json(decide_metric(based_hypergraph(cycle_graph(5))));
  EXPECT_EQ(metric["verdict"], "metric");
  ASSERT_TRUE(metric.contains("witness"));
  EXPECT_EQ(metric["witness"]["points"].size(), 6u);
  EXPECT_TRUE(metric["stats"]["nodes"].is_number_integer());

  Json non = to_json(decide_metric(based_hypergraph(cycle_graph(6))));
  EXPECT_EQ(non["verdict"], "nonmetric");
  EXPECT_FALSE(non.contains("witness"));
  EXPECT_GT(non["stats"]["conflicts"].get<long long>(), 0);
}

TEST(JsonObstacle, Contents) {
  Json c6 = to_json(certify_obstacle(cycle_graph(6)));
  EXPECT_EQ(c6["status"], "certified");
  EXPECT_EQ(c6["graph_verdict"]["verdict"], "nonmetric");
  EXPECT_EQ(c6["complement_verdict"]["verdict"], "nonmetric");
  Json c4 = to_json(certify_obstacle(cycle_graph(4)));
  EXPECT_EQ(c4["status"], "undetermined");
  EXPECT_FALSE(c4.contains("graph"));
}
