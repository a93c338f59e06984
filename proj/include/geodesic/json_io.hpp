#pragma once

// File formats, all UTF-8 JSON objects:
//
//   metric      {"points": ["a", "b", ...],
//                "dist":   [["0", "1", ...], ...]}
//               Square matrix in point order. Entries are rational strings
//               "p", "-p" or "p/q" (plain JSON integers are accepted on
//               input). The matrix must satisfy the metric axioms.
//   graph       {"n": 6, "edges": [[0, 1], [1, 2], ...]}
//   hypergraph  {"n": 7, "triples": [[0, 1, 2], ...]}
//   verdict     {"verdict": "metric" | "nonmetric",
//                "witness": <metric>,            (metric only)
//                "stats": {"nodes": N, "conflicts": N, "leaves": N, ...}}
//   obstacle    {"status": "certified" | "undetermined" | "inapplicable",
//                "reason": "...", "graph": <graph>,
//                "graph_verdict": <verdict>, "complement_verdict": <verdict>}

#include "geodesic/hypergraph.hpp"
#include "geodesic/metric_space.hpp"
#include "geodesic/obstacles.hpp"
#include "geodesic/rational.hpp"
#include "geodesic/recognizer.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodesic {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object at top level");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

inline int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
  return j.get<int>();
}

inline Rational as_rational(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
  throw FormatError(where + ": expected a rational string");
}

inline std::vector<int> int_tuple(const Json& j, std::size_t arity, const std::string& where) {
  if (!j.is_array() || j.size() != arity)
    throw FormatError(where + ": expected an array of " + std::to_string(arity) + " integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < arity; ++i) out.push_back(as_int(j[i], where));
  return out;
}

}  // namespace detail

// Parses text, turning syntax errors into FormatError with a line number.
inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) line += text[i] == '\n';
    throw FormatError("JSON syntax error on line " + std::to_string(line) + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

inline Json to_json(const MetricSpace& m) {
  Json dist = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m.dist(i, j)));
    dist.push_back(std::move(row));
  }
  return {{"points", m.labels()}, {"dist", std::move(dist)}};
}

inline Json to_json(const DistanceChart& c) {
  Json dist = Json::array();
  for (const auto& r : c.dist) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(to_string(v));
    dist.push_back(std::move(row));
  }
  return {{"points", c.points}, {"dist", std::move(dist)}};
}

// Checks shape only; see metric_from_json for the axioms.
inline DistanceChart chart_from_json(const Json& j) {
  const Json& pts = detail::field(j, "points");
  const Json& dist = detail::field(j, "dist");
  if (!pts.is_array()) throw FormatError("points: expected an array of strings");
  DistanceChart c;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].is_string()) throw FormatError("points[" + std::to_string(i) + "]: expected a string");
    c.points.push_back(pts[i].get<std::string>());
  }
  if (!dist.is_array() || dist.size() != c.points.size())
    throw FormatError("dist: expected " + std::to_string(c.points.size()) + " rows");
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const std::string where = "dist[" + std::to_string(i) + "]";
    if (!dist[i].is_array() || dist[i].size() != c.points.size())
      throw FormatError(where + ": expected " + std::to_string(c.points.size()) + " entries");
    std::vector<Rational> row;
    for (std::size_t k = 0; k < dist[i].size(); ++k)
      row.push_back(detail::as_rational(dist[i][k], where + "[" + std::to_string(k) + "]"));
    c.dist.push_back(std::move(row));
  }
  return c;
}

inline MetricSpace metric_from_json(const Json& j) {
  DistanceChart c = chart_from_json(j);
  try {
    return validate_metric(c.points, c.dist);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.a, e.b});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
  int n = detail::as_int(detail::field(j, "n"), "n");
  const Json& edges = detail::field(j, "edges");
  if (!edges.is_array()) throw FormatError("edges: expected an array");
  std::vector<Pair> e;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto t = detail::int_tuple(edges[i], 2, "edges[" + std::to_string(i) + "]");
    e.push_back({t[0], t[1]});
  }
  try {
    return Graph(n, std::move(e));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(ex.what());
  }
}

inline Json to_json(const Hypergraph3& h) {
  Json triples = Json::array();
  for (const auto& t : h.triples()) triples.push_back({t.v[0], t.v[1], t.v[2]});
  return {{"n", h.vertex_count()}, {"triples", std::move(triples)}};
}

inline Hypergraph3 hypergraph_from_json(const Json& j) {
  int n = detail::as_int(detail::field(j, "n"), "n");
  const Json& triples = detail::field(j, "triples");
  if (!triples.is_array()) throw FormatError("triples: expected an array");
  std::vector<Triple> t;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    auto v = detail::int_tuple(triples[i], 3, "triples[" + std::to_string(i) + "]");
    t.push_back(Triple{{v[0], v[1], v[2]}});
  }
  try {
    return Hypergraph3(n, std::move(t));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(ex.what());
  }
}

inline Json to_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"conflicts", s.total_conflicts()},
          {"leaves", s.leaves},
          {"leaf_infeasible", s.leaf_infeasible},
          {"relaxation_calls", s.relaxation_calls},
          {"core_size", s.core_size},
          {"core_orders", s.core_orders},
          {"conflicts_by_cause", s.conflicts}};
}

inline Json to_json(const Verdict& v) {
  Json j = {{"verdict", v.metric ? "metric" : "nonmetric"}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  j["stats"] = to_json(v.stats);
  return j;
}

inline Json to_json(const ObstacleOutcome& o) {
  Json j = {{"status", to_string(o.status)}};
  if (!o.reason.empty()) j["reason"] = o.reason;
  if (o.certificate) {
    j["graph"] = to_json(o.certificate->graph);
    j["graph_verdict"] = to_json(o.certificate->graph_verdict);
    j["complement_verdict"] = to_json(o.certificate->complement_verdict);
  }
  return j;
}

}  // namespace geodesic
