// geodesic: command-line front end.
//
// Exit codes: 0 success (decide: metric), 10 decide: nonmetric,
// 1 verify-paper: some claim failed, 2 usage, input or range error.

#include "geodesic/constructions.hpp"
#include "geodesic/enumerate.hpp"
#include "geodesic/json_io.hpp"
#include "geodesic/metric_space.hpp"
#include "geodesic/obstacles.hpp"
#include "geodesic/recognizer.hpp"
#include "geodesic/replay.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

namespace fs = std::filesystem;
using namespace geodesic;

namespace {

constexpr int kExitMetric = 0;
constexpr int kExitNonMetric = 10;
constexpr int kExitClaimFailed = 1;
constexpr int kExitError = 2;

struct Output {
  bool compact = false;
  std::string path;  // empty: stdout

  void emit(const Json& j) const {
    std::string text = compact ? j.dump() : j.dump(2);
    if (path.empty()) {
      std::cout << text << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << text << "\n";
  }
};

Json analyze(const MetricSpace& m) {
  Json facts = Json::array();
  for (const auto& b : betweenness_triples(m)) facts.push_back(to_string(m, b));

  Json lines = Json::array();
  for (int p = 0; p < m.size(); ++p)
    for (int q = p + 1; q < m.size(); ++q) {
      Json pts = Json::array();
      for (int z : line(m, p, q)) pts.push_back(m.label(z));
      lines.push_back({{"pair", {m.label(p), m.label(q)}}, {"line", std::move(pts)}});
    }

  Json blocks = Json::array();
  if (m.size() >= 2) {
    PairEquivalence partition = line_partition(m, all_points(m));
    for (const auto& block : partition.classes()) {
      Json b = Json::array();
      for (const auto& pr : block) b.push_back({m.label(pr.a), m.label(pr.b)});
      blocks.push_back(std::move(b));
    }
  }

  return {{"points", m.labels()},
          {"betweenness", std::move(facts)},
          {"hypergraph", to_json(hypergraph_of(m))},
          {"lines", std::move(lines)},
          {"line_partition", std::move(blocks)}};
}

MetricSpace construct(const std::string& name, int s, int k) {
  if (name == "odd-cycle") return odd_cycle_metric(s);
  if (name == "path") return path_based_metric(k);
  if (name == "c4") return c4_based_metric();
  if (name == "p5bar-minus-a") return p5bar_minus_a_metric();
  throw std::invalid_argument("unknown construction '" + name + "'");
}

int enumerate(int n, double budget, const std::string& dir, const DecideOptions& opts, const Output& out) {
  EnumerationResult r = enumerate_minimal_nonmetric(n, std::chrono::duration<double>(budget), opts);
  Json index = {{"n", n},
                {"truncated", r.truncated},
                {"classes_total", r.classes_total},
                {"classes_examined", r.classes_examined},
                {"count", r.minimal_nonmetric.size()},
                {"files", Json::array()}};
  if (!dir.empty()) fs::create_directories(dir);
  for (std::size_t i = 0; i < r.minimal_nonmetric.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "n%d_%04zu.json", n, i);
    index["files"].push_back(name);
    if (!dir.empty()) Output{out.compact, (fs::path(dir) / name).string()}.emit(to_json(r.minimal_nonmetric[i]));
  }
  if (!dir.empty()) Output{out.compact, (fs::path(dir) / "index.json").string()}.emit(index);
  out.emit(index);
  return kExitMetric;
}

int verify(const std::string& claim, const DecideOptions& opts, bool as_json, const Output& out) {
  if (!claim.empty()) {
    bool known = false;
    for (const auto& c : replay_manifest()) known = known || c.id == claim;
    if (!known) throw std::invalid_argument("unknown claim '" + claim + "'");
  }
  ReplayHooks hooks;
  hooks.decide = opts;
  auto progress = [&](const ReplayEntry& e) {
    if (as_json) return;
    std::cout << (e.pass ? "PASS " : "FAIL ") << std::left << std::setw(26) << e.id << std::right
              << std::fixed << std::setprecision(3) << std::setw(9) << e.elapsed_seconds << " s  "
              << e.detail << std::endl;
  };
  ReplayReport report = run_replay(hooks, claim, progress);
  if (as_json) {
    Json entries = Json::array();
    for (const auto& e : report.entries)
      entries.push_back({{"id", e.id},
                         {"statement", e.statement},
                         {"criterion", e.criterion},
                         {"pass", e.pass},
                         {"elapsed_seconds", e.elapsed_seconds},
                         {"detail", e.detail}});
    out.emit({{"all_passed", report.all_passed()}, {"claims", std::move(entries)}});
  } else {
    std::size_t passed = 0;
    for (const auto& e : report.entries) passed += e.pass;
    std::cout << passed << "/" << report.entries.size() << " claims passed" << std::endl;
  }
  return report.all_passed() ? kExitMetric : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric hypergraphs: recognition, constructions and obstacles"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--compact", out.compact, "Single-line JSON output");
  app.add_option("-o,--output", out.path, "Write JSON to this file instead of stdout");

  DecideOptions opts;
  opts.threads = default_thread_count();
  bool no_prune = false, no_core = false;
  auto search_flags = [&](CLI::App* sub) {
    sub->add_flag("--no-prune", no_prune, "Disable relaxation pruning");
    sub->add_option("--prune-every", opts.prune_every, "Decisions between relaxation checks")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--no-core-order", no_core, "Branch on core triples one at a time");
    sub->add_option("--threads", opts.threads, "Worker threads (default: GEODESIC_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  };

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Betweenness, lines and line partition of a metric file");
  analyze_cmd->add_option("file", file, "Metric JSON")->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether a hypergraph is metric");
  decide_cmd->add_option("file", file, "Hypergraph JSON")->required();
  decide_cmd->add_flag("--naive", opts.naive, "Enumerate every orientation without propagation");
  search_flags(decide_cmd);

  std::string name;
  int s = 0, k = 0;
  auto* construct_cmd = app.add_subcommand("construct", "Emit one of the explicit realizations");
  construct_cmd->add_option("name", name, "odd-cycle | path | c4 | p5bar-minus-a")
      ->required()
      ->check(CLI::IsMember({"odd-cycle", "path", "c4", "p5bar-minus-a"}));
  construct_cmd->add_option("--s", s, "odd-cycle: cycle length 2s+1");
  construct_cmd->add_option("--k", k, "path: number of path vertices");

  auto* obstacle_cmd = app.add_subcommand("obstacle", "Certify the two-class equivalence of a graph as an obstacle");
  obstacle_cmd->add_option("file", file, "Graph JSON")->required();
  search_flags(obstacle_cmd);

  int n = 0;
  double budget = 600;
  std::string dir;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Catalog minimal nonmetric hypergraphs on n vertices");
  enumerate_cmd->add_option("n", n, "Vertex count, 3..6")->required();
  enumerate_cmd->add_option("--budget", budget, "Time budget in seconds")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--dir", dir, "Catalog directory (one file per hypergraph plus index.json)");
  search_flags(enumerate_cmd);

  std::string claim;
  bool as_json = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Replay every claim of the acceptance manifest");
  verify_cmd->add_option("--claim", claim, "Run only the claim with this id");
  verify_cmd->add_flag("--json", as_json, "Print the report as JSON");
  search_flags(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  opts.relaxation_pruning = !no_prune;
  opts.core_order_branching = !no_core;

  try {
    if (*analyze_cmd) {
      out.emit(analyze(metric_from_json(read_json_file(file))));
      return kExitMetric;
    }
    if (*decide_cmd) {
      Verdict v = decide_metric(hypergraph_from_json(read_json_file(file)), opts);
      out.emit(to_json(v));
      return v.metric ? kExitMetric : kExitNonMetric;
    }
    if (*construct_cmd) {
      out.emit(to_json(construct(name, s, k)));
      return kExitMetric;
    }
    if (*obstacle_cmd) {
      out.emit(to_json(certify_obstacle(graph_from_json(read_json_file(file)), opts)));
      return kExitMetric;
    }
    if (*enumerate_cmd) return enumerate(n, budget, dir, opts, out);
    if (*verify_cmd) return verify(claim, opts, as_json, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
