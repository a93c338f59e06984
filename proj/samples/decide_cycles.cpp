// Decides the based hypergraph of C_n for n = 3..8 and prints the witness
// distances for the metric ones.

#include "geodesic/constructions.hpp"
#include "geodesic/recognizer.hpp"

#include <iostream>

int main() {
  using namespace geodesic;
  for (int n = 3; n <= 8; ++n) {
    Verdict v = decide_metric(based_hypergraph(cycle_graph(n)));
    std::cout << "C" << n << ": " << (v.metric ? "metric" : "non-metric") << "  (" << v.stats.nodes
              << " nodes, " << v.stats.total_conflicts() << " conflicts)\n";
    if (!v.witness) continue;
    const MetricSpace& m = *v.witness;
    for (int i = 0; i < m.size(); ++i) {
      std::cout << "   ";
      for (int j = 0; j < m.size(); ++j) std::cout << " " << to_string(m.dist(i, j));
      std::cout << "\n";
    }
  }
}
