// Reads a metric file and, if the listed points are collinear, prints
// them in line order.
//
//   collinear_order samples/data/line5.json

#include "geodesic/json_io.hpp"
#include "geodesic/properties.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace geodesic;
  if (argc != 2) {
    std::cerr << "usage: collinear_order METRIC.json\n";
    return 2;
  }
  try {
    MetricSpace m = metric_from_json(read_json_file(argv[1]));
    auto order = recover_linear_order(m, all_points(m));
    if (!order) {
      std::cout << "no linear order\n";
      return 1;
    }
    for (int p : *order) std::cout << m.label(p) << " ";
    std::cout << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
