#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccg/graph.hpp"
#include "eccg/graph6.hpp"

namespace fixtures {

inline std::string read_file(const std::string& name) {
  std::ifstream in(std::string(ECC_FIXTURE_DIR) + "/" + name,
                   std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline eccg::Graph load(const std::string& name) {
  return eccg::parse_graph_auto(read_file(name));
}

// The pinned 7-vertex counterexample: its eccentric graph equals its
// complement although two eccentricity-3 vertices share a neighbor.
inline const std::vector<eccg::Edge>& counterexample7_edges() {
  static const std::vector<eccg::Edge> edges{{0, 3}, {0, 6}, {6, 4}, {6, 5},
                                             {4, 5}, {3, 6}, {4, 2}, {5, 1}};
  return edges;
}

inline eccg::Graph counterexample7() {
  return eccg::Graph::from_edges(7, counterexample7_edges());
}

// 15-vertex two-center tree used by the structure checks.
inline const std::vector<eccg::Edge>& bicentral15_edges() {
  static const std::vector<eccg::Edge> edges{
      {0, 1}, {1, 3}, {1, 4}, {0, 2}, {2, 5},  {2, 6},   {2, 7},
      {0, 8}, {8, 9}, {8, 10}, {8, 11}, {8, 12}, {12, 13}, {12, 14}};
  return edges;
}

inline eccg::Graph bicentral15() {
  return eccg::Graph::from_edges(15, bicentral15_edges());
}

}  // namespace fixtures
