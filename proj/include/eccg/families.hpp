#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "eccg/graph.hpp"

namespace eccg {

enum class Family {
  path,
  cycle,
  star,
  complete,
  complete_bipartite,
  double_star,
  sstar,
  grid,
};

struct FamilySpec {
  Family family;
  std::vector<int> params;
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// Dispatches to the named builder below. Validates parameter arity
// (path/cycle/star/complete take one parameter, the rest take two) and
// rejects parameters that would produce an empty vertex set.
Graph generate(const FamilySpec& spec);

Graph path_graph(int n);                   // vertices 0..n-1 in path order
Graph cycle_graph(int n);                  // n >= 3
Graph star_graph(int n);                   // n vertices: center 0, leaves 1..n-1
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);    // first part 0..a-1, then a..a+b-1
Graph double_star(int a, int b);           // adjacent centers 0,1; a leaves on 0, b on 1
Graph sstar(int a, int b);                 // triangle 0,1,2; a pendants on 0, b on 1
Graph grid_graph(int rows, int cols);      // row-major labels, unit edges

// Coclique extension of the 4-path: four independent parts in path order,
// consecutive parts joined completely. All part sizes must be >= 1.
struct MixedExtensionSpec {
  int p1, p2, p3, p4;
};
Graph mixed_extension_p4(const MixedExtensionSpec& spec);

}  // namespace eccg
