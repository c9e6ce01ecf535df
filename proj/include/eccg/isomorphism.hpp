#pragma once

#include <string>
#include <vector>

#include "eccg/graph.hpp"

namespace eccg {

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> mapping;  // vertex bijection g -> h when isomorphic
};

// Exact isomorphism test, sound and complete. Backtracking over vertices
// ordered by a (degree, neighbor-degree multiset) refinement; returned
// bijections are audited against both graphs before being handed out.
// Intended for n <= 16; larger inputs are allowed but unbounded in time.
IsoResult find_isomorphism(const Graph& g, const Graph& h);

// Brute-force canonical form: the minimum graph6 encoding over all n!
// relabelings. Equal strings iff isomorphic. Throws for n > 10.
std::string canonical_form(const Graph& g);

}  // namespace eccg
