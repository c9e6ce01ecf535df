#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eccg/graph.hpp"

namespace eccg {

// True iff connected with exactly n-1 edges (n >= 1).
bool is_tree(const Graph& g);

// Iterative leaf stripping; returns the one or two remaining vertices,
// sorted. Throws on non-tree input.
std::vector<int> tree_centers(const Graph& t);

// The partition of a two-center tree induced by its center bridge c1c2:
// v1/v2 are the components after cutting the bridge (c1 in v1), u1/u2 the
// diametrical vertices on each side, tc1/tc2 the non-diametrical rest.
struct TwoCenterDecomposition {
  int n = 0;
  int c1 = -1, c2 = -1;
  std::vector<int> v1, v2;
  std::vector<int> u1, u2;
  std::vector<int> tc1, tc2;
};

// Requires a tree with exactly two centers.
TwoCenterDecomposition two_center_decomposition(const Graph& t);

// Graph on the same labels with exactly the edges
// tc1 x u2, u2 x u1, u1 x tc2. Empty tc parts contribute nothing, so the
// two-vertex tree degenerates to a single edge.
Graph predicted_two_center_ecc(const TwoCenterDecomposition& dec);

struct LeafTriple {
  int x = -1, y = -1, z = -1;
};

// For a one-center tree: the lexicographically least triple of diametrical
// leaves with pairwise distance equal to the diameter, if any. Throws on
// two-center trees.
std::optional<LeafTriple> diametrical_leaf_triple(const Graph& t);

namespace detail {

// Canonical level sequences of rooted trees (root at level 0, subtrees in
// nonincreasing lexicographic order), enumerated in decreasing
// lexicographic order by the classic successor rule: locate the last
// entry p with level >= 2 and its parent position q, then repeat the
// segment [q, p) cyclically to the end.
class RootedLevelSequences {
 public:
  explicit RootedLevelSequences(int n);
  bool next();  // false once exhausted
  const std::vector<int>& seq() const { return seq_; }

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> seq_;
};

// Accepts exactly one rooted representative per free tree: the root must
// be a center. With H the height and h2 the depth reached outside the
// first root branch, either h2 == H (even diameter, unique center) or
// h2 == H-1 (odd diameter; the root's side of the center bridge must
// compare lexicographically >= the side hanging below the first child).
bool is_center_rooted(const std::vector<int>& seq);

Graph graph_from_level_sequence(const std::vector<int>& seq);

}  // namespace detail

// One representative per isomorphism class of trees on n vertices,
// deterministic order. 1 <= n <= 18.
class FreeTreeIterator {
 public:
  explicit FreeTreeIterator(int n);
  std::optional<Graph> next();

 private:
  detail::RootedLevelSequences rooted_;
};

void for_each_free_tree(int n, const std::function<void(const Graph&)>& fn);

// Every labeled connected simple graph on n vertices exactly once,
// by edge-subset scan. 1 <= n <= 7.
void for_each_connected_graph(int n,
                              const std::function<void(const Graph&)>& fn);

// Edge subset -> graph; bit k of `mask` is pair k in column order
// (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_edge_mask(int n, std::uint64_t mask);

}  // namespace eccg
