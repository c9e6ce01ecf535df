#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace eccg {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1, adjacency kept as
// one bit row per vertex. All algorithms in this library take graphs
// read-only, so values can be shared freely across threads.
class Graph {
 public:
  Graph() = default;

  // Symmetric closure of `edges`; duplicates collapse. Throws
  // std::invalid_argument naming the offending pair on a self-loop or an
  // out-of-range index.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  // Adopts prebuilt rows (n rows of ceil(n/64) words). Validates the
  // diagonal is empty, the matrix is symmetric and padding bits are clear.
  static Graph from_bitrows(int n, std::vector<std::uint64_t> rows);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }
  int words_per_row() const { return wpr_; }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * wpr_,
            static_cast<std::size_t>(wpr_)};
  }

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;           // sorted, u < v
  std::vector<int> degree_sequence() const;  // ascending

  // Labeled equality: same n and identical adjacency.
  bool operator==(const Graph&) const = default;

 private:
  Graph(int n, std::vector<std::uint64_t> bits);

  int n_ = 0;
  int wpr_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline bool edge_set_equal(const Graph& a, const Graph& b) { return a == b; }

Graph complement(const Graph& g);

// Relabels: vertex v becomes perm[v]. perm must be a bijection on 0..n-1.
Graph permuted(const Graph& g, std::span<const int> perm);

Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

}  // namespace eccg
