#include "eccg/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace eccg {

namespace {

int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::vector<std::uint64_t> bits)
    : n_(n), wpr_(words_for(n)), bits_(std::move(bits)) {
  std::size_t ones = 0;
  for (std::uint64_t w : bits_) ones += std::popcount(w);
  m_ = ones / 2;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  const int wpr = words_for(n);
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(n) * wpr, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("invalid edge " + pair_str(u, v) +
                                  ": index out of range for n=" + std::to_string(n));
    if (u == v)
      throw std::invalid_argument("invalid edge " + pair_str(u, v) + ": self-loop");
    bits[static_cast<std::size_t>(u) * wpr + (v >> 6)] |= 1ull << (v & 63);
    bits[static_cast<std::size_t>(v) * wpr + (u >> 6)] |= 1ull << (u & 63);
  }
  return Graph(n, std::move(bits));
}

Graph Graph::from_bitrows(int n, std::vector<std::uint64_t> rows) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  const int wpr = words_for(n);
  if (rows.size() != static_cast<std::size_t>(n) * wpr)
    throw std::invalid_argument("bit rows have the wrong size");
  Graph g(n, std::move(rows));
  for (int v = 0; v < n; ++v) {
    if (g.has_edge(v, v))
      throw std::invalid_argument("invalid adjacency: self-loop at vertex " +
                                  std::to_string(v));
    // padding bits beyond n must stay clear
    if (n & 63) {
      std::uint64_t pad = g.row(v).back() >> (n & 63);
      if (pad != 0)
        throw std::invalid_argument("invalid adjacency: nonzero padding bits");
    }
    for (int u = 0; u < v; ++u)
      if (g.has_edge(u, v) != g.has_edge(v, u))
        throw std::invalid_argument("invalid adjacency: asymmetric pair " +
                                    pair_str(u, v));
  }
  return g;
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int wi = 0; wi < wpr_; ++wi) {
    std::uint64_t w = r[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(wi * 64 + b);
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  const int wpr = g.words_per_row();
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(n) * wpr, 0);
  for (int v = 0; v < n; ++v) {
    auto r = g.row(v);
    for (int wi = 0; wi < wpr; ++wi)
      bits[static_cast<std::size_t>(v) * wpr + wi] = ~r[wi];
    // clear the diagonal and the padding
    bits[static_cast<std::size_t>(v) * wpr + (v >> 6)] &= ~(1ull << (v & 63));
    if (n & 63)
      bits[static_cast<std::size_t>(v) * wpr + wpr - 1] &=
          (~0ull) >> (64 - (n & 63));
  }
  return Graph::from_bitrows(n, std::move(bits));
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  std::vector<Edge> es;
  es.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(n, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  const int off = a.vertex_count();
  for (const auto& [u, v] : b.edges()) es.emplace_back(u + off, v + off);
  return Graph::from_edges(off + b.vertex_count(), es);
}

namespace {

// Word-parallel BFS reach; returns the visited mask.
std::vector<std::uint64_t> reach_from(const Graph& g, int src) {
  const int wpr = g.words_per_row();
  std::vector<std::uint64_t> visited(wpr, 0), frontier(wpr, 0), next(wpr, 0);
  visited[src >> 6] |= 1ull << (src & 63);
  frontier[src >> 6] |= 1ull << (src & 63);
  for (;;) {
    std::fill(next.begin(), next.end(), 0);
    bool grew = false;
    for (int wi = 0; wi < wpr; ++wi) {
      std::uint64_t w = frontier[wi];
      while (w) {
        int v = wi * 64 + std::countr_zero(w);
        w &= w - 1;
        auto r = g.row(v);
        for (int k = 0; k < wpr; ++k) next[k] |= r[k];
      }
    }
    for (int k = 0; k < wpr; ++k) {
      next[k] &= ~visited[k];
      if (next[k]) grew = true;
      visited[k] |= next[k];
    }
    if (!grew) return visited;
    std::swap(frontier, next);
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  auto visited = reach_from(g, 0);
  int count = 0;
  for (std::uint64_t w : visited) count += std::popcount(w);
  return count == n;
}

int component_count(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  int comps = 0;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++comps;
    auto visited = reach_from(g, v);
    for (int wi = 0; wi < g.words_per_row(); ++wi) {
      std::uint64_t w = visited[wi];
      while (w) {
        seen[wi * 64 + std::countr_zero(w)] = true;
        w &= w - 1;
      }
    }
  }
  return comps;
}

}  // namespace eccg
