#include "eccg/trees.hpp"

#include <algorithm>
#include <stdexcept>

#include "eccg/metrics.hpp"

namespace eccg {

bool is_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) return false;
  if (g.edge_count() != static_cast<std::size_t>(n) - 1) return false;
  return is_connected(g);
}

std::vector<int> tree_centers(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_centers requires a tree");
  const int n = t.vertex_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> nxt;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int w : t.neighbors(v))
        if (!removed[w] && --deg[w] == 1) nxt.push_back(w);
    }
    layer = std::move(nxt);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

TwoCenterDecomposition two_center_decomposition(const Graph& t) {
  auto centers = tree_centers(t);  // validates tree input
  if (centers.size() != 2)
    throw std::invalid_argument("decomposition requires two centers");
  const int n = t.vertex_count();
  TwoCenterDecomposition dec;
  dec.n = n;
  dec.c1 = centers[0];
  dec.c2 = centers[1];

  // side of c1 after cutting the center bridge
  std::vector<bool> side1(n, false);
  side1[dec.c1] = true;
  std::vector<int> stack{dec.c1};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(v)) {
      if (v == dec.c1 && w == dec.c2) continue;
      if (!side1[w]) {
        side1[w] = true;
        stack.push_back(w);
      }
    }
  }

  auto prof = eccentricity_profile(t);
  for (int v = 0; v < n; ++v) {
    bool diam = prof.eccentricity[v] == prof.diameter;
    if (side1[v]) {
      dec.v1.push_back(v);
      (diam ? dec.u1 : dec.tc1).push_back(v);
    } else {
      dec.v2.push_back(v);
      (diam ? dec.u2 : dec.tc2).push_back(v);
    }
  }
  if (dec.u1.empty() || dec.u2.empty())
    throw std::logic_error("two-center tree without diametrical vertices on a side");
  return dec;
}

Graph predicted_two_center_ecc(const TwoCenterDecomposition& dec) {
  std::vector<Edge> es;
  auto join = [&es](const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
      for (int v : b) es.emplace_back(u, v);
  };
  join(dec.tc1, dec.u2);
  join(dec.u2, dec.u1);
  join(dec.u1, dec.tc2);
  return Graph::from_edges(dec.n, es);
}

std::optional<LeafTriple> diametrical_leaf_triple(const Graph& t) {
  auto centers = tree_centers(t);
  if (centers.size() != 2 && centers.size() != 1)
    throw std::logic_error("tree with more than two centers");
  if (centers.size() == 2)
    throw std::invalid_argument(
        "diametrical leaf triple applies to one-center trees");
  auto dm = all_pairs_distances(t);
  auto prof = profile_from_distances(dm);
  std::vector<int> leaves;
  for (int v : prof.diametrical)
    if (t.degree(v) == 1) leaves.push_back(v);
  // ascending scan makes the first hit the lexicographically least triple
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      if (dm.at(leaves[i], leaves[j]) != prof.diameter) continue;
      for (std::size_t k = j + 1; k < leaves.size(); ++k)
        if (dm.at(leaves[i], leaves[k]) == prof.diameter &&
            dm.at(leaves[j], leaves[k]) == prof.diameter)
          return LeafTriple{leaves[i], leaves[j], leaves[k]};
    }
  return std::nullopt;
}

namespace detail {

RootedLevelSequences::RootedLevelSequences(int n) : n_(n) {
  if (n < 1) done_ = true;
}

bool RootedLevelSequences::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    seq_.resize(n_);
    for (int i = 0; i < n_; ++i) seq_[i] = i;  // the path, lexicographically greatest
    return true;
  }
  int p = -1;
  for (int i = n_ - 1; i >= 0; --i)
    if (seq_[i] >= 2) {
      p = i;
      break;
    }
  if (p < 0) {  // the star is the last sequence
    done_ = true;
    return false;
  }
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (seq_[i] == seq_[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n_; ++i) seq_[i] = seq_[i - (p - q)];
  return true;
}

bool is_center_rooted(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  if (n <= 1) return true;
  int height = 0;
  for (int x : seq) height = std::max(height, x);
  // first root branch is seq[1..b1e)
  int b1e = n;
  for (int i = 2; i < n; ++i)
    if (seq[i] == 1) {
      b1e = i;
      break;
    }
  int h2 = 0;
  for (int i = b1e; i < n; ++i) h2 = std::max(h2, seq[i]);
  if (h2 == height) return true;       // even diameter, root is the center
  if (h2 != height - 1) return false;  // center lies inside the first branch
  // Odd diameter: the root and its first child are the two centers. Keep
  // this rooting only when the root's own side, read as a rooted tree,
  // compares >= the side below the first child.
  int i = b1e, j = 2;  // both sides start with an implicit 0
  while (i < n && j < b1e) {
    int a = seq[i], b = seq[j] - 1;
    if (a != b) return a > b;
    ++i;
    ++j;
  }
  return (n - b1e + 1) >= (b1e - 1);  // prefix is the smaller one
}

Graph graph_from_level_sequence(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<Edge> es;
  std::vector<int> last_at_level(n, -1);
  last_at_level[0] = 0;
  for (int i = 1; i < n; ++i) {
    es.emplace_back(last_at_level[seq[i] - 1], i);
    last_at_level[seq[i]] = i;
  }
  return Graph::from_edges(n, es);
}

}  // namespace detail

FreeTreeIterator::FreeTreeIterator(int n) : rooted_(n) {
  if (n < 1 || n > 18)
    throw std::invalid_argument("free tree enumeration limited to 1 <= n <= 18");
}

std::optional<Graph> FreeTreeIterator::next() {
  while (rooted_.next())
    if (detail::is_center_rooted(rooted_.seq()))
      return detail::graph_from_level_sequence(rooted_.seq());
  return std::nullopt;
}

void for_each_free_tree(int n, const std::function<void(const Graph&)>& fn) {
  FreeTreeIterator it(n);
  while (auto t = it.next()) fn(*t);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  const int wpr = n == 0 ? 0 : (n + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * wpr, 0);
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((mask >> k) & 1) {
        rows[static_cast<std::size_t>(u) * wpr + (v >> 6)] |= 1ull << (v & 63);
        rows[static_cast<std::size_t>(v) * wpr + (u >> 6)] |= 1ull << (u & 63);
      }
  return Graph::from_bitrows(n, std::move(rows));
}

void for_each_connected_graph(int n,
                              const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("labeled enumeration capped at n=7");
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    Graph g = graph_from_edge_mask(n, mask);
    if (is_connected(g)) fn(g);
  }
}

}  // namespace eccg
