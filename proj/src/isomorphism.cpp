#include "eccg/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eccg/graph6.hpp"

namespace eccg {

namespace {

// Per-vertex refinement key: degree followed by the sorted degrees of the
// neighbors. Any isomorphism preserves these, so candidate sets may be
// restricted to equal keys without losing completeness.
std::vector<std::vector<int>> refinement_keys(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> k;
    k.push_back(deg[v]);
    for (int w : g.neighbors(v)) k.push_back(deg[w]);
    std::sort(k.begin() + 1, k.end());
    keys[v] = std::move(k);
  }
  return keys;
}

bool audit(const Graph& g, const Graph& h, const std::vector<int>& map) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) != h.has_edge(map[u], map[v])) return false;
  return true;
}

struct Matcher {
  const Graph& g;
  const Graph& h;
  std::vector<std::vector<int>> key_g, key_h;
  std::vector<int> order;    // g vertices, most constrained first
  std::vector<int> map_gh;   // g -> h, -1 unassigned
  std::vector<bool> used_h;

  Matcher(const Graph& gg, const Graph& hh) : g(gg), h(hh) {
    key_g = refinement_keys(g);
    key_h = refinement_keys(h);
    build_order();
    map_gh.assign(g.vertex_count(), -1);
    used_h.assign(g.vertex_count(), false);
  }

  void build_order() {
    const int n = g.vertex_count();
    // size of each key class on the g side
    std::vector<int> class_size(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (key_g[v] == key_g[w]) ++class_size[v];
    std::vector<bool> placed(n, false);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
      int best = -1, best_attached = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int attached = 0;
        for (int w : order)
          if (g.has_edge(v, w)) ++attached;
        if (best < 0 || attached > best_attached ||
            (attached == best_attached &&
             (class_size[v] < class_size[best] ||
              (class_size[v] == class_size[best] &&
               key_g[v][0] > key_g[best][0])))) {
          best = v;
          best_attached = attached;
        }
      }
      placed[best] = true;
      order.push_back(best);
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int u = 0; u < h.vertex_count(); ++u) {
      if (used_h[u] || key_h[u] != key_g[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        int w = order[i];
        if (g.has_edge(v, w) != h.has_edge(u, map_gh[w])) ok = false;
      }
      if (!ok) continue;
      map_gh[v] = u;
      used_h[u] = true;
      if (extend(depth + 1)) return true;
      map_gh[v] = -1;
      used_h[u] = false;
    }
    return false;
  }
};

}  // namespace

IsoResult find_isomorphism(const Graph& g, const Graph& h) {
  IsoResult r;
  if (g.vertex_count() != h.vertex_count()) return r;
  if (g.edge_count() != h.edge_count()) return r;
  if (g.degree_sequence() != h.degree_sequence()) return r;
  if (g.vertex_count() == 0) {
    r.isomorphic = true;
    return r;
  }
  Matcher m(g, h);
  {
    // key multisets must agree
    auto a = m.key_g, b = m.key_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return r;
  }
  if (!m.extend(0)) return r;
  if (!audit(g, h, m.map_gh))
    throw std::logic_error("isomorphism audit failed");  // unreachable
  r.isomorphic = true;
  r.mapping = std::move(m.map_gh);
  return r;
}

std::string canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 10)
    throw std::invalid_argument("canonical form limited to n <= 10");
  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  std::vector<int> label(n);  // label[i] = original vertex placed at slot i
  std::iota(label.begin(), label.end(), 0);
  std::vector<unsigned char> best(nbytes, 0xff), cur(nbytes, 0);
  do {
    int acc = 0, nb = 0, byte = 0;
    bool worse = false, better = false;
    for (int v = 1; v < n && !worse; ++v)
      for (int u = 0; u < v; ++u) {
        acc = (acc << 1) | (g.has_edge(label[u], label[v]) ? 1 : 0);
        if (++nb == 6) {
          cur[byte] = static_cast<unsigned char>(acc);
          if (!better) {
            if (cur[byte] > best[byte]) {
              worse = true;
              break;
            }
            if (cur[byte] < best[byte]) better = true;
          }
          ++byte;
          acc = 0;
          nb = 0;
        }
      }
    if (worse) continue;
    if (nb) cur[byte] = static_cast<unsigned char>(acc << (6 - nb));
    if (better || cur < best) best = cur;
  } while (std::next_permutation(label.begin(), label.end()));
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  for (unsigned char b : best) out.push_back(static_cast<char>(63 + b));
  return out;
}

}  // namespace eccg
