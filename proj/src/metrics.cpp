#include "eccg/metrics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace eccg {

int DistanceMatrix::at(int u, int v) const {
  int d = raw(u, v);
  if (d < 0)
    throw std::logic_error("distance requested for an unreachable pair");
  return d;
}

bool DistanceMatrix::all_reachable() const {
  for (int x : d_)
    if (x < 0) return false;
  return true;
}

void bfs_distances(const Graph& g, int source, std::span<int> out) {
  const int wpr = g.words_per_row();
  std::fill(out.begin(), out.end(), -1);
  out[source] = 0;
  std::vector<std::uint64_t> visited(wpr, 0), frontier(wpr, 0), next(wpr, 0);
  visited[source >> 6] |= 1ull << (source & 63);
  frontier[source >> 6] |= 1ull << (source & 63);
  int level = 0;
  for (;;) {
    std::fill(next.begin(), next.end(), 0);
    for (int wi = 0; wi < wpr; ++wi) {
      std::uint64_t w = frontier[wi];
      while (w) {
        int v = wi * 64 + std::countr_zero(w);
        w &= w - 1;
        auto r = g.row(v);
        for (int k = 0; k < wpr; ++k) next[k] |= r[k];
      }
    }
    bool grew = false;
    ++level;
    for (int wi = 0; wi < wpr; ++wi) {
      next[wi] &= ~visited[wi];
      visited[wi] |= next[wi];
      std::uint64_t w = next[wi];
      if (w) grew = true;
      while (w) {
        out[wi * 64 + std::countr_zero(w)] = level;
        w &= w - 1;
      }
    }
    if (!grew) return;
    std::swap(frontier, next);
  }
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dm(n);
  for (int s = 0; s < n; ++s)
    bfs_distances(g, s, {dm.d_.data() + static_cast<std::size_t>(s) * n,
                         static_cast<std::size_t>(n)});
  return dm;
}

const std::vector<int>& EccentricityProfile::stratum(int i) const {
  static const std::vector<int> empty;
  auto it = strata.find(i);
  return it == strata.end() ? empty : it->second;
}

EccentricityProfile profile_from_distances(const DistanceMatrix& dm) {
  const int n = dm.size();
  if (n == 0)
    throw std::invalid_argument("eccentricity undefined on empty graph");
  if (!dm.all_reachable())
    throw std::invalid_argument("eccentricity undefined on disconnected graph");
  EccentricityProfile p;
  p.eccentricity.resize(n, 0);
  for (int u = 0; u < n; ++u) {
    int e = 0;
    for (int v = 0; v < n; ++v) e = std::max(e, dm.at(u, v));
    p.eccentricity[u] = e;
  }
  p.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  p.diameter = *std::max_element(p.eccentricity.begin(), p.eccentricity.end());
  for (int u = 0; u < n; ++u) {
    p.strata[p.eccentricity[u]].push_back(u);
    if (p.eccentricity[u] == p.radius) p.centers.push_back(u);
    if (p.eccentricity[u] == p.diameter) p.diametrical.push_back(u);
  }
  return p;
}

EccentricityProfile eccentricity_profile(const Graph& g) {
  return profile_from_distances(all_pairs_distances(g));
}

bool is_self_centered(const Graph& g, int d) {
  auto p = eccentricity_profile(g);
  return p.radius == d && p.diameter == d;
}

}  // namespace eccg
