#include "eccg/eccentric.hpp"

namespace eccg {

Graph eccentric_graph(const Graph& g, const DistanceMatrix& dm,
                      const EccentricityProfile& prof) {
  const int n = g.vertex_count();
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int d = dm.at(u, v);
      if (d == prof.eccentricity[u] || d == prof.eccentricity[v])
        es.emplace_back(u, v);
    }
  return Graph::from_edges(n, es);
}

Graph eccentric_graph(const Graph& g) {
  auto dm = all_pairs_distances(g);
  auto prof = profile_from_distances(dm);  // rejects disconnected input
  return eccentric_graph(g, dm, prof);
}

}  // namespace eccg
