#pragma once

#include "eccg/graph.hpp"
#include "eccg/metrics.hpp"

namespace eccg {

// Graph on the same vertex set with u ~ v iff d(u,v) == ecc(u) or
// d(u,v) == ecc(v). Requires a connected graph with n >= 1.
Graph eccentric_graph(const Graph& g);

// Same, reusing precomputed distances and eccentricities.
Graph eccentric_graph(const Graph& g, const DistanceMatrix& dm,
                      const EccentricityProfile& prof);

}  // namespace eccg
