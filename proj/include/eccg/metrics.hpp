#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "eccg/graph.hpp"

namespace eccg {

// All-pairs hop distances. Unreachable pairs are a distinct state, not a
// sentinel number: at() throws on them so arithmetic misuse is an error.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  int size() const { return n_; }
  bool reachable(int u, int v) const { return raw(u, v) >= 0; }
  std::optional<int> maybe(int u, int v) const {
    int d = raw(u, v);
    if (d < 0) return std::nullopt;
    return d;
  }
  // Throws std::logic_error if the pair spans two components.
  int at(int u, int v) const;
  bool all_reachable() const;

 private:
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, -1) {}
  int raw(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

  int n_ = 0;
  std::vector<int> d_;

  friend DistanceMatrix all_pairs_distances(const Graph&);
};

// BFS from `source`; out[v] = -1 for unreached vertices. out.size() == n.
void bfs_distances(const Graph& g, int source, std::span<int> out);

DistanceMatrix all_pairs_distances(const Graph& g);

struct EccentricityProfile {
  std::vector<int> eccentricity;
  int radius = 0;
  int diameter = 0;
  std::vector<int> centers;      // eccentricity == radius
  std::vector<int> diametrical;  // eccentricity == diameter
  std::map<int, std::vector<int>> strata;  // S_i for each occurring i

  // S_i; empty for absent i.
  const std::vector<int>& stratum(int i) const;
};

// Requires a connected graph with n >= 1.
EccentricityProfile eccentricity_profile(const Graph& g);
EccentricityProfile profile_from_distances(const DistanceMatrix& dm);

// True iff diameter == radius == d.
bool is_self_centered(const Graph& g, int d);

}  // namespace eccg
