#include <doctest.h>

#include <random>
#include <set>

#include "eccg/families.hpp"
#include "eccg/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using eccg::Edge;
using eccg::Graph;

TEST_CASE("from_edges builds the symmetric closure") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));

  Graph single = Graph::from_edges(1, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  Graph dup = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("from_edges rejects bad pairs by name") {
  CHECK_THROWS_WITH_AS(Graph::from_edges(4, {{2, 2}}),
                       doctest::Contains("(2,2)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Graph::from_edges(4, {{0, 9}}),
                       doctest::Contains("(0,9)"), std::invalid_argument);
}

TEST_CASE("pinned 7-vertex counterexample has the drawn shape") {
  Graph g = fixtures::counterexample7();
  CHECK(g.edge_count() == 8);
  CHECK(g.degree_sequence() == std::vector<int>{1, 1, 2, 2, 3, 3, 4});
}

TEST_CASE("complement basics") {
  CHECK(eccg::complement(eccg::complete_graph(4)).edge_count() == 0);

  Graph c4 = eccg::cycle_graph(4);
  Graph cc = eccg::complement(c4);
  CHECK(cc.edges() == std::vector<Edge>{{0, 2}, {1, 3}});

  Graph g = fixtures::counterexample7();
  CHECK(eccg::complement(g).edge_count() == 13);
}

TEST_CASE("complement is an involution and splits the pair count") {
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(rng() % 13);
    Graph g = oracle::random_graph(n, 0.4, rng);
    Graph c = eccg::complement(g);
    CHECK(eccg::edge_set_equal(eccg::complement(c), g));
    CHECK(g.edge_count() + c.edge_count() ==
          static_cast<std::size_t>(n) * (n - 1) / 2);
  }
}

TEST_CASE("family generators") {
  Graph p6 = eccg::path_graph(6);
  CHECK(p6.vertex_count() == 6);
  CHECK(p6.edge_count() == 5);
  CHECK(p6.degree(0) == 1);
  CHECK(p6.degree(5) == 1);

  Graph grid = eccg::grid_graph(3, 4);
  CHECK(grid.vertex_count() == 12);
  CHECK(grid.edge_count() == 17);

  Graph s = eccg::sstar(1, 1);
  CHECK(s.vertex_count() == 5);
  CHECK(s.edges() ==
        std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}});

  CHECK(eccg::cycle_graph(3).edge_count() == 3);
  CHECK(eccg::star_graph(5).degree_sequence() ==
        std::vector<int>{1, 1, 1, 1, 4});
  CHECK(eccg::complete_bipartite(2, 3).edge_count() == 6);

  Graph ds = eccg::double_star(2, 2);
  CHECK(ds.vertex_count() == 6);
  CHECK(ds.edge_count() == 5);
  CHECK(ds.degree(0) == 3);
  CHECK(ds.degree(1) == 3);
}

TEST_CASE("generate validates arity and emptiness") {
  CHECK_THROWS_AS(eccg::generate({eccg::Family::path, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eccg::generate({eccg::Family::grid, {3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eccg::path_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(eccg::cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(eccg::star_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(eccg::grid_graph(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(eccg::complete_bipartite(0, 3), std::invalid_argument);
  CHECK_NOTHROW(eccg::sstar(0, 0));
  CHECK_NOTHROW(eccg::double_star(0, 0));
}

TEST_CASE("mixed extension of the 4-path") {
  Graph p4 = eccg::mixed_extension_p4({1, 1, 1, 1});
  CHECK(eccg::edge_set_equal(p4, eccg::path_graph(4)));

  Graph big = eccg::mixed_extension_p4({3, 2, 5, 5});
  CHECK(big.vertex_count() == 15);
  CHECK(big.edge_count() == 41);

  CHECK_THROWS_AS(eccg::mixed_extension_p4({1, 0, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("mixed extension edge count and bipartition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int p1 = 1 + static_cast<int>(rng() % 4), p2 = 1 + static_cast<int>(rng() % 4);
    int p3 = 1 + static_cast<int>(rng() % 4), p4 = 1 + static_cast<int>(rng() % 4);
    Graph g = eccg::mixed_extension_p4({p1, p2, p3, p4});
    CHECK(g.edge_count() ==
          static_cast<std::size_t>(p1 * p2 + p2 * p3 + p3 * p4));
    // parts {P1 u P3, P2 u P4} two-color the graph
    auto side = [&](int v) {
      if (v < p1) return 0;
      if (v < p1 + p2) return 1;
      if (v < p1 + p2 + p3) return 0;
      return 1;
    };
    for (const auto& [u, v] : g.edges()) CHECK(side(u) != side(v));
  }
}

TEST_CASE("labeled equality is not isomorphism") {
  Graph a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph b = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}});
  CHECK(eccg::edge_set_equal(a, a));
  CHECK(!eccg::edge_set_equal(a, b));
}

TEST_CASE("connectivity helpers") {
  CHECK(eccg::is_connected(eccg::path_graph(5)));
  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(!eccg::is_connected(two));
  CHECK(eccg::component_count(two) == 2);
  CHECK(eccg::component_count(Graph::from_edges(3, {})) == 3);
  CHECK(eccg::is_connected(Graph::from_edges(1, {})));
  CHECK(eccg::is_connected(Graph::from_edges(0, {})));
}

TEST_CASE("disjoint union and permutation") {
  Graph u = eccg::disjoint_union(eccg::complete_graph(2), eccg::complete_graph(3));
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 4);
  CHECK(u.has_edge(0, 1));
  CHECK(u.has_edge(2, 3));
  CHECK(!u.has_edge(1, 2));

  Graph p = eccg::path_graph(3);
  std::vector<int> perm{2, 0, 1};
  Graph q = eccg::permuted(p, perm);
  CHECK(q.has_edge(2, 0));
  CHECK(q.has_edge(0, 1));
  CHECK(!q.has_edge(2, 1));
  CHECK_THROWS_AS(eccg::permuted(p, std::vector<int>{0, 0, 1}),
                  std::invalid_argument);
}
