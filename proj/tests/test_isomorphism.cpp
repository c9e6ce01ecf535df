#include <doctest.h>

#include <random>
#include <set>

#include "eccg/eccentric.hpp"
#include "eccg/families.hpp"
#include "eccg/graph6.hpp"
#include "eccg/isomorphism.hpp"
#include "oracles.hpp"

using eccg::Graph;

namespace {

void check_mapping(const Graph& g, const Graph& h,
                   const std::vector<int>& map) {
  REQUIRE(map.size() == static_cast<std::size_t>(g.vertex_count()));
  std::set<int> image(map.begin(), map.end());
  CHECK(image.size() == map.size());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      CHECK(g.has_edge(u, v) == h.has_edge(map[u], map[v]));
}

}  // namespace

TEST_CASE("spot verdicts") {
  auto c5 = eccg::cycle_graph(5);
  auto r = eccg::find_isomorphism(c5, eccg::eccentric_graph(c5));
  CHECK(r.isomorphic);
  check_mapping(c5, eccg::eccentric_graph(c5), r.mapping);

  auto p4 = eccg::path_graph(4);
  CHECK(eccg::find_isomorphism(eccg::eccentric_graph(p4), eccg::complement(p4))
            .isomorphic);

  CHECK(!eccg::find_isomorphism(eccg::complete_graph(3), eccg::path_graph(3))
             .isomorphic);

  // isomorphic but not label-equal
  Graph a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph b = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}});
  CHECK(!eccg::edge_set_equal(a, b));
  auto ab = eccg::find_isomorphism(a, b);
  CHECK(ab.isomorphic);
  check_mapping(a, b, ab.mapping);
}

TEST_CASE("same degree sequence is not enough") {
  // both 3-regular on 6 vertices
  Graph k33 = eccg::complete_bipartite(3, 3);
  Graph prism = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(k33.degree_sequence() == prism.degree_sequence());
  CHECK(!eccg::find_isomorphism(k33, prism).isomorphic);
  CHECK(!oracle::brute_isomorphic(k33, prism));
}

TEST_CASE("matches brute force on a mixed pool") {
  std::mt19937_64 rng(808);
  std::vector<Graph> pool;
  for (int trial = 0; trial < 14; ++trial)
    pool.push_back(oracle::random_graph(5, 0.4, rng));
  for (int trial = 0; trial < 6; ++trial)
    pool.push_back(oracle::random_graph(6, 0.5, rng));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      bool expected = oracle::brute_isomorphic(pool[i], pool[j]);
      auto r = eccg::find_isomorphism(pool[i], pool[j]);
      CHECK(r.isomorphic == expected);
      if (r.isomorphic) check_mapping(pool[i], pool[j], r.mapping);
      CHECK(eccg::find_isomorphism(pool[j], pool[i]).isomorphic == expected);
    }
}

TEST_CASE("relabelings are always isomorphic and audit clean") {
  std::mt19937_64 rng(1999);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_graph(n, 0.45, rng);
    for (int rep = 0; rep < 10; ++rep) {
      auto perm = oracle::random_permutation(n, rng);
      Graph h = eccg::permuted(g, perm);
      auto r = eccg::find_isomorphism(g, h);
      REQUIRE(r.isomorphic);
      check_mapping(g, h, r.mapping);
    }
  }
}

TEST_CASE("canonical form basics") {
  Graph p1 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph p2 = Graph::from_edges(3, {{1, 0}, {0, 2}});
  CHECK(eccg::canonical_form(p1) == eccg::canonical_form(p2));
  CHECK(eccg::canonical_form(p1) != eccg::canonical_form(eccg::complete_graph(3)));

  // output is itself valid graph6 for an isomorphic graph
  Graph round = eccg::parse_graph6(eccg::canonical_form(p1));
  CHECK(eccg::find_isomorphism(round, p1).isomorphic);

  CHECK_THROWS_WITH_AS(eccg::canonical_form(eccg::complete_graph(11)),
                       doctest::Contains("n <= 10"), std::invalid_argument);
}

TEST_CASE("all 16 labeled trees on 4 vertices collapse to 2 classes") {
  std::set<std::string> classes;
  std::vector<int> seq(2, 0);
  int labeled = 0;
  for (seq[0] = 0; seq[0] < 4; ++seq[0])
    for (seq[1] = 0; seq[1] < 4; ++seq[1]) {
      ++labeled;
      classes.insert(eccg::canonical_form(oracle::prufer_decode(seq, 4)));
    }
  CHECK(labeled == 16);
  CHECK(classes.size() == 2);
  CHECK(classes.count(eccg::canonical_form(eccg::path_graph(4))) == 1);
  CHECK(classes.count(eccg::canonical_form(eccg::star_graph(4))) == 1);
}

TEST_CASE("canonical form equals the exhaustive relabeling minimum") {
  CHECK(eccg::canonical_form(Graph::from_edges(0, {})) == "?");
  CHECK(eccg::canonical_form(Graph::from_edges(1, {})) == "@");
  auto emit = [](const Graph& g) { return eccg::emit_graph6(g); };
  auto relabel = [](const Graph& g, const std::vector<int>& p) {
    return eccg::permuted(g, p);
  };
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 120; ++trial) {
    int n = static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(n, 0.45, rng);
    CHECK(eccg::canonical_form(g) == oracle::naive_canonical(g, emit, relabel));
  }
}

TEST_CASE("canonical form is relabeling invariant and separates classes") {
  std::mt19937_64 rng(60601);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(n, 0.4, rng);
    auto perm = oracle::random_permutation(n, rng);
    Graph h = eccg::permuted(g, perm);
    CHECK(eccg::canonical_form(g) == eccg::canonical_form(h));

    Graph other = oracle::random_graph(n, 0.4, rng);
    bool same_class = eccg::find_isomorphism(g, other).isomorphic;
    CHECK((eccg::canonical_form(g) == eccg::canonical_form(other)) ==
          same_class);
  }
}
