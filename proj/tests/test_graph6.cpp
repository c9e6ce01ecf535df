#include <doctest.h>

#include <random>

#include "eccg/families.hpp"
#include "eccg/graph6.hpp"
#include "eccg/trees.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using eccg::Graph;

TEST_CASE("hand-packed graph6 values") {
  Graph d = eccg::parse_graph6("D??");
  CHECK(d.vertex_count() == 5);
  CHECK(d.edge_count() == 0);

  CHECK(eccg::emit_graph6(Graph::from_edges(0, {})) == "?");
  CHECK(eccg::emit_graph6(Graph::from_edges(1, {})) == "@");
  CHECK(eccg::emit_graph6(eccg::path_graph(3)) == "Bg");
  CHECK(eccg::emit_graph6(eccg::path_graph(4)) == "Ch");
  CHECK(eccg::emit_graph6(eccg::cycle_graph(4)) == "Cl");
  CHECK(eccg::emit_graph6(eccg::complete_graph(4)) == "C~");

  CHECK(eccg::parse_graph6("Bg") == eccg::path_graph(3));
  CHECK(eccg::parse_graph6(">>graph6<<D??") == d);
  CHECK(eccg::parse_graph6("C~\n") == eccg::complete_graph(4));
}

TEST_CASE("graph6 strictness") {
  CHECK_THROWS_AS(eccg::parse_graph6(""), eccg::ParseError);
  CHECK_THROWS_AS(eccg::parse_graph6("D?"), eccg::ParseError);      // short body
  CHECK_THROWS_AS(eccg::parse_graph6("D???"), eccg::ParseError);    // trailing
  CHECK_THROWS_AS(eccg::parse_graph6("D?\x19"), eccg::ParseError);  // bad byte
  CHECK_THROWS_AS(eccg::parse_graph6("B@"), eccg::ParseError);      // padding set
  CHECK_THROWS_AS(eccg::parse_graph6("~???"), eccg::ParseError);    // n<63 long form

  try {
    eccg::parse_graph6("D?\x19");
  } catch (const eccg::ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
}

TEST_CASE("four-byte size form") {
  Graph empty63 = Graph::from_edges(63, {});
  std::string s = eccg::emit_graph6(empty63);
  CHECK(s.size() == 4 + (63 * 62 / 2 + 5) / 6);
  CHECK(s[0] == '~');
  CHECK(eccg::parse_graph6(s) == empty63);

  Graph p70 = eccg::path_graph(70);
  CHECK(eccg::parse_graph6(eccg::emit_graph6(p70)) == p70);
}

TEST_CASE("graph6 round-trips on random graphs") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng() % 21);
    Graph g = oracle::random_graph(n, 0.35, rng);
    CHECK(eccg::parse_graph6(eccg::emit_graph6(g)) == g);
  }
}

TEST_CASE("graph6 round-trips on enumerated trees") {
  for (int n = 1; n <= 10; ++n)
    eccg::for_each_free_tree(n, [](const Graph& t) {
      CHECK(eccg::parse_graph6(eccg::emit_graph6(t)) == t);
    });
}

TEST_CASE("counterexample fixture file matches the pinned edges") {
  Graph g = fixtures::load("counterexample7.g6");
  CHECK(g == fixtures::counterexample7());
  CHECK(fixtures::read_file("counterexample7.g6") ==
        eccg::emit_graph6(g) + "\n");
}

TEST_CASE("edge list format") {
  Graph g = fixtures::counterexample7();
  std::string text = eccg::emit_edge_list(g);
  CHECK(text.substr(0, 4) == "n 7\n");
  CHECK(eccg::parse_edge_list(text) == g);

  CHECK(eccg::parse_edge_list("# comment\n n 3\n0 1\n1 2\n") ==
        eccg::path_graph(3));
  CHECK(eccg::parse_edge_list("3 2\n0 1\n1 2\n") == eccg::path_graph(3));
  CHECK(eccg::parse_edge_list("3\n0 1\n1 2\n") == eccg::path_graph(3));

  CHECK_THROWS_AS(eccg::parse_edge_list("0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(eccg::parse_edge_list("3 5\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(eccg::parse_edge_list("3\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(eccg::parse_edge_list(""), std::invalid_argument);
}

TEST_CASE("auto detection") {
  CHECK(eccg::parse_graph_auto("Bg") == eccg::path_graph(3));
  CHECK(eccg::parse_graph_auto("n 3\n0 1\n1 2\n") == eccg::path_graph(3));
  CHECK(eccg::parse_graph_auto("Bg\n") == eccg::path_graph(3));
}

TEST_CASE("dot export") {
  std::string dot = eccg::emit_dot(eccg::path_graph(3));
  CHECK(dot.find("graph {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("2;") != std::string::npos);
}
