#include "eccg/families.hpp"

#include <stdexcept>
#include <string>

namespace eccg {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::double_star: return "double_star";
    case Family::sstar: return "sstar";
    case Family::grid: return "grid";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::path, Family::cycle, Family::star, Family::complete,
                   Family::complete_bipartite, Family::double_star,
                   Family::sstar, Family::grid})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

Graph path_graph(int n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph star_graph(int n) {
  require(n >= 1, "star requires n >= 1");
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(0, i);
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete requires n >= 1");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite requires both parts >= 1");
  std::vector<Edge> es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Graph::from_edges(a + b, es);
}

Graph double_star(int a, int b) {
  require(a >= 0 && b >= 0, "double_star requires nonnegative leaf counts");
  std::vector<Edge> es{{0, 1}};
  for (int i = 0; i < a; ++i) es.emplace_back(0, 2 + i);
  for (int i = 0; i < b; ++i) es.emplace_back(1, 2 + a + i);
  return Graph::from_edges(2 + a + b, es);
}

Graph sstar(int a, int b) {
  require(a >= 0 && b >= 0, "sstar requires nonnegative pendant counts");
  std::vector<Edge> es{{0, 1}, {0, 2}, {1, 2}};
  for (int i = 0; i < a; ++i) es.emplace_back(0, 3 + i);
  for (int i = 0; i < b; ++i) es.emplace_back(1, 3 + a + i);
  return Graph::from_edges(3 + a + b, es);
}

Graph grid_graph(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid requires both sides >= 1");
  std::vector<Edge> es;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::from_edges(rows * cols, es);
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    require(p.size() == k, std::string(family_name(spec.family)) + " expects " +
                               std::to_string(k) + " parameter(s), got " +
                               std::to_string(p.size()));
  };
  switch (spec.family) {
    case Family::path: arity(1); return path_graph(p[0]);
    case Family::cycle: arity(1); return cycle_graph(p[0]);
    case Family::star: arity(1); return star_graph(p[0]);
    case Family::complete: arity(1); return complete_graph(p[0]);
    case Family::complete_bipartite: arity(2); return complete_bipartite(p[0], p[1]);
    case Family::double_star: arity(2); return double_star(p[0], p[1]);
    case Family::sstar: arity(2); return sstar(p[0], p[1]);
    case Family::grid: arity(2); return grid_graph(p[0], p[1]);
  }
  throw std::invalid_argument("unknown family");
}

Graph mixed_extension_p4(const MixedExtensionSpec& spec) {
  const int p[4] = {spec.p1, spec.p2, spec.p3, spec.p4};
  for (int k : p) require(k >= 1, "mixed extension parts must be >= 1");
  int start[4], n = 0;
  for (int i = 0; i < 4; ++i) {
    start[i] = n;
    n += p[i];
  }
  std::vector<Edge> es;
  for (int i = 0; i + 1 < 4; ++i)
    for (int u = 0; u < p[i]; ++u)
      for (int v = 0; v < p[i + 1]; ++v)
        es.emplace_back(start[i] + u, start[i + 1] + v);
  return Graph::from_edges(n, es);
}

}  // namespace eccg
