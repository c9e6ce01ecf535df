#include "eccg/graph6.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <vector>

namespace eccg {

ParseError::ParseError(const std::string& msg, std::size_t offset)
    : std::runtime_error(msg + " (byte offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxN = 258047;

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 input", base);

  auto sextet = [&](std::size_t i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte out of range [63,126]", base + i);
    return static_cast<int>(c) - 63;
  };

  std::size_t i = 0;
  std::uint64_t n;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6 size beyond 258047 is unsupported", base + 1);
    if (text.size() < 4) throw ParseError("truncated graph6 size", base + text.size());
    n = (static_cast<std::uint64_t>(sextet(1)) << 12) |
        (static_cast<std::uint64_t>(sextet(2)) << 6) |
        static_cast<std::uint64_t>(sextet(3));
    if (n < 63)
      throw ParseError("graph6 size under 63 must use the one-byte form", base);
    i = 4;
  } else {
    n = static_cast<std::uint64_t>(sextet(0));
    i = 1;
  }
  if (n > kMaxN) throw ParseError("graph6 size beyond 258047 is unsupported", base);

  const std::uint64_t nbits = n * (n - 1) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (text.size() - i < nbytes)
    throw ParseError("graph6 body shorter than the size byte implies",
                     base + text.size());
  if (text.size() - i > nbytes)
    throw ParseError("trailing bytes after graph6 body", base + i + nbytes);

  const int nn = static_cast<int>(n);
  const int wpr = nn == 0 ? 0 : (nn + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(nn) * wpr, 0);
  // pairs in column order: (0,1), (0,2), (1,2), (0,3), ...
  std::uint64_t u = 0, v = 1, k = 0;
  for (std::uint64_t byte = 0; byte < nbytes; ++byte) {
    int bits = sextet(i + byte);
    for (int b = 5; b >= 0; --b, ++k) {
      int bit = (bits >> b) & 1;
      if (k >= nbits) {
        if (bit) throw ParseError("nonzero padding bits", base + i + byte);
        continue;
      }
      if (bit) {
        rows[u * wpr + (v >> 6)] |= 1ull << (v & 63);
        rows[v * wpr + (u >> 6)] |= 1ull << (u & 63);
      }
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return Graph::from_bitrows(nn, std::move(rows));
}

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
  if (n > kMaxN)
    throw std::invalid_argument("graph6 encoding limited to n <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nb = 0;
  for (std::uint64_t v = 1; v < n; ++v)
    for (std::uint64_t u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(static_cast<int>(u), static_cast<int>(v)) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nb = 0;
      }
    }
  if (nb) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long n = -1, m = -1;
  std::vector<Edge> es;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (n < 0) {
      std::string first;
      if (!(ls >> first)) continue;  // blank or comment-only line
      if (first == "n") {
        if (!(ls >> n) || n < 0)
          throw std::invalid_argument("edge list: bad header on line " +
                                      std::to_string(lineno));
      } else {
        try {
          n = std::stol(first);
        } catch (...) {
          throw std::invalid_argument("edge list: bad header on line " +
                                      std::to_string(lineno));
        }
        if (n < 0)
          throw std::invalid_argument("edge list: negative vertex count");
        ls >> m;  // optional edge count
      }
      continue;
    }
    long u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v))
      throw std::invalid_argument("edge list: incomplete edge on line " +
                                  std::to_string(lineno));
    es.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw std::invalid_argument("edge list: missing header line");
  if (m >= 0 && static_cast<long>(es.size()) != m)
    throw std::invalid_argument("edge list: header promises " + std::to_string(m) +
                                " edges, found " + std::to_string(es.size()));
  return Graph::from_edges(static_cast<int>(n), es);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string emit_dot(const Graph& g) {
  std::string out = "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

Graph parse_graph_auto(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.remove_suffix(1);
  if (t.find('#') != std::string_view::npos ||
      t.find(' ') != std::string_view::npos ||
      t.find('\n') != std::string_view::npos ||
      t.find('\t') != std::string_view::npos)
    return parse_edge_list(text);
  return parse_graph6(t);
}

}  // namespace eccg
