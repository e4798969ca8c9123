#include "critgraph/graph6.hpp"

#include <cstddef>

namespace critgraph {

namespace {
constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'

bool printable(char c) { return c >= kLo && c <= kHi; }
}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kLo + n));
  } else {
    // Long form: '~' then n in three sextets, big-endian.
    out.push_back(static_cast<char>(kHi));
    out.push_back(static_cast<char>(kLo + ((n >> 12) & 0x3f)));
    out.push_back(static_cast<char>(kLo + ((n >> 6) & 0x3f)));
    out.push_back(static_cast<char>(kLo + (n & 0x3f)));
  }
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(kLo + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(kLo + (acc << (6 - bits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k, const char* what) {
    if (pos + k > text.size())
      throw ParseError(std::string("graph6: truncated ") + what, text.size());
  };
  auto sextet = [&](const char* what) {
    need(1, what);
    char c = text[pos];
    if (!printable(c))
      throw ParseError(std::string("graph6: byte out of range in ") + what, pos);
    ++pos;
    return static_cast<int>(c) - kLo;
  };

  need(1, "header");
  long n = 0;
  if (text[pos] == static_cast<char>(kHi)) {
    ++pos;
    need(1, "header");
    if (text[pos] == static_cast<char>(kHi))
      throw ParseError("graph6: 8-byte vertex counts are not supported", pos);
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet("header");
  } else {
    n = sextet("header");
  }
  if (n > VertexSet::kCapacity)
    throw ParseError("graph6: vertex count " + std::to_string(n) +
                         " exceeds the library cap of " +
                         std::to_string(VertexSet::kCapacity),
                     0);

  GraphBuilder b(static_cast<int>(n));
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        acc = sextet("bit field");
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) b.add_edge(u, v);
      --bits;
    }
  }
  if (bits > 0 && (acc & ((1 << bits) - 1)) != 0)
    throw ParseError("graph6: nonzero padding bits", pos - 1);
  if (pos != text.size())
    throw ParseError("graph6: trailing bytes after bit field", pos);
  return b.build();
}

std::vector<Graph> graph6_decode_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '>') out.push_back(graph6_decode(line));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace critgraph
