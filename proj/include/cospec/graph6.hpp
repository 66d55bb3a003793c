#ifndef COSPEC_GRAPH6_HPP
#define COSPEC_GRAPH6_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "cospec/errors.hpp"
#include "cospec/graph.hpp"

namespace cospec {

// graph6: an order header N(n) followed by the upper triangle in column
// order, six bits per byte, each byte offset by 63.

inline std::string graph6_encode(const Graph& g) {
  const auto n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3F)));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw FormatError("graph6: byte " + std::to_string(b) + " outside the printable range 63-126");
  }
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    throw CapExceeded("graph6: eight-byte order header implies order above 64");
  } else {
    if (text.size() < 4) throw FormatError("graph6: truncated order header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    if (n < 63) throw FormatError("graph6: long order header used for order below 63");
    pos = 4;
  }
  if (n == 0) throw FormatError("graph6: order 0 is not supported");
  if (n > Graph::kMaxOrder) throw CapExceeded("graph6: order " + std::to_string(n) + " exceeds 64");

  const auto bit_count = n * (n - 1) / 2;
  const auto byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count)
    throw FormatError("graph6: expected " + std::to_string(byte_count) + " edge bytes, got " +
                      std::to_string(text.size() - pos));

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  if (bit_count % 6 != 0) {
    const auto last = static_cast<unsigned>(text.back() - 63);
    const auto padding = 6 - bit_count % 6;
    if ((last & ((1U << padding) - 1)) != 0) throw FormatError("graph6: nonzero padding bits");
  }
  return g;
}

/// Graphviz text for visualization; never parsed back.
inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cospec

#endif  // COSPEC_GRAPH6_HPP
