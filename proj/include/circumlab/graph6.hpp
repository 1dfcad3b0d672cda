#pragma once

#include <string>
#include <string_view>

#include "circumlab/graph.hpp"

namespace circumlab {

// graph6 with a single size byte (n <= 62). The upper triangle is read
// column by column: x(0,1), x(0,2), x(1,2), x(0,3), ... six bits per byte,
// most significant first, each byte offset by 63, zero padded.

inline Graph graph_from_graph6(std::string_view text) {
  if (text.empty()) throw Error(Errc::MalformedGraph6, "empty record");
  const auto size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte < 63 || size_byte > 126) {
    throw Error(Errc::MalformedGraph6, "size byte outside 63..126");
  }
  if (size_byte == 126) throw Error(Errc::Unsupported, "multi-byte graph6 sizes (n > 62)");
  const int n = size_byte - 63;
  if (n == 0) throw Error(Errc::Unsupported, "graph of order 0");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != body + 1) {
    throw Error(Errc::MalformedGraph6, "expected " + std::to_string(body + 1) + " bytes, got " +
                                           std::to_string(text.size()));
  }
  for (std::size_t i = 1; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw Error(Errc::MalformedGraph6, "byte " + std::to_string(i) + " outside 63..126");
    }
  }

  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  }
  // Nonzero padding would not survive re-encoding.
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw Error(Errc::MalformedGraph6, "nonzero padding bits");
    }
  }
  return Graph(n, std::move(adj));
}

inline std::string graph_to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Error(Errc::Unsupported, "graph6 single size byte requires n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace circumlab
