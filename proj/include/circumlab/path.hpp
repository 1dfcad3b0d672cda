#pragma once

#include <compare>
#include <vector>

#include "circumlab/graph.hpp"

namespace circumlab {

// Ordered distinct vertices, consecutive ones adjacent. Positions in
// `vertices` are what the vine code compares when it orders anchors.
struct PathSeq {
  std::vector<Vertex> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  Vertex operator[](int i) const { return vertices[static_cast<std::size_t>(i)]; }

  Mask mask() const {
    Mask m = 0;
    for (Vertex v : vertices) m |= bit(v);
    return m;
  }

  friend auto operator<=>(const PathSeq&, const PathSeq&) = default;
};

// Cyclic vertex sequence of length >= 3; the last vertex is adjacent to the first.
struct CycleSeq {
  std::vector<Vertex> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  Vertex operator[](int i) const { return vertices[static_cast<std::size_t>(i)]; }

  friend auto operator<=>(const CycleSeq&, const CycleSeq&) = default;
};

inline bool distinct_in_range(const Graph& g, const std::vector<Vertex>& vs) {
  Mask seen = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order() || contains(seen, v)) return false;
    seen |= bit(v);
  }
  return true;
}

inline bool is_valid_path(const Graph& g, const PathSeq& p) {
  if (p.vertices.empty() || !distinct_in_range(g, p.vertices)) return false;
  for (int i = 0; i + 1 < p.size(); ++i) {
    if (!g.adjacent(p[i], p[i + 1])) return false;
  }
  return true;
}

inline bool is_valid_cycle(const Graph& g, const CycleSeq& c) {
  if (c.size() < 3 || !distinct_in_range(g, c.vertices)) return false;
  for (int i = 0; i < c.size(); ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

}  // namespace circumlab
