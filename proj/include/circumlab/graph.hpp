#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circumlab/error.hpp"

namespace circumlab {

using Vertex = int;
using Mask = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool contains(Mask m, Vertex v) { return (m >> v) & 1U; }

// Visits the set bits of `m` in ascending order.
template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline std::vector<Vertex> to_vertices(Mask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is one
// bitmask per vertex, so the order is capped at kMaxOrder.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  Graph() = default;

  explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n), 0) {}

  Graph(int n, std::vector<Mask> adj) : n_(check_order(n)), adj_(std::move(adj)) {
    if (static_cast<int>(adj_.size()) != n_) {
      throw Error(Errc::InvalidArgument, "adjacency size does not match order");
    }
    const Mask all = low_bits(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if ((adj_[v] & ~all) != 0) throw Error(Errc::InvalidArgument, "neighbor out of range");
      if (contains(adj_[v], v)) throw Error(Errc::InvalidArgument, "self-loop");
      for_each_bit(adj_[v], [&](Vertex u) {
        if (!contains(adj_[u], v)) throw Error(Errc::InvalidArgument, "asymmetric adjacency");
      });
    }
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    std::vector<Mask> adj(static_cast<std::size_t>(check_order(n)), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
        throw Error(Errc::InvalidArgument,
                    "bad edge " + std::to_string(u) + "-" + std::to_string(v));
      }
      adj[u] |= bit(v);
      adj[v] |= bit(u);
    }
    return Graph(n, std::move(adj));
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  Mask vertices() const { return low_bits(n_); }
  Mask neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return contains(adj_[u], v); }
  std::span<const Mask> adjacency() const { return adj_; }

  int size() const {
    int twice = 0;
    for (Mask m : adj_) twice += popcount(m);
    return twice / 2;
  }

  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for_each_bit(adj_[u] & ~low_bits(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
  }

  // A copy with one extra vertex n adjacent to `nbrs`.
  Graph with_vertex(Mask nbrs) const {
    std::vector<Mask> adj = adj_;
    for_each_bit(nbrs, [&](Vertex u) { adj[u] |= bit(n_); });
    adj.push_back(nbrs);
    return Graph(n_ + 1, std::move(adj));
  }

  // Vertex `order[i]` of this graph becomes vertex i of the result.
  Graph relabeled(std::span<const Vertex> order) const {
    std::vector<Vertex> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[order[i]] = i;
    std::vector<Mask> adj(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for_each_bit(adj_[order[i]], [&](Vertex u) { adj[i] |= bit(pos[u]); });
    }
    return Graph(n_, std::move(adj));
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxOrder) {
      throw Error(Errc::Unsupported, "graph order " + std::to_string(n) + " outside 0..62");
    }
    return n;
  }

  int n_ = 0;
  std::vector<Mask> adj_;
};

inline int min_degree(const Graph& g) {
  if (g.order() < 1) throw Error(Errc::InvalidArgument, "min_degree of empty graph");
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

// Vertices reachable from `start` using only vertices in `allowed`
// (start itself is always included).
inline Mask reachable(const Graph& g, Vertex start, Mask allowed) {
  Mask seen = bit(start);
  Mask frontier = seen;
  allowed |= seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable(g, 0, g.vertices()) == g.vertices();
}

// Named constructors used throughout tests and the extremal module.
namespace make {

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

}  // namespace make

}  // namespace circumlab
