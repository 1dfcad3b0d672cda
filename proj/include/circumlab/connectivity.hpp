#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "circumlab/graph.hpp"

namespace circumlab {

struct BlockDecomposition {
  std::vector<Mask> blocks;  // vertex sets of the biconnected components (bridges included)
  Mask cut_vertices = 0;
};

// Hopcroft-Tarjan on the subgraph induced by `within`.
inline BlockDecomposition block_decomposition(const Graph& g, Mask within) {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  int timer = 0;

  auto dfs = [&](auto& self, Vertex u, Vertex parent) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for_each_bit(g.neighbors(u) & within, [&](Vertex v) {
      if (disc[v] == -1) {
        ++children;
        stack.emplace_back(u, v);
        self(self, v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent != -1 || children > 1) out.cut_vertices |= bit(u);
          Mask block = 0;
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block |= bit(e.first) | bit(e.second);
            if (e == Edge{u, v}) break;
          }
          out.blocks.push_back(block);
        }
      } else if (v != parent && disc[v] < disc[u]) {
        low[u] = std::min(low[u], disc[v]);
        stack.emplace_back(u, v);
      }
    });
  };

  for_each_bit(within, [&](Vertex r) {
    if (disc[r] == -1) dfs(dfs, r, -1);
  });
  return out;
}

inline Mask cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "cut_vertices requires a connected graph");
  return block_decomposition(g, g.vertices()).cut_vertices;
}

inline bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) &&
         block_decomposition(g, g.vertices()).cut_vertices == 0;
}

namespace detail {

// Maximum number of internally vertex-disjoint s-t paths, s and t
// non-adjacent. Unit-capacity max flow on the vertex-split digraph.
inline int disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  const int n = g.order();
  const int nodes = 2 * n;
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
  for (Vertex v = 0; v < n; ++v) {
    at(in(v), out(v)) = (v == s || v == t) ? n : 1;
    for_each_bit(g.neighbors(v), [&](Vertex u) { at(out(v), in(u)) = n; });
  }

  int flow = 0;
  std::vector<int> prev(static_cast<std::size_t>(nodes));
  while (true) {
    std::fill(prev.begin(), prev.end(), -1);
    std::queue<int> q;
    q.push(out(s));
    prev[out(s)] = out(s);
    while (!q.empty() && prev[in(t)] == -1) {
      const int a = q.front();
      q.pop();
      for (int b = 0; b < nodes; ++b) {
        if (prev[b] == -1 && at(a, b) > 0) {
          prev[b] = a;
          q.push(b);
        }
      }
    }
    if (prev[in(t)] == -1) return flow;
    for (int b = in(t); b != out(s); b = prev[b]) {
      --at(prev[b], b);
      ++at(b, prev[b]);
    }
    ++flow;
  }
}

}  // namespace detail

// Vertex connectivity via Menger: the minimum, over non-adjacent pairs, of
// the number of internally disjoint paths. Complete graphs give n-1.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error(Errc::InvalidArgument, "vertex_connectivity requires n >= 2");
  if (!is_connected(g)) return 0;
  int best = min_degree(g);
  // Some vertex among the first best+1 lies outside every minimum separator.
  for (Vertex s = 0; s < n && s <= best; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      best = std::min(best, detail::disjoint_paths(g, s, t));
    }
  }
  return best;
}

struct GraphInvariants {
  int n = 0;
  int delta = 0;
  int kappa = 0;
  bool connected = false;
  bool two_connected = false;
};

inline GraphInvariants compute_invariants(const Graph& g) {
  GraphInvariants inv;
  inv.n = g.order();
  inv.delta = min_degree(g);
  inv.connected = is_connected(g);
  inv.kappa = inv.n >= 2 ? vertex_connectivity(g) : 0;
  inv.two_connected = is_two_connected(g);
  return inv;
}

}  // namespace circumlab
