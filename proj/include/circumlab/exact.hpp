#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "circumlab/connectivity.hpp"
#include "circumlab/path.hpp"

namespace circumlab {

struct LongestPath {
  int p = 0;
  PathSeq witness;
};

struct LongestCycle {
  int c = 0;
  CycleSeq witness;
};

// Pruned depth-first branch and bound. Vertices are explored in ascending
// order, so the first maximum found is the lexicographically smallest
// witness; branches that can at best tie are cut.
namespace bnb {

namespace detail {

// Vertices lying on some simple path from `from` to `to` inside the subgraph
// induced by `within`: the union of the blocks on the block-cut tree route.
// Returns 0 when the two are disconnected there.
inline Mask route_vertices(const Graph& g, Mask within, Vertex from, Vertex to) {
  const auto blocks = block_decomposition(g, within).blocks;
  const int k = static_cast<int>(blocks.size());
  std::vector<int> prev(static_cast<std::size_t>(k), -2);
  std::deque<int> queue;
  for (int i = 0; i < k; ++i) {
    if (contains(blocks[i], from)) {
      prev[i] = -1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    if (contains(blocks[b], to)) {
      Mask route = 0;
      for (int i = b; i != -1; i = prev[i]) route |= blocks[i];
      return route;
    }
    for (int i = 0; i < k; ++i) {
      if (prev[i] == -2 && (blocks[i] & blocks[b]) != 0) {
        prev[i] = b;
        queue.push_back(i);
      }
    }
  }
  return 0;
}

class PathSearch {
 public:
  explicit PathSearch(const Graph& g) : g_(g) {}

  LongestPath run() {
    const int n = g_.order();
    Mask unseen = g_.vertices();
    while (unseen != 0) {
      const Mask comp = reachable(g_, std::countr_zero(unseen), g_.vertices());
      ceiling_ = std::max(ceiling_, popcount(comp));
      unseen &= ~comp;
    }
    for (Vertex s = 0; s < n && !done_; ++s) {
      path_.assign(1, s);
      extend(s, bit(s));
    }
    return {best_, PathSeq{best_path_}};
  }

 private:
  void extend(Vertex v, Mask visited) {
    const int len = static_cast<int>(path_.size());
    if (len > best_) {
      best_ = len;
      best_path_ = path_;
      if (best_ == ceiling_) {
        done_ = true;
        return;
      }
    }
    const Mask open = g_.neighbors(v) & ~visited;
    if (open == 0) return;
    const int extra = popcount(reachable(g_, v, g_.vertices() & ~visited)) - 1;
    if (len + extra <= best_) return;
    for_each_bit(open, [&](Vertex u) {
      if (done_) return;
      path_.push_back(u);
      extend(u, visited | bit(u));
      path_.pop_back();
    });
  }

  const Graph& g_;
  int ceiling_ = 0;
  int best_ = 0;
  bool done_ = false;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_path_;
};

class CycleSearch {
 public:
  explicit CycleSearch(const Graph& g) : g_(g) {}

  LongestCycle run() {
    for (Mask b : block_decomposition(g_, g_.vertices()).blocks) {
      ceiling_ = std::max(ceiling_, popcount(b));
    }
    if (ceiling_ < 3) throw Error(Errc::Acyclic, "graph has no cycle");
    const int n = g_.order();
    for (Vertex s = 0; s < n && !done_; ++s) {
      allowed_ = g_.vertices() & ~low_bits(s);
      int local = 0;
      for (Mask b : block_decomposition(g_, allowed_).blocks) {
        if (contains(b, s)) local = std::max(local, popcount(b));
      }
      if (local < 3 || local <= best_) continue;
      start_ = s;
      path_.assign(1, s);
      extend(s, bit(s));
    }
    return {best_, CycleSeq{best_cycle_}};
  }

 private:
  void extend(Vertex v, Mask visited) {
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && len > best_ && g_.adjacent(v, start_)) {
      best_ = len;
      best_cycle_ = path_;
      if (best_ == ceiling_) {
        done_ = true;
        return;
      }
    }
    const Mask open = g_.neighbors(v) & allowed_ & ~visited;
    if (open == 0) return;
    if (len >= 2) {
      const Mask within = (allowed_ & ~visited) | bit(v) | bit(start_);
      const Mask route = route_vertices(g_, within, v, start_);
      if (route == 0 || len + popcount(route) - 2 <= best_) return;
    }
    for_each_bit(open, [&](Vertex u) {
      if (done_) return;
      path_.push_back(u);
      extend(u, visited | bit(u));
      path_.pop_back();
    });
  }

  const Graph& g_;
  Mask allowed_ = 0;
  Vertex start_ = 0;
  int ceiling_ = 0;
  int best_ = 0;
  bool done_ = false;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_cycle_;
};

}  // namespace detail

inline LongestPath longest_path(const Graph& g) {
  if (g.order() < 1) throw Error(Errc::InvalidArgument, "longest_path of empty graph");
  return detail::PathSearch(g).run();
}

inline LongestCycle circumference(const Graph& g) { return detail::CycleSearch(g).run(); }

}  // namespace bnb

// Order of a longest path with the lexicographically smallest witness.
inline LongestPath longest_path(const Graph& g) { return bnb::longest_path(g); }

// Order of a longest cycle; throws Acyclic on forests.
inline LongestCycle circumference(const Graph& g) { return bnb::circumference(g); }

inline bool is_hamiltonian(const Graph& g) {
  if (g.order() < 3) throw Error(Errc::InvalidArgument, "is_hamiltonian requires n >= 3");
  try {
    return circumference(g).c == g.order();
  } catch (const Error& e) {
    if (e.code() == Errc::Acyclic) return false;
    throw;
  }
}

// Up to `cap` maximum-order paths in lexicographic order of their vertex
// sequences. A path and its reversal are distinct entries.
inline std::vector<PathSeq> enumerate_longest_paths(const Graph& g, int cap) {
  if (cap < 1) throw Error(Errc::InvalidArgument, "witness cap must be >= 1");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "enumerate_longest_paths");
  const int p = longest_path(g).p;
  std::vector<PathSeq> out;
  std::vector<Vertex> path;

  auto extend = [&](auto& self, Vertex v, Mask visited) -> void {
    const int len = static_cast<int>(path.size());
    if (len == p) {
      out.push_back(PathSeq{path});
      return;
    }
    const int extra = popcount(reachable(g, v, g.vertices() & ~visited)) - 1;
    if (len + extra < p) return;
    for_each_bit(g.neighbors(v) & ~visited, [&](Vertex u) {
      if (static_cast<int>(out.size()) >= cap) return;
      path.push_back(u);
      self(self, u, visited | bit(u));
      path.pop_back();
    });
  };

  for (Vertex s = 0; s < g.order() && static_cast<int>(out.size()) < cap; ++s) {
    path.assign(1, s);
    extend(extend, s, bit(s));
  }
  return out;
}

}  // namespace circumlab
