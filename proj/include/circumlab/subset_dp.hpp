#pragma once

#include <vector>

#include "circumlab/exact.hpp"

namespace circumlab::subset_dp {

// Held-Karp style dynamic programming over vertex subsets, O(2^n n^2).
// Shares no search code with the branch-and-bound engine; it is the oracle
// the faster engine is checked against.

inline constexpr int kMaxOrder = 24;

inline void check_order(const Graph& g) {
  if (g.order() < 1) throw Error(Errc::InvalidArgument, "subset DP on empty graph");
  if (g.order() > kMaxOrder) throw Error(Errc::Unsupported, "subset DP limited to n <= 24");
}

inline LongestPath longest_path(const Graph& g) {
  check_order(g);
  const int n = g.order();
  const std::size_t subsets = std::size_t{1} << n;
  // ends[S]: vertices v such that some path covers exactly S and ends at v.
  std::vector<Mask> ends(subsets, 0);
  for (Vertex v = 0; v < n; ++v) ends[bit(v)] = bit(v);
  Mask best_set = 1;
  for (std::size_t s = 1; s < subsets; ++s) {
    const Mask set = s;
    if (ends[s] == 0) continue;
    if (popcount(set) > popcount(best_set)) best_set = set;
    for (Vertex v = 0; v < n; ++v) {
      if (!contains(ends[s], v)) continue;
      Mask grow = g.neighbors(v) & ~set;
      while (grow != 0) {
        const Vertex u = std::countr_zero(grow);
        grow &= grow - 1;
        ends[set | bit(u)] |= bit(u);
      }
    }
  }

  std::vector<Vertex> rev;
  Mask set = best_set;
  Vertex v = std::countr_zero(ends[set]);
  while (true) {
    rev.push_back(v);
    const Mask rest = set & ~bit(v);
    if (rest == 0) break;
    v = std::countr_zero(ends[rest] & g.neighbors(v));
    set = rest;
  }
  return {popcount(best_set), PathSeq{std::vector<Vertex>(rev.rbegin(), rev.rend())}};
}

inline LongestCycle circumference(const Graph& g) {
  check_order(g);
  const int n = g.order();
  int best = 0;
  std::vector<Vertex> best_cycle;
  std::vector<Mask> ends;
  // Cycles are rooted at their smallest vertex s; the table is indexed by
  // subsets of the vertices above s, shifted down by s+1.
  for (Vertex s = 0; s + 2 < n; ++s) {
    const int width = n - s - 1;
    const std::size_t subsets = std::size_t{1} << width;
    ends.assign(subsets, 0);
    auto shift = [&](Mask m) { return m >> (s + 1); };
    auto unshift = [&](Mask m) { return m << (s + 1); };
    const Mask first = shift(g.neighbors(s) & ~low_bits(s + 1));
    for_each_bit(first, [&](Vertex i) { ends[bit(i)] = bit(i); });
    for (std::size_t idx = 1; idx < subsets; ++idx) {
      if (ends[idx] == 0) continue;
      const Mask set = idx;
      const int len = popcount(set) + 1;
      if (len >= 3 && len > best && (unshift(ends[idx]) & g.neighbors(s)) != 0) {
        best = len;
        std::vector<Vertex> rev;
        Mask cur = set;
        Vertex v = std::countr_zero(unshift(ends[idx]) & g.neighbors(s)) - (s + 1);
        while (true) {
          rev.push_back(v + s + 1);
          const Mask rest = cur & ~bit(v);
          if (rest == 0) break;
          v = std::countr_zero(ends[rest] & shift(g.neighbors(v + s + 1)));
          cur = rest;
        }
        best_cycle.assign(1, s);
        best_cycle.insert(best_cycle.end(), rev.rbegin(), rev.rend());
      }
      for_each_bit(ends[idx], [&](Vertex v) {
        for_each_bit(shift(g.neighbors(v + s + 1)) & ~set,
                     [&](Vertex u) { ends[set | bit(u)] |= bit(u); });
      });
    }
  }
  if (best == 0) throw Error(Errc::Acyclic, "graph has no cycle");
  return {best, CycleSeq{best_cycle}};
}

}  // namespace circumlab::subset_dp
