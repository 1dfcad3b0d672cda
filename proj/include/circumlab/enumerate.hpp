#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "circumlab/canonical.hpp"
#include "circumlab/connectivity.hpp"

namespace circumlab {

inline constexpr int kMaxEnumerationOrder = 8;

// Isomorphism classes of connected graphs, grown one vertex at a time.
// Deleting a non-cut vertex from a connected graph leaves it connected, so
// every class on n vertices is a connected (n-1)-vertex class plus a new
// vertex joined to a nonempty neighbor set. Children are deduplicated by
// canonical form. Each level is kept sorted by canonical graph6.
class GraphCatalog {
 public:
  explicit GraphCatalog(int max_n) {
    if (max_n < 1 || max_n > kMaxCanonicalOrder) {
      throw Error(Errc::Unsupported, "catalog order must be in 1..10");
    }
    connected_.push_back({});
    connected_.push_back({Graph(1)});
    for (int n = 2; n <= max_n; ++n) connected_.push_back(grow(connected_.back()));
  }

  int max_order() const { return static_cast<int>(connected_.size()) - 1; }

  const std::vector<Graph>& connected(int n) const {
    check(n);
    return connected_[static_cast<std::size_t>(n)];
  }

  std::vector<Graph> two_connected(int n) const {
    std::vector<Graph> out;
    for (const Graph& g : connected(n)) {
      if (is_two_connected(g)) out.push_back(g);
    }
    return out;
  }

 private:
  void check(int n) const {
    if (n < 1 || n > max_order()) throw Error(Errc::Unsupported, "order outside catalog");
  }

  static std::vector<Graph> grow(const std::vector<Graph>& parents) {
    std::map<std::string, Graph> children;
    for (const Graph& parent : parents) {
      const Mask all = parent.vertices();
      for (Mask nbrs = 1; nbrs <= all; ++nbrs) {
        const Graph child = canonical_graph(parent.with_vertex(nbrs));
        children.try_emplace(graph_to_graph6(child), child);
      }
    }
    std::vector<Graph> out;
    out.reserve(children.size());
    for (auto& [key, g] : children) out.push_back(std::move(g));
    return out;
  }

  std::vector<std::vector<Graph>> connected_;
};

// One canonical representative per isomorphism class of 2-connected graphs
// on n vertices, 3 <= n <= 8.
inline std::vector<Graph> enumerate_two_connected(int n) {
  if (n < 3 || n > kMaxEnumerationOrder) {
    throw Error(Errc::Unsupported, "enumerate_two_connected supports 3 <= n <= 8");
  }
  return GraphCatalog(n).two_connected(n);
}

inline std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(Errc::Unsupported, "enumerate_connected supports 1 <= n <= 8");
  }
  return GraphCatalog(n).connected(n);
}

}  // namespace circumlab
