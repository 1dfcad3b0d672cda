#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "circumlab/graph6.hpp"

namespace circumlab {

inline constexpr int kMaxCanonicalOrder = 10;

namespace detail {

// Branch and bound over vertex orderings that list vertices by
// nonincreasing degree. The adjacency string is built column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), so each placed position fixes a
// prefix and any prefix above the best complete string is cut. For n <= 10
// the whole string fits in 45 bits, compared as an integer.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    std::vector<Vertex> by_degree(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex v : by_degree) slot_degree_.push_back(g.degree(v));
    total_bits_ = n_ * (n_ - 1) / 2;
    order_.resize(static_cast<std::size_t>(n_));
  }

  std::vector<Vertex> run() {
    place(0, 0, 0);
    return best_order_;
  }

 private:
  void place(int j, Mask used, std::uint64_t code) {
    if (j == n_) {
      if (!have_best_ || code < best_code_) {
        have_best_ = true;
        best_code_ = code;
        best_order_ = order_;
      }
      return;
    }
    const int prefix_bits = j * (j + 1) / 2;
    for (Vertex v = 0; v < n_; ++v) {
      if (contains(used, v) || g_.degree(v) != slot_degree_[j]) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < j; ++i) column = (column << 1) | (g_.adjacent(order_[i], v) ? 1U : 0U);
      const std::uint64_t next = (code << j) | column;
      if (have_best_ && next > (best_code_ >> (total_bits_ - prefix_bits))) continue;
      order_[j] = v;
      place(j + 1, used | bit(v), next);
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_ = 0;
  std::vector<int> slot_degree_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_order_;
  std::uint64_t best_code_ = 0;
  bool have_best_ = false;
};

}  // namespace detail

// Relabeling that realises the canonical form.
inline std::vector<Vertex> canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(Errc::Unsupported, "canonical_form supports n <= 10");
  }
  if (g.order() == 0) return {};
  return detail::CanonicalSearch(g).run();
}

inline Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_order(g)); }

// Isomorphism-invariant key: the graph6 string of the relabeling with the
// lexicographically least adjacency string among degree-sorted orderings.
inline std::string canonical_form(const Graph& g) { return graph_to_graph6(canonical_graph(g)); }

}  // namespace circumlab
