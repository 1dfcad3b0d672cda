#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "circumlab/path.hpp"

namespace circumlab {

// One path of a vine: it leaves the host path at position start_pos, runs
// through `interior` (vertices off the host), and rejoins at end_pos. An
// empty interior means a single chord between the anchors.
struct VinePath {
  int start_pos = 0;
  int end_pos = 0;
  std::vector<Vertex> interior;

  int order() const { return static_cast<int>(interior.size()) + 2; }

  friend auto operator<=>(const VinePath&, const VinePath&) = default;
};

// Anchors interleave along the host:
//   x_1 < x_2 < y_1 <= x_3 < y_2 <= x_4 < ... <= x_m < y_{m-1} < y_m
// with x_1 the first and y_m the last host position.
struct Vine {
  std::vector<VinePath> paths;

  int size() const { return static_cast<int>(paths.size()); }
  const VinePath& operator[](int i) const { return paths[static_cast<std::size_t>(i)]; }

  friend auto operator<=>(const Vine&, const Vine&) = default;
};

struct VineVerdict {
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
};

inline VineVerdict validate_vine(const Graph& g, const PathSeq& host, const Vine& vine) {
  auto fail = [](std::string why) { return VineVerdict{false, std::move(why)}; };
  if (!is_valid_path(g, host)) return fail("host is not a path in the graph");
  const int p = host.size();
  const int m = vine.size();
  if (m == 0) return fail("vine has no paths");

  // Anchor positions first, then the paths themselves.
  for (int i = 0; i < m; ++i) {
    const VinePath& l = vine[i];
    if (l.start_pos < 0 || l.end_pos >= p || l.start_pos >= l.end_pos) {
      return fail("L_" + std::to_string(i + 1) + ": anchors must satisfy 0 <= x < y < |P|");
    }
  }
  for (int i = 1; i < m; ++i) {
    const std::string a = std::to_string(i);
    const std::string b = std::to_string(i + 1);
    if (!(vine[i - 1].start_pos < vine[i].start_pos)) return fail("x_" + a + " < x_" + b + " violated");
    if (!(vine[i].start_pos < vine[i - 1].end_pos)) return fail("x_" + b + " < y_" + a + " violated");
    if (!(vine[i - 1].end_pos < vine[i].end_pos)) return fail("y_" + a + " < y_" + b + " violated");
    if (i >= 2 && !(vine[i - 2].end_pos <= vine[i].start_pos)) {
      return fail("y_" + std::to_string(i - 1) + " <= x_" + b + " violated");
    }
  }
  if (vine[0].start_pos != 0) return fail("x_1 must be the first vertex of the host");
  if (vine[m - 1].end_pos != p - 1) return fail("y_m must be the last vertex of the host");

  const Mask on_host = host.mask();
  Mask used = 0;
  for (int i = 0; i < m; ++i) {
    const VinePath& l = vine[i];
    const std::string name = "L_" + std::to_string(i + 1);
    Vertex prev = host[l.start_pos];
    for (Vertex v : l.interior) {
      if (v < 0 || v >= g.order()) return fail(name + ": interior vertex out of range");
      if (contains(on_host, v)) return fail(name + ": interior vertex lies on the host path");
      if (contains(used, v)) return fail(name + ": interior vertices not disjoint");
      if (!g.adjacent(prev, v)) return fail(name + ": consecutive vertices not adjacent");
      used |= bit(v);
      prev = v;
    }
    if (!g.adjacent(prev, host[l.end_pos])) return fail(name + ": does not reach its end anchor");
    if (l.interior.empty() && l.end_pos == l.start_pos + 1) {
      return fail(name + ": coincides with a host edge");
    }
  }
  return {};
}

namespace detail {

// Backtracking vine search. Anchor positions and interiors are tried in
// lexicographic order unless `farthest_first` is set, in which case each
// path prefers the end anchor furthest along the host.
class VineSearch {
 public:
  VineSearch(const Graph& g, const PathSeq& host)
      : g_(g), host_(host), p_(host.size()), off_(g.vertices() & ~host.mask()) {}

  // Exactly `m` paths; the first vine found is lexicographically least.
  std::optional<Vine> with_size(int m) {
    target_ = m;
    farthest_first_ = false;
    return run();
  }

  // Any number of paths, greedy towards the far end of the host.
  std::optional<Vine> greedy() {
    target_ = 0;
    farthest_first_ = true;
    return run();
  }

 private:
  std::optional<Vine> run() {
    failed_.clear();
    chosen_.clear();
    if (p_ < 2) return std::nullopt;
    if (place(0, 0)) return Vine{chosen_};
    return std::nullopt;
  }

  // Calls f(interior, used') for each off-host connection from position a
  // to position b avoiding `used`, in lexicographic order; stops when f
  // returns true.
  template <typename F>
  bool connect(int a, int b, Mask used, F&& f) {
    const Vertex goal = host_[b];
    std::vector<Vertex> interior;
    auto walk = [&](auto& self, Vertex cur, Mask taken) -> bool {
      if (g_.adjacent(cur, goal) && !(interior.empty() && b == a + 1)) {
        if (f(interior, taken)) return true;
      }
      bool stop = false;
      for_each_bit(g_.neighbors(cur) & off_ & ~taken, [&](Vertex w) {
        if (stop) return;
        const Mask room = off_ & ~taken;
        if ((reachable(g_, w, room) & g_.neighbors(goal)) == 0) return;
        interior.push_back(w);
        stop = self(self, w, taken | bit(w));
        interior.pop_back();
      });
      return stop;
    };
    return walk(walk, host_[a], used);
  }

  bool place(int i, Mask used) {
    const int last = p_ - 1;
    int x_lo = 0;
    int x_hi = 0;
    int y_lo = 1;
    if (i > 0) {
      const VinePath& prev = chosen_.back();
      x_lo = prev.start_pos + 1;
      if (i >= 2) x_lo = std::max(x_lo, chosen_[chosen_.size() - 2].end_pos);
      x_hi = prev.end_pos - 1;
      y_lo = prev.end_pos + 1;
    }
    int y_hi = last;
    if (target_ > 0) {
      if (i == target_ - 1) {
        y_lo = std::max(y_lo, last);
      } else {
        y_hi = last - (target_ - 1 - i);
      }
    }
    if (x_lo > x_hi || y_lo > y_hi) return false;

    const auto key = std::make_tuple(i, i > 0 ? chosen_.back().start_pos : -1,
                                     i > 0 ? chosen_.back().end_pos : -1,
                                     i > 1 ? chosen_[chosen_.size() - 2].end_pos : -1, used);
    if (failed_.contains(key)) return false;

    auto try_anchor = [&](int x, int y) {
      return connect(x, y, used, [&](const std::vector<Vertex>& interior, Mask taken) {
        chosen_.push_back(VinePath{x, y, interior});
        const bool complete = target_ > 0 ? i == target_ - 1 : y == last;
        if (complete || place(i + 1, taken)) return true;
        chosen_.pop_back();
        return false;
      });
    };

    for (int x = x_lo; x <= x_hi; ++x) {
      if (farthest_first_) {
        for (int y = y_hi; y >= std::max(y_lo, x + 1); --y)
          if (try_anchor(x, y)) return true;
      } else {
        for (int y = std::max(y_lo, x + 1); y <= y_hi; ++y)
          if (try_anchor(x, y)) return true;
      }
    }
    failed_.insert(key);
    return false;
  }

  const Graph& g_;
  const PathSeq& host_;
  int p_;
  Mask off_;
  int target_ = 0;
  bool farthest_first_ = false;
  std::vector<VinePath> chosen_;
  std::set<std::tuple<int, int, int, int, Mask>> failed_;
};

}  // namespace detail

// A vine with the fewest paths; lexicographically least among those.
// Iterative deepening on the number of paths. Throws NoVineFound when none
// exists, e.g. when some interior host vertex separates the endpoints.
inline Vine find_minimum_vine(const Graph& g, const PathSeq& host) {
  if (!is_valid_path(g, host)) throw Error(Errc::InvalidArgument, "host is not a path");
  detail::VineSearch search(g, host);
  for (int m = 1; m < host.size(); ++m) {
    if (auto v = search.with_size(m)) return *std::move(v);
  }
  throw Error(Errc::NoVineFound, "no vine on the given host path");
}

inline Vine find_any_vine(const Graph& g, const PathSeq& host) {
  if (!is_valid_path(g, host)) throw Error(Errc::InvalidArgument, "host is not a path");
  detail::VineSearch search(g, host);
  if (auto v = search.greedy()) return *std::move(v);
  throw Error(Errc::NoVineFound, "no vine on the given host path");
}

// Every valid vine with at most `max_paths` paths, by plain generate and
// test: all candidate paths, all sequences with increasing start anchors,
// filtered through validate_vine. Exponential; meant for n <= 7.
inline std::vector<Vine> all_vines(const Graph& g, const PathSeq& host, int max_paths) {
  const int p = host.size();
  const Mask off = g.vertices() & ~host.mask();
  std::vector<VinePath> candidates;
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      std::vector<Vertex> interior;
      auto grow = [&](auto& self, Vertex cur, Mask taken) -> void {
        if (g.adjacent(cur, host[b])) candidates.push_back(VinePath{a, b, interior});
        for_each_bit(g.neighbors(cur) & off & ~taken, [&](Vertex w) {
          interior.push_back(w);
          self(self, w, taken | bit(w));
          interior.pop_back();
        });
      };
      grow(grow, host[a], 0);
    }
  }

  std::vector<Vine> out;
  Vine current;
  auto choose = [&](auto& self, std::size_t from) -> void {
    if (current.size() > 0 && validate_vine(g, host, current)) out.push_back(current);
    if (current.size() == max_paths) return;
    for (std::size_t k = from; k < candidates.size(); ++k) {
      if (current.size() > 0 && candidates[k].start_pos <= current.paths.back().start_pos) continue;
      current.paths.push_back(candidates[k]);
      self(self, k + 1);
      current.paths.pop_back();
    }
  };
  choose(choose, 0);
  return out;
}

}  // namespace circumlab
