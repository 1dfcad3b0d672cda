#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "circumlab/bounds.hpp"
#include "circumlab/exact.hpp"
#include "circumlab/vines.hpp"

namespace circumlab {

// Closed range of host positions [from, to].
struct Segment {
  int from = 0;
  int to = 0;

  int edges() const { return to - from; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Host path split at the vine anchors (m >= 2):
//   A_1 = [x_1, x_2], A_i = [y_{i-1}, x_{i+1}] for 1 < i < m, A_m = [y_{m-1}, y_m]
//   B_i = [x_{i+1}, y_i]
// a_i and b_i are the edge counts. The segments tile the host, so
// sum(a) + sum(b) = p - 1.
struct SegmentDecomposition {
  std::vector<Segment> A;
  std::vector<Segment> B;
  std::vector<int> a;
  std::vector<int> b;
};

inline SegmentDecomposition decompose_segments(const PathSeq& host, const Vine& vine) {
  const int m = vine.size();
  if (m < 2) throw Error(Errc::VineTooSmall, "segment decomposition needs at least two vine paths");
  (void)host;
  auto x = [&](int i) { return vine[i - 1].start_pos; };  // 1-based like the anchors
  auto y = [&](int i) { return vine[i - 1].end_pos; };
  SegmentDecomposition d;
  d.A.push_back({x(1), x(2)});
  for (int i = 2; i <= m - 1; ++i) d.A.push_back({y(i - 1), x(i + 1)});
  d.A.push_back({y(m - 1), y(m)});
  for (int i = 1; i <= m - 1; ++i) d.B.push_back({x(i + 1), y(i)});
  for (const Segment& s : d.A) d.a.push_back(s.edges());
  for (const Segment& s : d.B) d.b.push_back(s.edges());
  return d;
}

enum class Construction { Q1, Q2, Q3, R, CrossingChord, Raw };

struct Certificate {
  CycleSeq cycle;
  int length = 0;
  Construction construction = Construction::Raw;
  int r_index = 0;  // i for R_i
  Rational claimed_bound{0};
  PathSeq host_path;
  std::optional<Vine> vine;

  std::string tag() const {
    switch (construction) {
      case Construction::Q1: return "Q1";
      case Construction::Q2: return "Q2";
      case Construction::Q3: return "Q3";
      case Construction::R: return "R(" + std::to_string(r_index) + ")";
      case Construction::CrossingChord: return "CrossingChord";
      case Construction::Raw: return "Raw";
    }
    return "?";
  }
};

namespace detail {

// Collects edges, then checks they form one simple cycle before turning
// them into a vertex sequence.
class EdgeUnion {
 public:
  explicit EdgeUnion(const Graph& g) : g_(g) {}

  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(std::min(u, v), std::max(u, v)); }

  void add_segment(const PathSeq& host, Segment s) {
    for (int k = s.from; k < s.to; ++k) add_edge(host[k], host[k + 1]);
  }

  void add_vine_path(const PathSeq& host, const VinePath& l) {
    Vertex prev = host[l.start_pos];
    for (Vertex v : l.interior) {
      add_edge(prev, v);
      prev = v;
    }
    add_edge(prev, host[l.end_pos]);
  }

  // Starts at the smallest vertex and leaves through its smaller neighbor.
  CycleSeq sequence() const {
    const std::set<Edge> unique(edges_.begin(), edges_.end());
    if (unique.size() != edges_.size()) throw Error(Errc::DegenerateUnion, "repeated edge");
    std::vector<Mask> nbr(static_cast<std::size_t>(g_.order()), 0);
    Mask touched = 0;
    for (auto [u, v] : edges_) {
      if (!g_.adjacent(u, v)) throw Error(Errc::DegenerateUnion, "edge not in graph");
      nbr[u] |= bit(v);
      nbr[v] |= bit(u);
      touched |= bit(u) | bit(v);
    }
    if (popcount(touched) < 3) throw Error(Errc::DegenerateUnion, "fewer than three vertices");
    bool regular = true;
    for_each_bit(touched, [&](Vertex v) { regular = regular && popcount(nbr[v]) == 2; });
    if (!regular) throw Error(Errc::DegenerateUnion, "union is not 2-regular");

    const Vertex start = std::countr_zero(touched);
    CycleSeq out;
    Vertex prev = -1;
    Vertex cur = start;
    do {
      out.vertices.push_back(cur);
      Mask options = nbr[cur];
      if (prev >= 0) options &= ~bit(prev);
      const Vertex next = std::countr_zero(options);
      prev = cur;
      cur = next;
    } while (cur != start);
    if (out.size() != popcount(touched)) throw Error(Errc::DegenerateUnion, "union is disconnected");
    return out;
  }

 private:
  const Graph& g_;
  std::vector<Edge> edges_;
};

}  // namespace detail

// Lengths of the vine cycles as predicted by the segment counts, computed
// without assembling anything. Index 0..m-3 of `R` is R_1..R_{m-2}.
struct VineCycleFormulas {
  int Q1 = 0;
  int Q2 = 0;
  int Q3 = 0;
  std::vector<int> R;
};

inline VineCycleFormulas vine_cycle_formulas(const SegmentDecomposition& d, const Vine& v) {
  const int m = v.size();
  auto a = [&](int i) { return d.a[i - 1]; };
  auto b = [&](int i) { return d.b[i - 1]; };
  auto l = [&](int i) { return v[i - 1].order() - 1; };
  VineCycleFormulas f;
  for (int i = 1; i <= m; ++i) f.Q1 += a(i) + l(i);
  f.Q2 = b(m - 1);
  for (int i = 1; i <= m - 1; ++i) f.Q2 += a(i) + l(i);
  f.Q3 = b(1);
  for (int i = 2; i <= m; ++i) f.Q3 += a(i) + l(i);
  for (int i = 1; i <= m - 2; ++i) f.R.push_back(b(i) + a(i + 1) + b(i + 1) + l(i + 1));
  return f;
}

// The cycles assembled from a vine and the host segments:
//   Q1 = all A_i and all L_i
//   Q2 = A_1..A_{m-1}, B_{m-1}, L_1..L_{m-1}
//   Q3 = A_2..A_m, B_1, L_2..L_m
//   R_i = B_i, A_{i+1}, B_{i+1}, L_{i+1}   (1 <= i <= m-2)
// Each certificate's claimed bound is the lower estimate obtained from
// |L_i| >= 2. With a single path the result is host plus L_1.
inline std::vector<Certificate> build_vine_cycles(const Graph& g, const PathSeq& host,
                                                  const Vine& vine) {
  const int m = vine.size();
  auto make = [&](const detail::EdgeUnion& u, Construction kind, int r_index, std::int64_t claim) {
    Certificate c;
    c.cycle = u.sequence();
    c.length = c.cycle.size();
    c.construction = kind;
    c.r_index = r_index;
    c.claimed_bound = Rational(claim);
    c.host_path = host;
    c.vine = vine;
    if (!is_valid_cycle(g, c.cycle)) throw Error(Errc::DegenerateUnion, "assembled cycle invalid");
    return c;
  };

  std::vector<Certificate> out;
  if (m == 1) {
    detail::EdgeUnion u(g);
    u.add_segment(host, {0, host.size() - 1});
    u.add_vine_path(host, vine[0]);
    out.push_back(make(u, Construction::Q1, 0, host.size()));
    return out;
  }

  const SegmentDecomposition d = decompose_segments(host, vine);
  auto A = [&](int i) { return d.A[i - 1]; };
  auto B = [&](int i) { return d.B[i - 1]; };
  auto L = [&](int i) -> const VinePath& { return vine[i - 1]; };
  auto a = [&](int i) { return std::int64_t{d.a[i - 1]}; };
  auto b = [&](int i) { return std::int64_t{d.b[i - 1]}; };

  {
    detail::EdgeUnion u(g);
    std::int64_t claim = m;
    for (int i = 1; i <= m; ++i) {
      u.add_segment(host, A(i));
      u.add_vine_path(host, L(i));
      claim += a(i);
    }
    out.push_back(make(u, Construction::Q1, 0, claim));
  }
  {
    detail::EdgeUnion u(g);
    std::int64_t claim = b(m - 1) + m - 1;
    for (int i = 1; i <= m - 1; ++i) {
      u.add_segment(host, A(i));
      u.add_vine_path(host, L(i));
      claim += a(i);
    }
    u.add_segment(host, B(m - 1));
    out.push_back(make(u, Construction::Q2, 0, claim));
  }
  {
    detail::EdgeUnion u(g);
    std::int64_t claim = b(1) + m - 1;
    for (int i = 2; i <= m; ++i) {
      u.add_segment(host, A(i));
      u.add_vine_path(host, L(i));
      claim += a(i);
    }
    u.add_segment(host, B(1));
    out.push_back(make(u, Construction::Q3, 0, claim));
  }
  for (int i = 1; i <= m - 2; ++i) {
    detail::EdgeUnion u(g);
    u.add_segment(host, B(i));
    u.add_segment(host, A(i + 1));
    u.add_segment(host, B(i + 1));
    u.add_vine_path(host, L(i + 1));
    out.push_back(make(u, Construction::R, i, b(i) + a(i + 1) + b(i + 1) + 1));
  }
  return out;
}

// With x, y the host endpoints: if xz and yz^- are edges for some z after
// x, the cycle x z ... y z^- ... x^+ covers the whole host.
inline std::optional<Certificate> crossing_chord_cycle(const Graph& g, const PathSeq& host) {
  const int p = host.size();
  if (p < 3) return std::nullopt;
  const Vertex x = host.front();
  const Vertex y = host.back();
  for (int k = 1; k < p; ++k) {
    if (!g.adjacent(x, host[k]) || !g.adjacent(y, host[k - 1])) continue;
    Certificate c;
    c.cycle.vertices.push_back(x);
    for (int i = k; i < p; ++i) c.cycle.vertices.push_back(host[i]);
    for (int i = k - 1; i >= 1; --i) c.cycle.vertices.push_back(host[i]);
    c.length = c.cycle.size();
    c.construction = Construction::CrossingChord;
    c.claimed_bound = Rational(p);
    c.host_path = host;
    return c;
  }
  return std::nullopt;
}

// Hypotheses under which a longest path with endpoints x, y closes into a
// cycle through all of its vertices.
struct Lemma1Flags {
  bool crossing_chord = false;  // xz, yz^- in E for some z
  bool degree_sum = false;      // d(x) + d(y) >= p
  bool chord_gap = false;       // yz1, xz2 in E, no x/y chords strictly between, degree sum large enough
};

inline Lemma1Flags lemma1_predicates(const Graph& g, const PathSeq& host) {
  Lemma1Flags f;
  const int p = host.size();
  if (p < 2) return f;
  const Vertex x = host.front();
  const Vertex y = host.back();
  const int degree_sum = g.degree(x) + g.degree(y);
  for (int k = 1; k < p; ++k) {
    f.crossing_chord = f.crossing_chord || (g.adjacent(x, host[k]) && g.adjacent(y, host[k - 1]));
  }
  f.degree_sum = degree_sum >= p;
  for (int i = 1; i <= p - 2 && !f.chord_gap; ++i) {
    if (!g.adjacent(y, host[i])) continue;
    for (int j = i + 2; j <= p - 2; ++j) {
      if (!g.adjacent(x, host[j])) continue;
      bool clear = true;
      for (int k = i + 1; k < j; ++k) {
        clear = clear && !g.adjacent(x, host[k]) && !g.adjacent(y, host[k]);
      }
      if (clear && degree_sum >= p + 3 - (j - i + 1)) {
        f.chord_gap = true;
        break;
      }
    }
  }
  return f;
}

// A certificate for a concrete cycle that was found some other way.
inline Certificate raw_certificate(const Graph& g, const CycleSeq& cycle) {
  if (!is_valid_cycle(g, cycle)) throw Error(Errc::InvalidArgument, "not a cycle of the graph");
  Certificate c;
  c.cycle = cycle;
  c.length = cycle.size();
  c.construction = Construction::Raw;
  c.claimed_bound = Rational(cycle.size());
  return c;
}

// Longest cycle obtainable from the constructions alone: a crossing chord
// on any longest-path witness, else the best vine cycle over the minimum
// vines of the witnesses. Earliest witness wins ties.
inline Certificate best_certificate(const Graph& g, int witness_cap = 50) {
  const auto hosts = enumerate_longest_paths(g, witness_cap);
  for (const PathSeq& host : hosts) {
    if (auto c = crossing_chord_cycle(g, host)) return *std::move(c);
  }
  std::optional<Certificate> best;
  for (const PathSeq& host : hosts) {
    for (Certificate& c : build_vine_cycles(g, host, find_minimum_vine(g, host))) {
      if (!best || c.length > best->length) best = std::move(c);
    }
  }
  return *std::move(best);
}

}  // namespace circumlab
