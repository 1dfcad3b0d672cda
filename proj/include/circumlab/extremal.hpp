#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circumlab/bounds.hpp"
#include "circumlab/graph6.hpp"
#include "circumlab/subset_dp.hpp"

namespace circumlab {

struct Invariants4 {
  int n = 0;
  int p = 0;
  int c = 0;
  int delta = 0;

  friend bool operator==(const Invariants4&, const Invariants4&) = default;
};

enum class Family { CompleteBipartite, CliqueJoin };

// A member of one of the extremal families. `predicted` is set only for the
// parameter choices whose invariants are known in closed form.
struct FamilySpec {
  Family family = Family::CompleteBipartite;
  std::vector<int> params;
  std::optional<Invariants4> predicted;

  std::string name() const {
    if (family == Family::CompleteBipartite) {
      return "K_{" + std::to_string(params[0]) + "," + std::to_string(params[1]) + "}";
    }
    return "K_" + std::to_string(params[0]) + "+" + std::to_string(params[1]) + "K_" +
           std::to_string(params[2]);
  }
};

struct FamilyMember {
  Graph graph;
  FamilySpec spec;
};

// K_{a,b}. For b = a+1: n = p = 2a+1, c = 2a, delta = a.
inline FamilyMember complete_bipartite(int a, int b) {
  if (a < 2 || b < a) throw Error(Errc::InvalidArgument, "complete_bipartite requires 2 <= a <= b");
  FamilyMember m{make::complete_bipartite(a, b), {Family::CompleteBipartite, {a, b}, std::nullopt}};
  if (b == a + 1) m.spec.predicted = Invariants4{2 * a + 1, 2 * a + 1, 2 * a, a};
  return m;
}

// K_m joined with t disjoint copies of K_s; hubs are vertices 0..m-1.
// For (2, 3, d-1): n = p = 3d-1, c = 2d, delta = d.
inline FamilyMember clique_join(int m, int t, int s) {
  if (m < 1 || t < 1 || s < 1) throw Error(Errc::InvalidArgument, "clique_join requires m, t, s >= 1");
  const int n = m + t * s;
  std::vector<Edge> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  for (int k = 0; k < t; ++k) {
    const int base = m + k * s;
    for (int u = 0; u < s; ++u)
      for (int v = u + 1; v < s; ++v) edges.emplace_back(base + u, base + v);
  }
  FamilyMember member{Graph::from_edges(n, edges), {Family::CliqueJoin, {m, t, s}, std::nullopt}};
  if (m == 2 && t == 3) {
    const int d = s + 1;
    member.spec.predicted = Invariants4{3 * d - 1, 3 * d - 1, 2 * d, d};
  }
  return member;
}

// Family members reach n = 17, beyond comfortable branch and bound on
// these very symmetric graphs, so the subset DP engine measures them.
// c is 0 for a forest.
inline Invariants4 measure(const Graph& g) {
  int c = 0;
  try {
    c = subset_dp::circumference(g).c;
  } catch (const Error& e) {
    if (e.code() != Errc::Acyclic) throw;
  }
  return {g.order(), subset_dp::longest_path(g).p, c, min_degree(g)};
}

struct SharpnessRow {
  int delta = 0;
  std::string name;
  std::string graph6;
  Invariants4 measured;
  std::optional<Invariants4> predicted;
  Theorem1Bound thm1;
  bool prediction_ok = false;
  // Claims checked on this row (unused ones stay true).
  bool c_at_most_p = true;          // c never exceeds p
  bool breaks_short_case = true;    // K_{d,d+1}: p = 2d+1 and c = p-1
  bool bound_attained = true;       // c equals the bound exactly
  bool breaks_mid_case = true;      // K_2+3K_{d-1}: c = 2d <= p-2 for d >= 3

  bool ok() const {
    return prediction_ok && c_at_most_p && breaks_short_case && bound_attained && breaks_mid_case;
  }
};

struct SharpnessReport {
  std::vector<SharpnessRow> rows;

  bool ok() const {
    for (const SharpnessRow& r : rows)
      if (!r.ok()) return false;
    return true;
  }
};

// Bound equals c exactly: the value is an integer and matches c.
inline bool bound_attained_exactly(const Theorem1Bound& b, int c) {
  return b.bound.is_integer() && b.bound.ceil() == c;
}

inline SharpnessReport sharpness_suite(int delta_min = 2, int delta_max = 6) {
  SharpnessReport report;
  for (int d = delta_min; d <= delta_max; ++d) {
    for (const FamilyMember& member : {complete_bipartite(d, d + 1), clique_join(2, 3, d - 1)}) {
      SharpnessRow row;
      row.delta = d;
      row.name = member.spec.name();
      row.graph6 = graph_to_graph6(member.graph);
      row.measured = measure(member.graph);
      row.predicted = member.spec.predicted;
      row.prediction_ok = row.predicted && *row.predicted == row.measured;
      row.thm1 = theorem1_bound(row.measured.p, row.measured.delta);
      const int p = row.measured.p;
      const int c = row.measured.c;
      row.c_at_most_p = c <= p;
      row.bound_attained = bound_attained_exactly(row.thm1, c);
      if (member.spec.family == Family::CompleteBipartite) {
        row.breaks_short_case = p == 2 * d + 1 && c == p - 1;
      } else {
        row.breaks_mid_case = p == 3 * d - 1 && c == 2 * d && (d < 3 || c <= p - 2);
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace circumlab
