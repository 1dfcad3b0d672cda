#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "circumlab/bounds.hpp"
#include "circumlab/cycle_builder.hpp"
#include "circumlab/enumerate.hpp"
#include "circumlab/graph6.hpp"
#include "circumlab/subset_dp.hpp"

namespace circumlab {

enum class Check {
  thmA,
  thmB,
  thm1,
  thmC,
  dominance,  // theorem 1 not weaker than theorem A when p <= 2 delta
  lemma1,
  lemma2,
  lemma3,
  vine,
  certificate,
  oracle,
  roundtrip,
};

inline constexpr std::array kAllChecks = {
    Check::thmA,   Check::thmB,   Check::thm1, Check::thmC,        Check::dominance, Check::lemma1,
    Check::lemma2, Check::lemma3, Check::vine, Check::certificate, Check::oracle,    Check::roundtrip,
};

constexpr std::string_view to_string(Check c) {
  switch (c) {
    case Check::thmA: return "thmA";
    case Check::thmB: return "thmB";
    case Check::thm1: return "thm1";
    case Check::thmC: return "thmC";
    case Check::dominance: return "dominance";
    case Check::lemma1: return "lemma1";
    case Check::lemma2: return "lemma2";
    case Check::lemma3: return "lemma3";
    case Check::vine: return "vine";
    case Check::certificate: return "certificate";
    case Check::oracle: return "oracle";
    case Check::roundtrip: return "roundtrip";
  }
  return "?";
}

inline std::optional<Check> parse_check(std::string_view name) {
  for (Check c : kAllChecks) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

// Checks that only make sense on 2-connected input.
constexpr bool needs_two_connected(Check c) {
  return c != Check::lemma1 && c != Check::oracle && c != Check::roundtrip;
}

using CheckSet = std::set<Check>;

inline CheckSet all_checks() { return CheckSet(kAllChecks.begin(), kAllChecks.end()); }

struct Violation {
  std::string graph6;
  std::string detail;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct GraphRecord {
  std::string graph6;
  int n = 0;
  bool two_connected = false;
  std::optional<BoundReport> bounds;  // present for 2-connected graphs
  std::optional<int> min_vine_size;   // over the longest-path witnesses examined
  std::optional<int> certificate_length;
  bool thm1_below_thmA = false;
  std::vector<std::pair<Check, std::string>> violations;
};

struct VerificationReport {
  std::map<int, int> graphs_per_n;
  std::map<Check, std::vector<Violation>> violations;  // one entry per selected check
  std::map<Theorem1Case, int> case_counts;
  std::map<Theorem1Case, int> tight_counts;  // c == ceil(theorem 1 bound)
  int thm1_below_thmA = 0;
  std::vector<GraphRecord> graphs;  // sorted by graph6

  int total_graphs() const {
    int t = 0;
    for (auto [n, k] : graphs_per_n) t += k;
    return t;
  }

  std::size_t total_violations() const {
    std::size_t t = 0;
    for (const auto& [check, list] : violations) t += list.size();
    return t;
  }

  bool clean() const { return total_violations() == 0; }
};

struct VerifyOptions {
  CheckSet checks = all_checks();
  int witness_cap = 50;
  int jobs = 1;
};

namespace detail {

inline std::string fmt_counts(const BoundReport& r) {
  return "n=" + std::to_string(r.n) + " p=" + std::to_string(r.p) + " c=" + std::to_string(r.c) +
         " delta=" + std::to_string(r.delta) + " kappa=" + std::to_string(r.kappa);
}

inline std::string fmt_path(const PathSeq& p) {
  std::string s = "[";
  for (int i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace detail

// Runs every selected check on one graph. Violations are collected, never
// thrown; only a failed precondition raises PrereqViolation.
inline GraphRecord verify_graph(const Graph& g, const VerifyOptions& opt) {
  const auto want = [&](Check c) { return opt.checks.contains(c); };
  GraphRecord rec;
  rec.graph6 = graph_to_graph6(g);
  rec.n = g.order();
  rec.two_connected = is_two_connected(g);

  const bool gated = std::any_of(opt.checks.begin(), opt.checks.end(), needs_two_connected);
  if (gated && !rec.two_connected) {
    throw Error(Errc::PrereqViolation, rec.graph6 + " is not 2-connected");
  }
  if (want(Check::lemma1) && (g.order() < 3 || !is_connected(g))) {
    throw Error(Errc::PrereqViolation, rec.graph6 + " is not a connected graph on >= 3 vertices");
  }
  auto flag = [&](Check c, std::string detail) { rec.violations.emplace_back(c, std::move(detail)); };

  if (want(Check::roundtrip)) {
    if (graph_from_graph6(rec.graph6) != g) flag(Check::roundtrip, "decode(encode(g)) != g");
  }

  const bool any_solver = opt.checks.size() > (want(Check::roundtrip) ? 1U : 0U);
  if (!any_solver) return rec;

  const LongestPath lp = longest_path(g);
  std::optional<LongestCycle> lc;
  try {
    lc = circumference(g);
  } catch (const Error& e) {
    if (e.code() != Errc::Acyclic) throw;
  }

  if (want(Check::oracle)) {
    if (!is_valid_path(g, lp.witness) || lp.witness.size() != lp.p) {
      flag(Check::oracle, "branch-and-bound path witness invalid");
    }
    if (lc && !is_valid_cycle(g, lc->witness)) flag(Check::oracle, "branch-and-bound cycle witness invalid");
    if (g.order() <= subset_dp::kMaxOrder) {
      const int p_dp = subset_dp::longest_path(g).p;
      if (p_dp != lp.p) {
        flag(Check::oracle, "p: branch-and-bound " + std::to_string(lp.p) + " vs subset DP " +
                                std::to_string(p_dp));
      }
      std::optional<int> c_dp;
      try {
        c_dp = subset_dp::circumference(g).c;
      } catch (const Error& e) {
        if (e.code() != Errc::Acyclic) throw;
      }
      const std::optional<int> c_bnb = lc ? std::optional<int>(lc->c) : std::nullopt;
      if (c_dp != c_bnb) {
        flag(Check::oracle, "c: branch-and-bound " + (c_bnb ? std::to_string(*c_bnb) : "none") +
                                " vs subset DP " + (c_dp ? std::to_string(*c_dp) : "none"));
      }
    }
  }

  int delta = min_degree(g);
  if (rec.two_connected) {
    const BoundReport br = make_bound_report(g.order(), lp.p, lc->c, delta, vertex_connectivity(g));
    rec.bounds = br;
    const std::string counts = detail::fmt_counts(br);
    if (want(Check::thmA) && !br.thmA_ok) flag(Check::thmA, counts + " below min{n,2delta}=" + std::to_string(br.thmA));
    if (want(Check::thmB) && !br.thmB_ok) flag(Check::thmB, counts + " below sqrt(2p)");
    if (want(Check::thm1) && !br.thm1_ok) {
      flag(Check::thm1, counts + " below " + br.thm1.bound.to_string() + " (" +
                            std::string(to_string(br.thm1_case)) + ")");
    }
    if (want(Check::thmC) && !br.thmC_ok) flag(Check::thmC, counts + " fails all three disjuncts");
    rec.thm1_below_thmA = br.thm1.bound.below(br.thmA);
    if (want(Check::dominance) && br.p <= 2 * br.delta && br.thm1.bound.ceil() < br.thmA) {
      flag(Check::dominance, counts + " ceil(thm1)=" + std::to_string(br.thm1.bound.ceil()) +
                                 " < min{n,2delta}=" + std::to_string(br.thmA));
    }
  }

  const bool need_hosts = want(Check::lemma1) || want(Check::lemma2) || want(Check::lemma3) || want(Check::vine);
  if (!need_hosts && !want(Check::certificate)) return rec;

  const std::vector<PathSeq> hosts = need_hosts ? enumerate_longest_paths(g, opt.witness_cap)
                                                : std::vector<PathSeq>{};
  const int p = lp.p;

  if (want(Check::lemma1)) {
    for (const PathSeq& host : hosts) {
      const Lemma1Flags f = lemma1_predicates(g, host);
      if (!(f.crossing_chord || f.degree_sum || f.chord_gap)) continue;
      const std::string where = "host " + detail::fmt_path(host);
      if (!lc) {
        flag(Check::lemma1, where + ": hypothesis holds but graph is acyclic");
        continue;
      }
      if (lc->c != p) {
        flag(Check::lemma1, where + ": hypothesis (i/ii/iii = " + std::to_string(f.crossing_chord) +
                                std::to_string(f.degree_sum) + std::to_string(f.chord_gap) +
                                ") but c=" + std::to_string(lc->c) + " != p=" + std::to_string(p));
      }
      if (f.crossing_chord) {
        const auto cert = crossing_chord_cycle(g, host);
        if (!cert || cert->length != p || !is_valid_cycle(g, cert->cycle)) {
          flag(Check::lemma1, where + ": crossing-chord cycle missing or not of order p");
        } else if (p != g.order()) {
          flag(Check::lemma1, where + ": crossing chord present but p=" + std::to_string(p) +
                                  " != n=" + std::to_string(g.order()));
        }
      }
    }
  }

  const bool need_vines = want(Check::lemma2) || want(Check::lemma3) || want(Check::vine);
  if (need_vines) {
    for (const PathSeq& host : hosts) {
      const std::string where = "host " + detail::fmt_path(host);
      Vine vine;
      try {
        vine = find_minimum_vine(g, host);
      } catch (const Error& e) {
        if (e.code() != Errc::NoVineFound) throw;
        flag(want(Check::vine) ? Check::vine : (want(Check::lemma2) ? Check::lemma2 : Check::lemma3),
             where + ": no vine found");
        continue;
      }
      const int m = vine.size();
      rec.min_vine_size = rec.min_vine_size ? std::min(*rec.min_vine_size, m) : m;

      if (want(Check::vine)) {
        if (auto v = validate_vine(g, host, vine); !v) flag(Check::vine, where + ": minimum vine invalid: " + v.violation);
        try {
          const Vine any = find_any_vine(g, host);
          if (auto v = validate_vine(g, host, any); !v) flag(Check::vine, where + ": greedy vine invalid: " + v.violation);
          if (any.size() < m) flag(Check::vine, where + ": greedy vine smaller than minimum");
        } catch (const Error& e) {
          if (e.code() != Errc::NoVineFound) throw;
          flag(Check::vine, where + ": greedy search found no vine");
        }
      }

      if (want(Check::lemma2)) {
        const auto certs = build_vine_cycles(g, host, vine);
        int longest = 0;
        for (const Certificate& c : certs) {
          longest = std::max(longest, c.length);
          if (Rational(c.length) < c.claimed_bound) {
            flag(Check::lemma2, where + ": " + c.tag() + " shorter than its claimed bound");
          }
        }
        if (m >= 2) {
          const VineCycleFormulas f = vine_cycle_formulas(decompose_segments(host, vine), vine);
          std::vector<int> expected{f.Q1, f.Q2, f.Q3};
          expected.insert(expected.end(), f.R.begin(), f.R.end());
          for (std::size_t k = 0; k < certs.size(); ++k) {
            if (certs[k].length != expected[k]) {
              flag(Check::lemma2, where + ": |" + certs[k].tag() + "|=" + std::to_string(certs[k].length) +
                                      " but formula gives " + std::to_string(expected[k]));
            }
          }
        } else if (certs.front().length != p + static_cast<int>(vine[0].interior.size())) {
          flag(Check::lemma2, where + ": single-path vine cycle has wrong order");
        }
        const Rational bound = lemma2_bound(p, m);
        if (Rational(longest) < bound) {
          flag(Check::lemma2, where + ": longest vine cycle " + std::to_string(longest) + " below (2p-10)/(m+1)+4 with m=" +
                                  std::to_string(m));
        }
      }

      if (want(Check::lemma3)) {
        const int c = lc->c;
        const int dx = g.degree(host.front());
        const int dy = g.degree(host.back());
        if (c != p && c < lemma3_bound(dx, dy, m)) {
          flag(Check::lemma3, where + ": c=" + std::to_string(c) + " < d(x)+d(y)+m-2=" +
                                  std::to_string(lemma3_bound(dx, dy, m)));
        }
      }
    }
  }

  if (want(Check::certificate)) {
    const Certificate cert = best_certificate(g, opt.witness_cap);
    rec.certificate_length = cert.length;
    if (!is_valid_cycle(g, cert.cycle) || cert.length != cert.cycle.size()) {
      flag(Check::certificate, "certificate cycle invalid");
    } else if (!theorem1_satisfied(cert.length, p, delta)) {
      flag(Check::certificate, "certificate " + cert.tag() + " of length " + std::to_string(cert.length) +
                                   " below theorem 1 bound " + rec.bounds->thm1.bound.to_string());
    }
  }
  return rec;
}

// Runs the selected checks over a corpus. Graphs are processed on up to
// `jobs` threads; the report is sorted by graph6 so the output does not
// depend on scheduling.
inline VerificationReport verify_corpus(std::span<const Graph> graphs, const VerifyOptions& opt) {
  if (opt.witness_cap < 1) throw Error(Errc::InvalidArgument, "witness cap must be >= 1");
  // Preconditions first, so a bad corpus fails before any work is done.
  const bool gated = std::any_of(opt.checks.begin(), opt.checks.end(), needs_two_connected);
  for (const Graph& g : graphs) {
    if (gated && !is_two_connected(g)) {
      throw Error(Errc::PrereqViolation, graph_to_graph6(g) + " is not 2-connected");
    }
  }

  std::vector<GraphRecord> records(graphs.size());
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(graphs.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) records[i] = verify_graph(graphs[i], opt);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < graphs.size(); i = next++) {
            try {
              records[i] = verify_graph(graphs[i], opt);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::sort(records.begin(), records.end(),
            [](const GraphRecord& a, const GraphRecord& b) { return a.graph6 < b.graph6; });

  VerificationReport report;
  for (Check c : opt.checks) report.violations[c];
  for (GraphRecord& rec : records) {
    ++report.graphs_per_n[rec.n];
    if (rec.bounds) {
      ++report.case_counts[rec.bounds->thm1_case];
      if (rec.bounds->thm1_tight) ++report.tight_counts[rec.bounds->thm1_case];
    }
    if (rec.thm1_below_thmA) ++report.thm1_below_thmA;
    for (const auto& [check, detail] : rec.violations) {
      report.violations[check].push_back({rec.graph6, detail});
    }
  }
  report.graphs = std::move(records);
  return report;
}

// Lemma 3 read for an arbitrary vine rather than a minimum one: every vine
// on every longest-path witness is tried. Exploratory; callers report the
// counterexamples instead of failing on them.
struct ArbitraryVineExploration {
  int graphs = 0;
  long vines_checked = 0;
  std::vector<Violation> counterexamples;
};

inline ArbitraryVineExploration explore_lemma3_all_vines(std::span<const Graph> graphs, int witness_cap) {
  ArbitraryVineExploration out;
  for (const Graph& g : graphs) {
    ++out.graphs;
    const int c = circumference(g).c;
    const auto hosts = enumerate_longest_paths(g, witness_cap);
    const int p = hosts.front().size();
    if (c == p) {
      for (const PathSeq& host : hosts) out.vines_checked += static_cast<long>(all_vines(g, host, p - 1).size());
      continue;
    }
    for (const PathSeq& host : hosts) {
      const int dx = g.degree(host.front());
      const int dy = g.degree(host.back());
      for (const Vine& v : all_vines(g, host, p - 1)) {
        ++out.vines_checked;
        if (c < lemma3_bound(dx, dy, v.size())) {
          out.counterexamples.push_back({graph_to_graph6(g), "host " + detail::fmt_path(host) + " m=" +
                                                                 std::to_string(v.size()) + " c=" + std::to_string(c)});
        }
      }
    }
  }
  return out;
}

}  // namespace circumlab
