#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "circumlab/extremal.hpp"
#include "circumlab/verify.hpp"

namespace circumlab {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

inline Json to_json(const PathSeq& p) { return p.vertices; }

inline Json to_json(const Vine& v) {
  Json out = Json::array();
  for (const VinePath& l : v.paths) {
    out.push_back({{"x_pos", l.start_pos}, {"y_pos", l.end_pos}, {"interior", l.interior}});
  }
  return out;
}

inline Json to_json(const Certificate& c) {
  Json j;
  j["cycle"] = c.cycle.vertices;
  j["length"] = c.length;
  j["construction"] = c.tag();
  j["claimed_bound"] = rational_json(c.claimed_bound);
  j["host_path"] = c.host_path.vertices;
  j["vine"] = c.vine ? to_json(*c.vine) : Json(nullptr);
  return j;
}

inline Json to_json(const QuadraticSurd& b) {
  return {{"rational", b.rational}, {"radicand", b.radicand}, {"den", b.den}, {"exact", b.to_string()},
          {"value", b.value()}};
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["c"] = r.c;
  j["delta"] = r.delta;
  j["kappa"] = r.kappa;
  j["thmA"] = r.thmA;
  j["thmB"] = r.thmB;
  j["thmB_int"] = r.thmB_int;
  j["thm1"] = to_json(r.thm1.bound);
  j["thm1_case"] = std::string(to_string(r.thm1_case));
  j["thm1_tight"] = r.thm1_tight;
  j["thmA_ok"] = r.thmA_ok;
  j["thmB_ok"] = r.thmB_ok;
  j["thm1_ok"] = r.thm1_ok;
  j["thmC_ok"] = r.thmC_ok;
  return j;
}

inline Json to_json(const GraphRecord& g) {
  Json j;
  j["graph6"] = g.graph6;
  j["n"] = g.n;
  j["two_connected"] = g.two_connected;
  j["bounds"] = g.bounds ? to_json(*g.bounds) : Json(nullptr);
  j["min_vine_size"] = g.min_vine_size ? Json(*g.min_vine_size) : Json(nullptr);
  j["certificate_length"] = g.certificate_length ? Json(*g.certificate_length) : Json(nullptr);
  Json v = Json::array();
  for (const auto& [check, detail] : g.violations) v.push_back({{"check", to_string(check)}, {"detail", detail}});
  j["violations"] = std::move(v);
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  Json per_n = Json::object();
  for (auto [n, k] : r.graphs_per_n) per_n[std::to_string(n)] = k;
  j["graphs_per_n"] = std::move(per_n);
  j["total_graphs"] = r.total_graphs();
  Json viol = Json::object();
  for (const auto& [check, list] : r.violations) {
    Json arr = Json::array();
    for (const Violation& v : list) arr.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
    viol[std::string(to_string(check))] = std::move(arr);
  }
  j["violations"] = std::move(viol);
  Json tight = Json::object();
  for (Theorem1Case c : {Theorem1Case::ShortPath, Theorem1Case::MidPath, Theorem1Case::LongPath}) {
    const auto count = [&](const std::map<Theorem1Case, int>& m) {
      auto it = m.find(c);
      return it == m.end() ? 0 : it->second;
    };
    tight[std::string(to_string(c))] = {{"graphs", count(r.case_counts)}, {"tight", count(r.tight_counts)}};
  }
  j["tightness"] = std::move(tight);
  j["thm1_below_thmA"] = r.thm1_below_thmA;
  Json graphs = Json::array();
  for (const GraphRecord& g : r.graphs) graphs.push_back(to_json(g));
  j["graphs"] = std::move(graphs);
  return j;
}

// Columns: graph6,n,p,c,delta,kappa,thm1_case,thm1_bound_num,
// thm1_bound_den_or_radical_form,tight,violations. Rational bounds put the
// integer value in the num column and "1" after it; long-path bounds put the
// rational summand in num and the full exact form after it.
inline std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "graph6,n,p,c,delta,kappa,thm1_case,thm1_bound_num,thm1_bound_den_or_radical_form,tight,violations\n";
  for (const GraphRecord& g : r.graphs) {
    out << '"' << g.graph6 << "\"," << g.n << ',';
    if (g.bounds) {
      const BoundReport& b = *g.bounds;
      out << b.p << ',' << b.c << ',' << b.delta << ',' << b.kappa << ',' << to_string(b.thm1_case) << ',';
      out << b.thm1.bound.rational << ',';
      out << (b.thm1.bound.radicand == 0 ? std::to_string(b.thm1.bound.den) : b.thm1.bound.to_string()) << ',';
      out << (b.thm1_tight ? "true" : "false") << ',';
    } else {
      out << ",,,,,,,,";
    }
    std::string names;
    for (const auto& [check, detail] : g.violations) {
      if (!names.empty()) names += ';';
      names += to_string(check);
    }
    out << names << '\n';
  }
  return out.str();
}

inline std::string to_human(const VerificationReport& r) {
  std::ostringstream out;
  for (const GraphRecord& g : r.graphs) {
    out << g.graph6;
    if (g.bounds) {
      const BoundReport& b = *g.bounds;
      char bound[32];
      std::snprintf(bound, sizeof bound, "%.4f", b.thm1.value());
      out << "  n=" << b.n << " p=" << b.p << " c=" << b.c << " delta=" << b.delta << " kappa=" << b.kappa
          << "  " << to_string(b.thm1_case) << " bound=" << bound << (b.thm1_tight ? " tight" : "");
    } else {
      out << "  n=" << g.n;
    }
    out << (g.violations.empty() ? "  ok" : "  VIOLATION") << '\n';
    for (const auto& [check, detail] : g.violations) out << "    " << to_string(check) << ": " << detail << '\n';
  }
  out << "graphs: " << r.total_graphs() << "  violations: " << r.total_violations() << '\n';
  for (const auto& [c, k] : r.case_counts) {
    const auto it = r.tight_counts.find(c);
    out << "  " << to_string(c) << ": " << k << " graphs, " << (it == r.tight_counts.end() ? 0 : it->second)
        << " tight\n";
  }
  out << "  theorem 1 below theorem A on " << r.thm1_below_thmA << " graphs\n";
  return out.str();
}

inline Json to_json(const SharpnessReport& r) {
  Json rows = Json::array();
  for (const SharpnessRow& row : r.rows) {
    Json j;
    j["delta"] = row.delta;
    j["family"] = row.name;
    j["graph6"] = row.graph6;
    j["measured"] = {{"n", row.measured.n}, {"p", row.measured.p}, {"c", row.measured.c}, {"delta", row.measured.delta}};
    if (row.predicted) {
      j["predicted"] = {{"n", row.predicted->n}, {"p", row.predicted->p}, {"c", row.predicted->c},
                        {"delta", row.predicted->delta}};
    } else {
      j["predicted"] = nullptr;
    }
    j["thm1_case"] = std::string(to_string(row.thm1.kind));
    j["thm1"] = to_json(row.thm1.bound);
    j["prediction_ok"] = row.prediction_ok;
    j["c_at_most_p"] = row.c_at_most_p;
    j["breaks_short_case"] = row.breaks_short_case;
    j["bound_attained"] = row.bound_attained;
    j["breaks_mid_case"] = row.breaks_mid_case;
    rows.push_back(std::move(j));
  }
  return {{"rows", std::move(rows)}, {"ok", r.ok()}};
}

}  // namespace circumlab
