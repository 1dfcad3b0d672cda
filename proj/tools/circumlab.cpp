// circumlab: circumference bound verification and certificate tool.
//
// Exit codes: 0 all checks pass, 1 usage or input error, 2 a bound or
// lemma check was violated.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "circumlab/circumlab.hpp"

namespace {

using namespace circumlab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

struct RunConfig {
  std::string input;  // empty or "-" reads stdin
  int max_n = 0;      // > 0 selects the built-in enumerator
  std::string checks = "all";
  std::string format = "json";
  int jobs = 0;
  int witness_cap = 50;
  bool deterministic = false;
  // extremal / compare-bounds
  int delta_max = 0;
  int p_max = 0;
  bool emit_graph6 = false;
  bool summary = false;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int resolve_jobs(const RunConfig& cfg) {
  if (cfg.deterministic) return 1;
  if (cfg.jobs > 0) return cfg.jobs;
  if (const char* env = std::getenv("CIRCUMLAB_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

CheckSet parse_checks(const std::string& spec) {
  if (spec == "all") return all_checks();
  CheckSet out;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    const auto c = parse_check(name);
    if (!c) throw InputError("unknown check '" + name + "'");
    out.insert(*c);
  }
  if (out.empty()) throw InputError("no checks selected");
  return out;
}

struct Record {
  int line = 0;
  Graph graph;
};

std::vector<Record> read_graph6(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw InputError("cannot open " + path);
    in = &file;
  }
  std::vector<Record> out;
  std::string line;
  int number = 0;
  while (std::getline(*in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back({number, graph_from_graph6(line)});
    } catch (const Error& e) {
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> load_corpus(const RunConfig& cfg, const CheckSet& checks) {
  std::vector<Graph> graphs;
  if (cfg.max_n > 0) {
    if (cfg.max_n < 3 || cfg.max_n > kMaxEnumerationOrder) throw InputError("--max-n must be in 3..8");
    const GraphCatalog catalog(cfg.max_n);
    const bool gated = std::any_of(checks.begin(), checks.end(), needs_two_connected);
    for (int n = 3; n <= cfg.max_n; ++n) {
      const auto level = gated ? catalog.two_connected(n) : catalog.connected(n);
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
    return graphs;
  }
  const bool gated = std::any_of(checks.begin(), checks.end(), needs_two_connected);
  for (Record& r : read_graph6(cfg.input)) {
    const std::string where = "line " + std::to_string(r.line) + ": " + graph_to_graph6(r.graph);
    if (gated && !is_two_connected(r.graph)) throw InputError(where + " is not 2-connected");
    if (checks.contains(Check::lemma1) && (r.graph.order() < 3 || !is_connected(r.graph))) {
      throw InputError(where + " is not connected");
    }
    graphs.push_back(std::move(r.graph));
  }
  return graphs;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.checks = parse_checks(cfg.checks);
  opt.witness_cap = cfg.witness_cap;
  opt.jobs = resolve_jobs(cfg);
  const std::vector<Graph> graphs = load_corpus(cfg, opt.checks);
  const VerificationReport report = verify_corpus(graphs, opt);
  if (cfg.format == "csv") {
    std::cout << to_csv(report);
  } else if (cfg.format == "human") {
    std::cout << to_human(report);
  } else {
    std::cout << to_json(report).dump(2) << '\n';
  }
  return report.clean() ? kExitOk : kExitViolation;
}

int cmd_certificate(const RunConfig& cfg) {
  const auto records = read_graph6(cfg.input);
  if (records.size() != 1) throw InputError("certificate expects exactly one graph6 record");
  const Graph& g = records.front().graph;
  if (!is_two_connected(g)) throw InputError("line " + std::to_string(records.front().line) + ": not 2-connected");

  const LongestPath lp = longest_path(g);
  const LongestCycle lc = circumference(g);
  const int delta = min_degree(g);
  const Certificate cert = best_certificate(g, cfg.witness_cap);
  const Theorem1Bound bound = theorem1_bound(lp.p, delta);
  const bool ok = theorem1_satisfied(cert.length, lp.p, delta);

  Json j;
  j["graph6"] = graph_to_graph6(g);
  j["n"] = g.order();
  j["p"] = lp.p;
  j["c"] = lc.c;
  j["delta"] = delta;
  j["thm1_case"] = std::string(to_string(bound.kind));
  j["thm1_bound"] = to_json(bound.bound);
  j["certificate"] = to_json(cert);
  j["witnesses_bound"] = ok;
  Json cycles = Json::array();
  if (cert.vine) {
    for (const Certificate& c : build_vine_cycles(g, cert.host_path, *cert.vine)) {
      cycles.push_back({{"construction", c.tag()}, {"length", c.length}, {"claimed_bound", rational_json(c.claimed_bound)}});
    }
    j["lemma2_bound"] = rational_json(lemma2_bound(lp.p, cert.vine->size()));
  }
  j["vine_cycles"] = std::move(cycles);
  j["longest_cycle"] = lc.witness.vertices;

  if (cfg.format == "human") {
    std::cout << j["graph6"].get<std::string>() << "  p=" << lp.p << " c=" << lc.c << " delta=" << delta
              << "  certificate " << cert.tag() << " length " << cert.length << " vs bound "
              << bound.bound.to_string() << (ok ? "  ok" : "  VIOLATION") << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_extremal(const RunConfig& cfg) {
  const SharpnessReport report = sharpness_suite(2, cfg.delta_max);
  if (cfg.emit_graph6) {
    for (const SharpnessRow& row : report.rows) std::cout << row.graph6 << '\n';
    return report.ok() ? kExitOk : kExitViolation;
  }
  if (cfg.format == "csv") {
    std::cout << "delta,family,graph6,n,p,c,thm1_case,thm1_bound,ok\n";
    for (const SharpnessRow& r : report.rows) {
      std::cout << r.delta << ',' << r.name << ",\"" << r.graph6 << "\"," << r.measured.n << ',' << r.measured.p
                << ',' << r.measured.c << ',' << to_string(r.thm1.kind) << ',' << r.thm1.bound.to_string() << ','
                << (r.ok() ? "true" : "false") << '\n';
    }
  } else if (cfg.format == "human") {
    for (const SharpnessRow& r : report.rows) {
      std::cout << "delta=" << r.delta << "  " << r.name << "  n=" << r.measured.n << " p=" << r.measured.p
                << " c=" << r.measured.c << "  " << to_string(r.thm1.kind) << " bound " << r.thm1.bound.to_string()
                << (r.ok() ? "  ok" : "  FAILED") << '\n';
    }
  } else {
    std::cout << to_json(report).dump(2) << '\n';
  }
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_compare_bounds(const RunConfig& cfg) {
  if (cfg.delta_max < 2 || cfg.p_max < 3) throw InputError("grid needs --delta-max >= 2 and --p-max >= 3");
  long rows = 0;
  long failures = 0;
  std::string line;
  if (!cfg.summary) std::cout << "delta,p,thmB,thm1,case,thm1_minus_thmB\n";
  char buf[160];
  for (int d = 2; d <= cfg.delta_max; ++d) {
    for (int p = 3; p <= cfg.p_max; ++p) {
      const Theorem1Bound b = theorem1_bound(p, d);
      const double thm_b = dirac_path_bound(p);
      const bool dominates = theorem1_dominates_B(p, d);
      ++rows;
      if (!dominates) ++failures;
      if (!cfg.summary) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.10g,%.10g,%s,%.10g\n", d, p, thm_b, b.value(),
                      std::string(to_string(b.kind)).c_str(), b.value() - thm_b);
        std::cout << buf;
      }
    }
  }
  if (cfg.summary) std::cout << "rows=" << rows << " thm1_not_above_thmB=" << failures << '\n';
  return failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circumference lower bounds: exact solvers, vine certificates, exhaustive verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("--jobs", cfg.jobs, "Worker threads (default: CIRCUMLAB_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--witness-cap", cfg.witness_cap, "Longest-path witnesses examined per graph")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--deterministic", cfg.deterministic, "Run sequentially");
  };

  auto* verify = app.add_subcommand("verify", "Check every bound and lemma on graph6 input");
  verify->add_option("--input", cfg.input, "graph6 file, one record per line (default stdin)");
  verify->add_option("--max-n", cfg.max_n, "Use the built-in enumerator for 3 <= n <= max-n instead of input");
  verify->add_option("--checks", cfg.checks, "Comma-separated checks or 'all'");
  common(verify);

  auto* enumerate = app.add_subcommand("enumerate-verify", "Verify all 2-connected graphs up to --max-n");
  enumerate->add_option("--max-n", cfg.max_n, "Largest order (3..8, default 7)");
  enumerate->add_option("--checks", cfg.checks, "Comma-separated checks or 'all'");
  common(enumerate);

  auto* certificate = app.add_subcommand("certificate", "Construct a cycle certificate for one graph");
  certificate->add_option("--input", cfg.input, "graph6 file (default stdin)");
  common(certificate);

  auto* extremal = app.add_subcommand("extremal", "Build the extremal families and check their sharpness");
  extremal->add_option("--delta-max", cfg.delta_max, "Largest minimum degree (default 6)");
  extremal->add_flag("--emit-graph6", cfg.emit_graph6, "Print the family members as graph6 only");
  common(extremal);

  auto* compare = app.add_subcommand("compare-bounds", "Tabulate theorem 1 against sqrt(2p) on a grid");
  compare->add_option("--delta-max", cfg.delta_max, "Largest delta (default 50)");
  compare->add_option("--p-max", cfg.p_max, "Largest p (default 10000)");
  compare->add_flag("--summary", cfg.summary, "Print only the row and failure counts");
  common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*verify) return cmd_verify(cfg);
    if (*enumerate) {
      if (cfg.max_n == 0) cfg.max_n = 7;
      return cmd_verify(cfg);
    }
    if (*certificate) return cmd_certificate(cfg);
    if (*extremal) {
      if (cfg.delta_max == 0) cfg.delta_max = 6;
      return cmd_extremal(cfg);
    }
    if (*compare) {
      if (cfg.delta_max == 0) cfg.delta_max = 50;
      if (cfg.p_max == 0) cfg.p_max = 10000;
      return cmd_compare_bounds(cfg);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
