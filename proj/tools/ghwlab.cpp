// ghwlab: weight hierarchies of graph incidence codes and the matching
// connectivity invariants, with a self-verifying check harness.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghwlab/errors.hpp"
#include "ghwlab/verify.hpp"

using nlohmann::ordered_json;
using namespace ghwlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitBudget = 4;
constexpr int kExitCrossCheck = 5;

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string graph_digest(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ';';
  for (const Edge& e : g.edges()) os << e.u << ',' << e.v << ';';
  std::ostringstream hex;
  hex << "fnv1a:" << std::hex << std::setfill('0') << std::setw(16) << fnv1a(os.str());
  return hex.str();
}

ordered_json graph_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return ordered_json{{"s", g.vertex_count()}, {"edges", edges}};
}

ordered_json edge_set_json(const Graph& g, const EdgeSet& s) {
  ordered_json indices = ordered_json::array();
  ordered_json edges = ordered_json::array();
  for (int e : s.indices()) {
    indices.push_back(e + 1);
    edges.push_back({g.edges()[e].u + 1, g.edges()[e].v + 1});
  }
  return ordered_json{{"size", s.size()}, {"indices", indices}, {"edges", edges}};
}

std::string edge_set_text(const Graph& g, const EdgeSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int e : s.indices()) {
    if (!first) os << ", ";
    first = false;
    os << "#" << e + 1 << "(" << g.edges()[e].u + 1 << "-" << g.edges()[e].v + 1 << ")";
  }
  os << "}";
  return os.str();
}

ordered_json invariant_json(const Graph& g, const InvariantResult& r) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : r.component_summary)
    comps.push_back({{"size", c.size}, {"bipartite", c.bipartite}});
  return ordered_json{
      {"value", r.value}, {"witness", edge_set_json(g, r.witness)}, {"components", comps}};
}

struct OutputDoc {
  std::string command;
  ordered_json input;
  ordered_json params;
  ordered_json results;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  // elapsed stays top-level so determinism comparisons can strip one field
  void emit_json() const {
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ordered_json doc{{"command", command},
                     {"input", input},
                     {"params", params},
                     {"results", results},
                     {"elapsed_seconds", dt}};
    std::cout << doc.dump(2) << "\n";
  }
};

struct CommonOpts {
  std::string format = "table";
  int threads = 1;
  std::uint64_t budget = default_budget();
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker threads for subspace enumeration")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  cmd->add_option("--budget", c.budget,
                  "max subspace visits per enumeration (env GHWLAB_BUDGET)");
}

GhwOptions ghw_opts(const CommonOpts& c) { return {c.budget, c.threads}; }

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

ordered_json report_json(const VerificationReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const CheckRecord& r : rep.records) {
    ordered_json c{{"check", r.check_id}, {"graph", r.graph_id}};
    if (r.p != 0) c["p"] = r.p;
    if (!r.params.empty()) c["params"] = r.params;
    c["expected"] = r.expected;
    c["actual"] = r.actual;
    c["status"] = status_name(r.status);
    checks.push_back(std::move(c));
  }
  return ordered_json{{"checks", checks},
                      {"summary",
                       {{"pass", rep.passed()},
                        {"fail", rep.failed()},
                        {"skip", rep.skipped()},
                        {"total", rep.records.size()}}}};
}

void print_report_table(const VerificationReport& rep) {
  for (const CheckRecord& r : rep.records) {
    std::cout << std::left << std::setw(5) << status_name(r.status) << " " << std::setw(26)
              << r.check_id << " " << std::setw(22) << r.graph_id;
    if (r.p != 0) std::cout << " p=" << r.p;
    if (r.status == CheckStatus::skip)
      std::cout << "  (" << r.actual << ")";
    else
      std::cout << "  expected=" << r.expected << " actual=" << r.actual;
    if (!r.params.empty()) std::cout << "  [" << r.params << "]";
    std::cout << "\n";
  }
  std::cout << "summary: " << rep.passed() << " passed, " << rep.failed() << " failed, "
            << rep.skipped() << " skipped\n";
}

// ---- invariants ----------------------------------------------------------

int cmd_invariants(const std::string& path, int r_max, const std::string& which,
                   const CommonOpts& common) {
  OutputDoc doc;
  doc.command = "invariants";
  Graph g = load_graph_file(path);
  doc.input = ordered_json{{"path", path}, {"digest", graph_digest(g)}, {"graph", graph_json(g)}};
  doc.params = ordered_json{{"r_max", r_max}, {"which", which}};

  bool table = common.format == "table";
  if (table)
    std::cout << "graph " << path << ": s=" << g.vertex_count() << " m=" << g.edge_count()
              << "\n";

  ordered_json results;
  if (which == "lambda" || which == "all") {
    ordered_json arr = ordered_json::array();
    int top = std::min(r_max, g.vertex_count() - 1);
    for (int r = 1; r <= top; ++r) {
      InvariantResult res = lambda_r(g, r);
      ordered_json row{{"r", r}};
      row.update(invariant_json(g, res));
      arr.push_back(std::move(row));
      if (table)
        std::cout << "lambda_" << r << " = " << res.value << "  witness "
                  << edge_set_text(g, res.witness) << "\n";
    }
    results["lambda"] = arr;
  }
  if (which == "upsilon" || which == "all") {
    ordered_json arr = ordered_json::array();
    int top = std::min(r_max, g.vertex_count());
    for (int r = 1; r <= top; ++r) {
      InvariantResult res = upsilon_r(g, r);
      ordered_json row{{"r", r}};
      row.update(invariant_json(g, res));
      arr.push_back(std::move(row));
      if (table)
        std::cout << "upsilon_" << r << " = " << res.value << "  witness "
                  << edge_set_text(g, res.witness) << "\n";
    }
    results["upsilon"] = arr;
  }
  if (which == "phi" || which == "all") {
    InvariantResult sub = edge_biparticity_subsets(g);
    SignSearchResult sgn = edge_biparticity_signs(g);
    std::string signs;
    for (int v : sgn.best.signs) signs += v > 0 ? '+' : '-';
    results["phi"] = ordered_json{{"subsets", invariant_json(g, sub)},
                                  {"signs", ordered_json{{"value", sgn.value},
                                                         {"assignment", signs}}}};
    if (table) {
      std::cout << "phi(subsets) = " << sub.value << "  witness " << edge_set_text(g, sub.witness)
                << "\n";
      std::cout << "phi(signs)   = " << sgn.value << "  assignment " << signs << "\n";
    }
  }
  doc.results = std::move(results);
  if (!table) doc.emit_json();
  return kExitOk;
}

// ---- hierarchy -----------------------------------------------------------

int cmd_hierarchy(const std::string& path, std::uint32_t p, int r_max, const std::string& method,
                  bool skew_graph, const CommonOpts& common) {
  OutputDoc doc;
  doc.command = "hierarchy";
  Graph g = load_graph_file(path);
  doc.input = ordered_json{{"path", path}, {"digest", graph_digest(g)}, {"graph", graph_json(g)}};
  doc.params = ordered_json{{"p", p}, {"r_max", r_max}, {"method", method}};

  if (!g.is_connected()) throw DisconnectedError("graph is not connected");
  FieldSpec f(p);
  LinearCode c = LinearCode::from_generator(incidence_matrix(g, f));
  int k = c.dimension();
  int r_hi = r_max < 0 ? k : std::min(r_max, k);
  bool bip = bipartition(g, components(g)[0]).has_value();
  bool use_upsilon = (p != 2 && !bip);
  GhwOptions opts = ghw_opts(common);

  ordered_json results{{"n", c.length()}, {"k", k},
                       {"case", p == 2 ? "char2" : (bip ? "bipartite" : "odd-nonbip")}};

  std::vector<int> code_deltas;
  std::vector<Method> code_methods;
  if (method == "auto" || method == "both") {
    WeightHierarchy h = hierarchy_auto(c, r_hi, opts);
    code_deltas = h.deltas;
    code_methods = h.methods;
  } else if (method == "bruteforce") {
    WeightHierarchy h = hierarchy_bruteforce(c, r_hi, opts);
    code_deltas = h.deltas;
    code_methods = h.methods;
  } else if (method == "duality") {
    LinearCode d = c.dual();
    WeightHierarchy dh = hierarchy_bruteforce(d, d.dimension(), opts);
    WeightHierarchy h = wei_complete(c.length(), k, {}, dh);
    code_deltas.assign(h.deltas.begin(), h.deltas.begin() + r_hi);
    code_methods.assign(r_hi, Method::duality);
  }

  std::vector<int> graph_deltas;
  if (method == "graph" || method == "both") {
    for (int r = 1; r <= r_hi; ++r)
      graph_deltas.push_back(use_upsilon ? upsilon_r(g, r).value : lambda_r(g, r).value);
    if (skew_graph)
      for (int& v : graph_deltas) ++v;
  }

  bool table = common.format == "table";
  if (table)
    std::cout << "code [" << c.length() << "," << k << "] over F_" << p << " ("
              << results["case"].get<std::string>() << ")\n";

  ordered_json rows = ordered_json::array();
  bool mismatch = false;
  for (int r = 1; r <= r_hi; ++r) {
    ordered_json row{{"r", r}};
    if (!code_deltas.empty()) {
      row["delta"] = code_deltas[r - 1];
      row["method"] = code_methods[r - 1] == Method::bruteforce ? "bruteforce" : "duality";
    }
    if (!graph_deltas.empty()) {
      row["graph"] = graph_deltas[r - 1];
      row["invariant"] = use_upsilon ? "upsilon" : "lambda";
    }
    if (!code_deltas.empty() && !graph_deltas.empty() &&
        code_deltas[r - 1] != graph_deltas[r - 1])
      mismatch = true;
    rows.push_back(row);
    if (table) {
      std::cout << "r=" << std::setw(2) << r;
      if (!code_deltas.empty())
        std::cout << "  delta=" << std::setw(3) << code_deltas[r - 1] << " ("
                  << row["method"].get<std::string>() << ")";
      if (!graph_deltas.empty())
        std::cout << "  " << (use_upsilon ? "upsilon" : "lambda") << "_r=" << std::setw(3)
                  << graph_deltas[r - 1];
      std::cout << "\n";
    }
  }
  results["hierarchy"] = rows;
  if (method == "both") {
    results["match"] = !mismatch;
    if (table) std::cout << "cross-check: " << (mismatch ? "MISMATCH" : "match") << "\n";
  }
  doc.results = std::move(results);
  if (!table) doc.emit_json();
  return mismatch ? kExitCrossCheck : kExitOk;
}

// ---- evcode --------------------------------------------------------------

int cmd_evcode(const std::string& path, std::uint32_t p, int d, int r_max,
               const std::string& method, const CommonOpts& common) {
  OutputDoc doc;
  doc.command = "evcode";
  Graph g = load_graph_file(path);
  doc.input = ordered_json{{"path", path}, {"digest", graph_digest(g)}, {"graph", graph_json(g)}};
  doc.params = ordered_json{{"p", p}, {"d", d}, {"r_max", r_max}, {"method", method}};

  FieldSpec f(p);
  PointSet x = points_from_graph(g, f);
  LinearCode c = evaluation_code(x, d);
  int k = c.dimension();
  int r_hi = r_max < 0 ? k : std::min(r_max, k);
  GhwOptions opts = ghw_opts(common);
  DeltaMethod dm = method == "bruteforce" ? DeltaMethod::bruteforce
                   : method == "duality"  ? DeltaMethod::duality
                                          : DeltaMethod::automatic;

  ordered_json rows = ordered_json::array();
  bool table = common.format == "table";
  if (table)
    std::cout << "evaluation code [" << c.length() << "," << k << "] over F_" << p << ", degree "
              << d << "\n";
  for (int r = 1; r <= r_hi; ++r) {
    int delta = delta_X(x, d, r, dm, opts);
    rows.push_back({{"r", r}, {"delta", delta}, {"hyp", x.size() - delta}});
    if (table)
      std::cout << "r=" << std::setw(2) << r << "  delta=" << std::setw(3) << delta
                << "  hyp=" << x.size() - delta << "\n";
  }
  doc.results = ordered_json{{"n", c.length()}, {"k", k}, {"hierarchy", rows}};
  if (!table) doc.emit_json();
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& paths, bool fixtures,
               const std::vector<std::string>& fixture_filter, int random_count,
               std::uint64_t seed, int s_min, int s_max, double edge_prob,
               const std::vector<std::uint32_t>& primes, int r_max,
               const std::vector<int>& ev_degrees, bool strict, int mutate_golden,
               const CommonOpts& common) {
  OutputDoc doc;
  doc.command = "verify";
  doc.params = ordered_json{{"fixtures", fixtures}, {"random", random_count},
                            {"seed", seed},         {"primes", primes},
                            {"r_max", r_max},       {"ev_degrees", ev_degrees},
                            {"strict", strict}};
  doc.input = ordered_json{{"paths", paths}};

  CorpusSpec spec;
  spec.fixtures = fixtures;
  spec.fixture_filter = fixture_filter;
  spec.primes = primes;
  spec.checks.r_max = r_max;
  spec.checks.ev_degrees = ev_degrees;
  spec.checks.ghw = ghw_opts(common);
  spec.mutate_golden = mutate_golden;
  if (random_count > 0) spec.random = RandomCorpusSpec{random_count, s_min, s_max, edge_prob, seed};

  VerificationReport rep = corpus_verify(spec);
  for (const std::string& path : paths) {
    Graph g = load_graph_file(path);
    for (std::uint32_t p : primes) rep.merge(verify_graph(g, p, spec.checks, path));
  }

  doc.results = report_json(rep);
  if (common.format == "table")
    print_report_table(rep);
  else
    doc.emit_json();
  return rep.all_passed(strict) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Hamming weights of graph incidence codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ghwlab 1.0.0");

  CommonOpts common;
  if (const char* env = std::getenv("GHWLAB_BUDGET")) {
    try {
      common.budget = std::stoull(env);
    } catch (...) {
      std::cerr << "error: GHWLAB_BUDGET is not a number\n";
      return kExitBadInput;
    }
  }

  // invariants
  std::string inv_path;
  int inv_r_max = 1;
  std::string inv_which = "all";
  CLI::App* inv = app.add_subcommand("invariants", "edge connectivity and biparticity numbers");
  inv->add_option("graph", inv_path, "graph file")->required();
  inv->add_option("--r-max", inv_r_max, "compute invariants for r = 1..r_max")
      ->capture_default_str();
  inv->add_option("--which", inv_which, "which invariants")
      ->check(CLI::IsMember({"lambda", "upsilon", "phi", "all"}))
      ->capture_default_str();
  add_common(inv, common);

  // hierarchy
  std::string hier_path, hier_method = "auto";
  std::uint32_t hier_p = 2;
  int hier_r_max = -1;
  bool hier_skew = false;
  CLI::App* hier = app.add_subcommand("hierarchy", "weight hierarchy of the incidence code");
  hier->add_option("graph", hier_path, "graph file")->required();
  hier->add_option("--p", hier_p, "field characteristic")->required();
  hier->add_option("--r-max", hier_r_max, "stop after r_max weights (-1: full)")
      ->capture_default_str();
  hier->add_option("--method", hier_method, "computation route")
      ->check(CLI::IsMember({"auto", "bruteforce", "duality", "graph", "both"}))
      ->capture_default_str();
  hier->add_flag("--skew-graph", hier_skew, "self-test: offset graph-side values by one")
      ->group("");
  add_common(hier, common);

  // evcode
  std::string ev_path, ev_method = "auto";
  std::uint32_t ev_p = 2;
  int ev_d = 2, ev_r_max = -1;
  CLI::App* ev = app.add_subcommand("evcode", "degree-d evaluation code on the edge points");
  ev->add_option("graph", ev_path, "graph file")->required();
  ev->add_option("--p", ev_p, "field characteristic")->required();
  ev->add_option("--d", ev_d, "monomial degree")->check(CLI::Range(1, 8))
      ->capture_default_str();
  ev->add_option("--r-max", ev_r_max, "stop after r_max weights (-1: full)")
      ->capture_default_str();
  ev->add_option("--method", ev_method, "computation route")
      ->check(CLI::IsMember({"auto", "bruteforce", "duality"}))
      ->capture_default_str();
  add_common(ev, common);

  // verify
  std::vector<std::string> vf_paths, vf_fixture_filter;
  bool vf_fixtures = false, vf_strict = false;
  int vf_random = 0, vf_s_min = 4, vf_s_max = 7, vf_r_max = -1, vf_mutate = -1;
  double vf_prob = 0.5;
  std::uint64_t vf_seed = 42;
  std::vector<std::uint32_t> vf_primes{2, 3};
  std::vector<int> vf_ev_degrees{2};
  CLI::App* vf = app.add_subcommand("verify", "recompute identities and compare both sides");
  vf->add_option("graphs", vf_paths, "graph files to verify");
  vf->add_flag("--fixtures", vf_fixtures, "include the builtin fixtures and their pinned values");
  vf->add_option("--fixture", vf_fixture_filter, "restrict --fixtures to the named ones")
      ->delimiter(',');
  vf->add_option("--random", vf_random, "number of random connected graphs")
      ->capture_default_str();
  vf->add_option("--seed", vf_seed, "corpus seed")->capture_default_str();
  vf->add_option("--s-min", vf_s_min, "least vertex count")->capture_default_str();
  vf->add_option("--s-max", vf_s_max, "greatest vertex count")->capture_default_str();
  vf->add_option("--edge-prob", vf_prob, "edge probability")->capture_default_str();
  vf->add_option("--p", vf_primes, "field characteristics")->delimiter(',')
      ->capture_default_str();
  vf->add_option("--r-max", vf_r_max, "weights per code (-1: full, 0: rank checks only)")
      ->capture_default_str();
  vf->add_option("--ev-degrees", vf_ev_degrees, "evaluation code degrees to check")
      ->delimiter(',')
      ->capture_default_str();
  vf->add_flag("--strict", vf_strict, "treat skipped checks as failures");
  vf->add_option("--mutate-golden", vf_mutate, "self-test: corrupt the i-th golden value")
      ->group("");
  add_common(vf, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (inv->parsed()) return cmd_invariants(inv_path, inv_r_max, inv_which, common);
    if (hier->parsed())
      return cmd_hierarchy(hier_path, hier_p, hier_r_max, hier_method, hier_skew, common);
    if (ev->parsed()) return cmd_evcode(ev_path, ev_p, ev_d, ev_r_max, ev_method, common);
    if (vf->parsed()) {
      if (vf_mutate >= 0) vf_fixtures = true;
      if (vf_paths.empty() && !vf_fixtures && vf_random == 0) {
        std::cerr << "error: nothing to verify; pass graph files, --fixtures or --random N\n";
        return kExitBadInput;
      }
      if (!vf_fixture_filter.empty()) vf_fixtures = true;
      return cmd_verify(vf_paths, vf_fixtures, vf_fixture_filter, vf_random, vf_seed, vf_s_min,
                        vf_s_max, vf_prob, vf_primes, vf_r_max, vf_ev_degrees, vf_strict,
                        vf_mutate, common);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DisconnectedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisconnected;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
