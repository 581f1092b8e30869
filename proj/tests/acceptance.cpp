// Acceptance gate: one line per criterion, nonzero exit if any fails.
// argv[1] is the CLI binary, argv[2] the fixture directory.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghwlab/verify.hpp"

using namespace ghwlab;

namespace {

// pinned runtime tolerances, seconds
constexpr double kPrismTimeLimit = 10.0;
constexpr double kPetersenTimeLimit = 120.0;
constexpr double kPetersenThreadedTimeLimit = 30.0;
constexpr double kIdentityCorpusTimeLimit = 60.0;

std::string g_cli;
std::string g_fixtures;
int g_failures = 0;

struct Criterion {
  std::string name;
  std::vector<std::string> problems;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(std::string n) : name(std::move(n)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  void finish() {
    double dt = elapsed();
    if (problems.empty()) {
      std::printf("%-38s pass   (%.2f s)\n", name.c_str(), dt);
    } else {
      ++g_failures;
      std::printf("%-38s FAIL   (%.2f s)\n", name.c_str(), dt);
      for (const auto& p : problems) std::printf("    - %s\n", p.c_str());
    }
    std::fflush(stdout);
  }
};

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Graph prism() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 6}, {3, 5}});
}

Graph petersen() {
  return Graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 10}, {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}});
}

std::vector<int> brute_hierarchy(const LinearCode& c, const GhwOptions& opts = {}) {
  return hierarchy_bruteforce(c, c.dimension(), opts).deltas;
}

std::vector<int> graph_hierarchy(const Graph& g, std::uint32_t p, int count) {
  bool bip = bipartition(g, components(g)[0]).has_value();
  bool use_upsilon = (p != 2 && !bip);
  std::vector<int> out;
  for (int r = 1; r <= count; ++r)
    out.push_back(use_upsilon ? upsilon_r(g, r).value : lambda_r(g, r).value);
  return out;
}

// criterion 1: the 6-vertex 9-edge fixture, all four pinned hierarchies by
// three independent routes inside the time limit
void criterion_table1() {
  Criterion c("1. prism hierarchies, three routes");
  Graph g = prism();
  const std::vector<int> d2{3, 5, 6, 8, 9};
  const std::vector<int> d2_dual{3, 6, 8, 9};
  const std::vector<int> d3{2, 4, 5, 7, 8, 9};
  const std::vector<int> d3_dual{4, 7, 9};

  for (auto [p, primal, dual] :
       {std::tuple{2u, d2, d2_dual}, std::tuple{3u, d3, d3_dual}}) {
    LinearCode code = LinearCode::from_generator(incidence_matrix(g, FieldSpec(p)));
    LinearCode dual_code = code.dual();
    std::string tag = "p=" + std::to_string(p);

    std::vector<int> brute = brute_hierarchy(code);
    c.expect(brute == primal, tag + " brute " + join(brute) + " != " + join(primal));

    std::vector<int> via_graph = graph_hierarchy(g, p, code.dimension());
    c.expect(via_graph == primal, tag + " graph " + join(via_graph) + " != " + join(primal));

    std::vector<int> dual_brute = brute_hierarchy(dual_code);
    c.expect(dual_brute == dual, tag + " dual " + join(dual_brute) + " != " + join(dual));

    WeightHierarchy dh = hierarchy_bruteforce(dual_code, dual_code.dimension());
    std::vector<int> completed = wei_complete(9, code.dimension(), {}, dh).deltas;
    c.expect(completed == primal, tag + " duality " + join(completed) + " != " + join(primal));
  }
  c.expect(c.elapsed() < kPrismTimeLimit, "exceeded time limit");
  c.finish();
}

// criterion 2: Petersen, including the duality completion for p = 3 and the
// threaded rerun
void criterion_table2() {
  Criterion c("2. petersen hierarchies + threads");
  Graph g = petersen();
  const std::vector<int> d2{3, 5, 7, 9, 10, 12, 13, 14, 15};
  const std::vector<int> d2_dual{5, 8, 10, 12, 14, 15};
  const std::vector<int> d3{3, 5, 7, 8, 9, 11, 12, 13, 14, 15};
  const std::vector<int> d3_dual{6, 10, 12, 14, 15};

  LinearCode c2 = LinearCode::from_generator(incidence_matrix(g, FieldSpec(2)));
  LinearCode c3 = LinearCode::from_generator(incidence_matrix(g, FieldSpec(3)));
  LinearCode c2d = c2.dual();
  LinearCode c3d = c3.dual();

  std::vector<int> b2 = brute_hierarchy(c2);
  c.expect(b2 == d2, "p=2 brute " + join(b2) + " != " + join(d2));
  std::vector<int> g2 = graph_hierarchy(g, 2, 9);
  c.expect(g2 == d2, "p=2 graph " + join(g2) + " != " + join(d2));
  std::vector<int> b2d = brute_hierarchy(c2d);
  c.expect(b2d == d2_dual, "p=2 dual brute " + join(b2d) + " != " + join(d2_dual));

  WeightHierarchy dh3 = hierarchy_bruteforce(c3d, c3d.dimension());
  c.expect(dh3.deltas == d3_dual, "p=3 dual brute " + join(dh3.deltas) + " != " + join(d3_dual));
  std::vector<int> w3 = wei_complete(15, 10, {}, dh3).deltas;
  c.expect(w3 == d3, "p=3 duality " + join(w3) + " != " + join(d3));
  std::vector<int> g3 = graph_hierarchy(g, 3, 10);
  c.expect(g3 == d3, "p=3 upsilon " + join(g3) + " != " + join(d3));

  // the default-budget auto route brute-forces the 64-million-subspace second
  // level before switching to duality
  WeightHierarchy a3 = hierarchy_auto(c3, 3);
  c.expect(a3.deltas == std::vector<int>(d3.begin(), d3.begin() + 3),
           "p=3 auto prefix " + join(a3.deltas));
  c.expect(a3.methods[1] == Method::bruteforce && a3.methods[2] == Method::duality,
           "p=3 auto picked unexpected routes");

  double single = c.elapsed();
  c.expect(single < kPetersenTimeLimit, "single-thread run exceeded time limit");

  auto threaded_start = std::chrono::steady_clock::now();
  GhwOptions eight;
  eight.threads = 8;
  std::vector<int> b2t = brute_hierarchy(c2, eight);
  std::vector<int> dh3t = brute_hierarchy(c3d, eight);
  c.expect(ghw(c3, 2, eight).delta == 5, "8-thread p=3 second weight != 5");
  double threaded =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - threaded_start).count();
  c.expect(b2t == b2, "8-thread p=2 results differ");
  c.expect(dh3t == dh3.deltas, "8-thread p=3 dual results differ");
  c.expect(threaded < kPetersenThreadedTimeLimit, "8-thread rerun exceeded time limit");
  c.finish();
}

// criterion 3: the stated single invariant values
void criterion_invariants() {
  Criterion c("3. stated invariant values");
  Graph pr = prism();
  c.expect(edge_biparticity_subsets(pr).value == 2, "prism phi != 2");
  c.expect(upsilon_r(pr, 1).value == 2, "prism upsilon != 2");
  c.expect(lambda_r(pr, 1).value == 3, "prism lambda != 3");
  Graph pt = petersen();
  c.expect(edge_biparticity_subsets(pt).value == 3, "petersen phi != 3");
  c.expect(upsilon_r(pt, 1).value == 3, "petersen upsilon != 3");
  c.expect(lambda_r(pt, 1).value == 3, "petersen lambda != 3");
  c.finish();
}

// criterion 4: rank and dimension law over a 50-graph corpus, p in {2,3,5}
void criterion_rank_law() {
  Criterion c("4. rank/dimension law, 50 graphs");
  CorpusSpec spec;
  spec.fixtures = false;
  spec.random = RandomCorpusSpec{50, 3, 8, 0.5, 20260819};
  spec.primes = {2, 3, 5};
  spec.checks.r_max = 0;
  VerificationReport rep = corpus_verify(spec);
  int rank_records = 0, dim_records = 0;
  for (const auto& r : rep.records) {
    if (r.check_id == "rank") ++rank_records;
    if (r.check_id == "dimsum") ++dim_records;
    if (r.status == CheckStatus::fail)
      c.expect(false, r.check_id + " failed on " + r.graph_id + " p=" + std::to_string(r.p));
  }
  c.expect(rank_records == 150, "expected 150 rank records, saw " + std::to_string(rank_records));
  c.expect(dim_records == 150, "expected 150 dimsum records");
  c.finish();
}

// criterion 5: code weight equals the selected graph invariant for r <= 3
// over a 20-graph corpus
void criterion_weight_identity() {
  Criterion c("5. weight = invariant, r <= 3");
  CorpusSpec spec;
  spec.fixtures = false;
  spec.random = RandomCorpusSpec{20, 4, 7, 0.5, 31337};
  spec.primes = {2, 3};
  spec.checks.r_max = 3;
  VerificationReport rep = corpus_verify(spec);
  int ghw_records = 0;
  for (const auto& r : rep.records) {
    if (r.check_id.starts_with("ghw[")) {
      ++ghw_records;
      if (r.status != CheckStatus::pass)
        c.expect(false, r.check_id + " " + r.graph_id + " p=" + std::to_string(r.p) + ": " +
                            r.expected + " vs " + r.actual);
    } else if (r.status == CheckStatus::fail) {
      c.expect(false, r.check_id + " failed on " + r.graph_id);
    }
  }
  c.expect(ghw_records >= 3 * 2 * 20, "too few weight comparisons: " +
                                          std::to_string(ghw_records));
  c.expect(c.elapsed() < kIdentityCorpusTimeLimit, "exceeded time limit");
  c.finish();
}

// criterion 6: degree >= 2 evaluation codes fill the space and have trivial
// hierarchies on every corpus graph
void criterion_evaluation_codes() {
  Criterion c("6. degree >= 2 evaluation codes");
  CorpusSpec spec;
  spec.fixtures = true;
  spec.golden_checks = false;
  spec.random = RandomCorpusSpec{20, 4, 7, 0.5, 31337};
  spec.primes = {2, 3};
  spec.checks.r_max = 0;
  spec.checks.ev_degrees = {2, 3};
  spec.checks.ev_r_max = 5;
  VerificationReport rep = corpus_verify(spec);
  int dim_records = 0, weight_records = 0;
  for (const auto& r : rep.records) {
    if (r.check_id.starts_with("evdim")) ++dim_records;
    if (r.check_id.starts_with("evghw")) ++weight_records;
    if (r.status == CheckStatus::fail)
      c.expect(false, r.check_id + " failed on " + r.graph_id + " p=" + std::to_string(r.p));
  }
  // 22 graphs x 2 primes x 2 degrees; each contributes min(5, m) weight rows
  c.expect(dim_records == 88, "expected 88 evdim records, saw " + std::to_string(dim_records));
  c.expect(weight_records >= 88, "too few evghw records: " + std::to_string(weight_records));
  c.finish();
}

// criterion 7: the cross-cutting property suites
void criterion_properties() {
  Criterion c("7. property suites");
  std::mt19937_64 rng(271828);
  std::vector<Graph> corpus;
  for (int i = 0; i < 12; ++i) corpus.push_back(random_connected_graph(rng, 4, 7, 0.5));
  corpus.push_back(prism());

  for (const Graph& g : corpus) {
    bool bip = bipartition(g, components(g)[0]).has_value();
    std::string id = "s=" + std::to_string(g.vertex_count()) +
                     ",m=" + std::to_string(g.edge_count());

    // min cut vs lambda_1 on every graph
    c.expect(min_cut_oracle(g) == lambda_r(g, 1).value, id + ": min cut != lambda_1");

    // phi three ways, odd characteristic, non-bipartite graphs
    if (!bip) {
      int by_subsets = edge_biparticity_subsets(g).value;
      c.expect(edge_biparticity_signs(g).value == by_subsets, id + ": sign search != subsets");
      for (std::uint32_t p : {3u, 5u}) {
        PointSet x = points_from_graph(g, FieldSpec(p));
        c.expect(biparticity_via_forms(x, CoeffDomain::pm_one) == by_subsets,
                 id + ": form search != subsets over F_" + std::to_string(p));
      }
    }

    // restricted zero/sign forms reach the first weight
    for (std::uint32_t p : {3u, 5u}) {
      PointSet x = points_from_graph(g, FieldSpec(p));
      LinearCode code = LinearCode::from_generator(incidence_matrix(g, FieldSpec(p)));
      c.expect(biparticity_via_forms(x, CoeffDomain::zero_pm_one) == ghw(code, 1).delta,
               id + ": zero/sign form minimum != delta_1 over F_" + std::to_string(p));
    }

    for (std::uint32_t p : {2u, 3u}) {
      LinearCode code = LinearCode::from_generator(incidence_matrix(g, FieldSpec(p)));
      WeightHierarchy h = hierarchy_auto(code, code.dimension());
      for (std::size_t i = 1; i < h.deltas.size(); ++i)
        c.expect(h.deltas[i - 1] < h.deltas[i],
                 id + ": hierarchy not strictly increasing over F_" + std::to_string(p));

      // exact duality set identity whenever both sides are brute-forced
      if (g.edge_count() <= 12) {
        WeightHierarchy dh = hierarchy_bruteforce(code.dual(), code.length() - code.dimension());
        std::set<int> primal(h.deltas.begin(), h.deltas.end());
        std::set<int> reflected;
        for (int x : dh.deltas) reflected.insert(code.length() + 1 - x);
        bool disjoint = true;
        for (int x : primal) disjoint = disjoint && !reflected.count(x);
        c.expect(disjoint && primal.size() + reflected.size() ==
                                 static_cast<std::size_t>(code.length()),
                 id + ": duality set identity broken over F_" + std::to_string(p));
      }
    }
  }

  // identical CLI output for 1 and 4 threads, elapsed stripped
  for (std::string args :
       {"hierarchy " + g_fixtures + "/petersen.grf --p 2 --method both --format json",
        "evcode " + g_fixtures + "/prism.grf --p 3 --d 2 --r-max 4 --format json"}) {
    CliRun one = run_cli(args + " --threads 1");
    CliRun four = run_cli(args + " --threads 4");
    c.expect(one.exit_code == 0 && four.exit_code == 0, "determinism run failed: " + args);
    if (one.exit_code == 0 && four.exit_code == 0) {
      nlohmann::json a = nlohmann::json::parse(one.out);
      nlohmann::json b = nlohmann::json::parse(four.out);
      a.erase("elapsed_seconds");
      b.erase("elapsed_seconds");
      c.expect(a == b, "thread count changed the output of: " + args);
    }
  }
  c.finish();
}

// criterion 8: every single-value corruption of the pinned fixture data makes
// the verify command exit nonzero
void criterion_mutation_guard() {
  Criterion c("8. golden mutation guard");
  CliRun clean = run_cli("verify --fixtures --budget 2000000 --format json");
  c.expect(clean.exit_code == 0, "unmutated verify exited " + std::to_string(clean.exit_code));

  int n = golden_value_count();
  c.expect(n == 54, "expected 54 golden values, have " + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    CliRun r = run_cli("verify --mutate-golden " + std::to_string(i) +
                       " --budget 2000000 --format json");
    if (r.exit_code == 0)
      c.expect(false, "mutation " + std::to_string(i) + " went undetected");
    else if (r.exit_code != 1)
      c.expect(false, "mutation " + std::to_string(i) + " exited " +
                          std::to_string(r.exit_code) + ", expected 1");
  }
  c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <ghwlab-binary> <fixture-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];

  criterion_table1();
  criterion_table2();
  criterion_invariants();
  criterion_rank_law();
  criterion_weight_identity();
  criterion_evaluation_codes();
  criterion_properties();
  criterion_mutation_guard();

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 8 criteria satisfied\n");
  return 0;
}
