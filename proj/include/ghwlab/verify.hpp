#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ghwlab/eval_code.hpp"
#include "ghwlab/graph.hpp"
#include "ghwlab/invariants.hpp"
#include "ghwlab/linear_code.hpp"

namespace ghwlab {

enum class CheckStatus { pass, fail, skip };

struct CheckRecord {
  std::string check_id;   // stable identifier, e.g. "ghw[r=2]"
  std::string graph_id;
  std::uint32_t p;        // 0 when field-independent
  std::string params;     // routing details, e.g. "case=upsilon;method=duality"
  std::string expected;
  std::string actual;     // or the skip reason
  CheckStatus status;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  int passed() const;
  int failed() const;
  int skipped() const;
  // strict treats skips as failures
  bool all_passed(bool strict = false) const;
  void merge(VerificationReport other);
};

// One graph against the incidence-code identities: rank case split, dimension
// sum, per-r weight vs the matching graph invariant, the independent
// minimum-distance route, strict monotonicity, the duality set identity when
// both hierarchies can be brute-forced, and full-length evaluation codes for
// the requested degrees. r_max = -1 means the full dimension; r_max = 0 runs
// only the rank and dimension checks.
struct GraphCheckOptions {
  int r_max = -1;
  std::vector<int> ev_degrees;  // degree-d evaluation code checks, d >= 2
  int ev_r_max = 5;
  GhwOptions ghw;
};

VerificationReport verify_graph(const Graph& g, std::uint32_t p, const GraphCheckOptions& opts,
                                const std::string& graph_id);

// Pinned expected values for the named fixtures; the verify command fails if
// recomputation disagrees.
struct GoldenHierarchy {
  std::uint32_t p;
  std::vector<int> primal;
  std::vector<int> dual;
};

struct GoldenFixture {
  std::string name;
  Graph graph;
  int lambda1;
  int upsilon1;
  int phi;
  std::vector<GoldenHierarchy> hierarchies;
};

const std::vector<GoldenFixture>& builtin_fixtures();

// number of scalar golden values across builtin fixtures, for mutation sweeps
int golden_value_count();

struct RandomCorpusSpec {
  int count = 20;
  int s_min = 4;
  int s_max = 7;
  double edge_prob = 0.5;
  std::uint64_t seed = 42;
};

struct CorpusSpec {
  bool fixtures = true;
  bool golden_checks = true;  // compare fixtures against their pinned values
  std::vector<std::string> fixture_filter;  // empty: all builtin fixtures
  std::optional<RandomCorpusSpec> random;
  std::vector<std::uint32_t> primes{2, 3};
  GraphCheckOptions checks;
  // Self-test hook: when >= 0, bumps the golden value with this stream index
  // before comparison and restricts the run to the affected fixture. The
  // verify command must then exit nonzero.
  int mutate_golden = -1;
};

VerificationReport corpus_verify(const CorpusSpec& spec);

// seeded, resampled until connected
Graph random_connected_graph(std::mt19937_64& rng, int s_min, int s_max, double edge_prob);

}  // namespace ghwlab
