#pragma once

#include <cstdint>
#include <vector>

#include "ghwlab/graph.hpp"

namespace ghwlab {

struct ComponentSummary {
  int size;
  bool bipartite;
};

struct InvariantResult {
  int value;        // == witness.size()
  EdgeSet witness;  // lexicographically least minimizer
  std::vector<ComponentSummary> component_summary;
};

// signs[v] is +1 or -1
struct SignAssignment {
  std::vector<int> signs;
};

struct SignSearchResult {
  int value;
  SignAssignment best;
};

// Exhaustive searches; all require m <= 30 and throw BudgetExceededError
// beyond that. lambda_r, upsilon_r and the sign search require a connected
// graph (DisconnectedError otherwise).

// least number of edge deletions leaving at least r+1 components; 1 <= r <= s-1
InvariantResult lambda_r(const Graph& g, int r);

// least number of edge deletions leaving at least r bipartite components;
// 1 <= r <= s. The returned witness yields exactly r of them.
InvariantResult upsilon_r(const Graph& g, int r);

// least number of edge deletions making every component bipartite
InvariantResult edge_biparticity_subsets(const Graph& g);

// same value by enumerating vertex sign assignments: the edges joining
// same-signed endpoints are the deletions. Vertex 0 is pinned to + and the
// all-plus assignment is excluded, so the searched space is proper surjective
// assignments (requires s >= 2).
SignSearchResult edge_biparticity_signs(const Graph& g);

// plain global min cut by enumerating vertex bipartitions; independent check
// for lambda_r at r = 1
int min_cut_oracle(const Graph& g);

}  // namespace ghwlab
