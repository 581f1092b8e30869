#include "ghwlab/invariants.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "ghwlab/errors.hpp"

namespace ghwlab {

namespace {

constexpr int kMaxEdgesExhaustive = 30;

void check_searchable(const Graph& g, bool need_connected) {
  if (g.edge_count() > kMaxEdgesExhaustive)
    throw BudgetExceededError(
        "subset search over " + std::to_string(g.edge_count()) +
            " edges exceeds the exhaustive limit of " + std::to_string(kMaxEdgesExhaustive),
        std::to_string(std::uint64_t{1} << g.edge_count()));
  if (need_connected && !g.is_connected())
    throw DisconnectedError("graph is not connected");
}

// Scratch for incremental metric evaluation during the subset search.
struct Scan {
  const Graph& g;
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<char> dropped;
  std::vector<int> color;  // -1 unvisited, else 0/1
  std::vector<int> stack;

  explicit Scan(const Graph& graph)
      : g(graph), adj(graph.adjacency()), dropped(graph.edge_count(), 0) {}

  // components and bipartite components of g minus dropped edges
  struct Counts {
    int comps = 0;
    int bipartite = 0;
  };

  Counts counts() {
    color.assign(g.vertex_count(), -1);
    Counts c;
    for (int v0 = 0; v0 < g.vertex_count(); ++v0) {
      if (color[v0] != -1) continue;
      ++c.comps;
      bool two_colorable = true;
      color[v0] = 0;
      stack.assign(1, v0);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[v]) {
          if (dropped[e]) continue;
          if (color[w] == -1) {
            color[w] = color[v] ^ 1;
            stack.push_back(w);
          } else if (color[w] == color[v]) {
            two_colorable = false;
          }
        }
      }
      if (two_colorable) ++c.bipartite;
    }
    return c;
  }
};

// Minimum-cardinality subset of edges whose deletion satisfies `done`;
// `viable(counts, remaining)` must be monotone sound: false only when no
// completion with `remaining` further deletions can succeed. Search order is
// cardinality first, then lexicographic, so the first hit is the
// lexicographically least witness of minimum size.
template <class Done, class Viable>
std::optional<EdgeSet> search_min_subset(const Graph& g, Done done, Viable viable) {
  int m = g.edge_count();
  Scan scan(g);
  std::vector<int> chosen;

  auto dfs = [&](auto&& self, int start, int remaining) -> bool {
    auto c = scan.counts();
    if (remaining == 0) return done(c);
    if (!viable(c, remaining)) return false;
    for (int e = start; e <= m - remaining; ++e) {
      scan.dropped[e] = 1;
      chosen.push_back(e);
      if (self(self, e + 1, remaining - 1)) return true;
      chosen.pop_back();
      scan.dropped[e] = 0;
    }
    return false;
  };

  for (int l = 0; l <= m; ++l) {
    if (dfs(dfs, 0, l)) return EdgeSet(chosen, m);
  }
  return std::nullopt;
}

std::vector<ComponentSummary> summarize(const Graph& g, const EdgeSet& witness) {
  std::vector<ComponentSummary> out;
  for (const auto& comp : components(g, witness))
    out.push_back({static_cast<int>(comp.size()), bipartition(g, comp, witness).has_value()});
  return out;
}

}  // namespace

InvariantResult lambda_r(const Graph& g, int r) {
  check_searchable(g, true);
  if (r < 1 || r >= g.vertex_count())
    throw std::invalid_argument("lambda_r needs 1 <= r <= s-1");
  int target = r + 1;
  auto witness = search_min_subset(
      g, [&](Scan::Counts c) { return c.comps >= target; },
      [&](Scan::Counts c, int remaining) { return c.comps + remaining >= target; });
  // deleting all edges leaves s >= r+1 singletons, so a witness always exists
  InvariantResult res{static_cast<int>(witness->size()), *witness, summarize(g, *witness)};
  // a minimal witness cannot overshoot: re-adding an edge merges at most two parts
  if (static_cast<int>(res.component_summary.size()) != target)
    throw std::logic_error("lambda witness component count mismatch");
  return res;
}

InvariantResult upsilon_r(const Graph& g, int r) {
  check_searchable(g, true);
  if (r < 1 || r > g.vertex_count())
    throw std::invalid_argument("upsilon_r needs 1 <= r <= s");
  auto witness = search_min_subset(
      g, [&](Scan::Counts c) { return c.bipartite >= r; },
      [&](Scan::Counts c, int remaining) { return c.bipartite + remaining >= r; });
  InvariantResult res{static_cast<int>(witness->size()), *witness, summarize(g, *witness)};
  int bip = 0;
  for (const auto& cs : res.component_summary)
    if (cs.bipartite) ++bip;
  // minimality forces exactly r bipartite components
  if (bip != r) throw std::logic_error("upsilon witness bipartite count mismatch");
  return res;
}

InvariantResult edge_biparticity_subsets(const Graph& g) {
  check_searchable(g, false);
  auto witness = search_min_subset(
      g, [&](Scan::Counts c) { return c.bipartite == c.comps; },
      // deleting one edge fixes at most one non-bipartite component
      [&](Scan::Counts c, int remaining) { return c.comps - c.bipartite <= remaining; });
  return {static_cast<int>(witness->size()), *witness, summarize(g, *witness)};
}

SignSearchResult edge_biparticity_signs(const Graph& g) {
  check_searchable(g, true);
  int s = g.vertex_count();
  if (s < 2) throw std::invalid_argument("sign search needs at least two vertices");
  int best = g.edge_count() + 1;
  std::uint32_t best_mask = 0;
  // vertex 0 fixed to +; mask bit i-1 flips vertex i to -
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (s - 1)); ++mask) {
    int same = 0;
    for (const Edge& e : g.edges()) {
      bool su = e.u != 0 && ((mask >> (e.u - 1)) & 1);
      bool sv = e.v != 0 && ((mask >> (e.v - 1)) & 1);
      if (su == sv) ++same;
    }
    if (same < best) {
      best = same;
      best_mask = mask;
    }
  }
  SignAssignment a;
  a.signs.resize(s, 1);
  for (int v = 1; v < s; ++v)
    if ((best_mask >> (v - 1)) & 1) a.signs[v] = -1;
  return {best, a};
}

int min_cut_oracle(const Graph& g) {
  check_searchable(g, true);
  int s = g.vertex_count();
  if (s < 2) throw std::invalid_argument("min cut needs at least two vertices");
  int best = g.edge_count() + 1;
  // vertex 0 stays on one side; proper nonempty subsets of the rest
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (s - 1)); ++mask) {
    int cross = 0;
    for (const Edge& e : g.edges()) {
      bool su = e.u != 0 && ((mask >> (e.u - 1)) & 1);
      bool sv = e.v != 0 && ((mask >> (e.v - 1)) & 1);
      if (su != sv) ++cross;
    }
    best = std::min(best, cross);
  }
  return best;
}

}  // namespace ghwlab
