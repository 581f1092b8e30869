#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "ghwlab/errors.hpp"
#include "ghwlab/invariants.hpp"

using namespace ghwlab;

namespace {

Graph prism() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 6}, {3, 5}});
}

Graph petersen() {
  return Graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 10}, {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}});
}

// Test-side oracle, written independently of the search in the library: walk
// every subset of edges by bitmask, count components and bipartite components
// of the remainder with a fresh union-find plus odd-cycle flag.
struct MaskScan {
  int comps;
  int bipartite_comps;
};

MaskScan scan_mask(const Graph& g, std::uint64_t keep_mask) {
  int s = g.vertex_count();
  // union-find over the double cover: vertex v has nodes 2v (even side) and
  // 2v+1 (odd side); an edge merges opposite sides, and a component is
  // bipartite iff its two sides stay separate
  std::vector<int> parent(2 * s);
  for (int i = 0; i < 2 * s; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(keep_mask >> e & 1)) continue;
    const Edge& ed = g.edges()[e];
    unite(2 * ed.u, 2 * ed.v + 1);
    unite(2 * ed.u + 1, 2 * ed.v);
  }
  int comps = 0, bip = 0;
  for (int v = 0; v < s; ++v) {
    bool least = true;
    for (int w = 0; w < v && least; ++w)
      if (find(2 * w) == find(2 * v) || find(2 * w + 1) == find(2 * v)) least = false;
    if (!least) continue;
    ++comps;
    if (find(2 * v) != find(2 * v + 1)) ++bip;
  }
  return {comps, bip};
}

int oracle_lambda(const Graph& g, int r) {
  int m = g.edge_count();
  int best = m + 1;
  std::uint64_t full = (m == 64) ? ~0ull : (1ull << m) - 1;
  for (std::uint64_t del = 0; del <= full; ++del) {
    if (std::popcount(del) >= best) continue;
    if (scan_mask(g, full & ~del).comps >= r + 1) best = std::popcount(del);
  }
  return best;
}

int oracle_upsilon(const Graph& g, int r) {
  int m = g.edge_count();
  int best = m + 1;
  std::uint64_t full = (m == 64) ? ~0ull : (1ull << m) - 1;
  for (std::uint64_t del = 0; del <= full; ++del) {
    if (std::popcount(del) >= best) continue;
    if (scan_mask(g, full & ~del).bipartite_comps >= r) best = std::popcount(del);
  }
  return best;
}

int oracle_phi(const Graph& g) {
  int m = g.edge_count();
  int best = m + 1;
  std::uint64_t full = (m == 64) ? ~0ull : (1ull << m) - 1;
  for (std::uint64_t del = 0; del <= full; ++del) {
    if (std::popcount(del) >= best) continue;
    MaskScan sc = scan_mask(g, full & ~del);
    if (sc.bipartite_comps == sc.comps) best = std::popcount(del);
  }
  return best;
}

Graph random_connected(std::mt19937_64& rng, int s, double prob) {
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= s; ++u)
      for (int v = u + 1; v <= s; ++v)
        if ((rng() >> 11) * 0x1.0p-53 < prob) edges.push_back({u, v});
    if (edges.empty()) continue;
    Graph g(s, edges);
    if (g.is_connected()) return g;
  }
}

}  // namespace

TEST_CASE("pinned fixture invariants") {
  Graph pr = prism();
  CHECK(lambda_r(pr, 1).value == 3);
  CHECK(upsilon_r(pr, 1).value == 2);
  CHECK(edge_biparticity_subsets(pr).value == 2);
  CHECK(edge_biparticity_signs(pr).value == 2);

  Graph pt = petersen();
  CHECK(lambda_r(pt, 1).value == 3);
  CHECK(upsilon_r(pt, 1).value == 3);
  CHECK(edge_biparticity_subsets(pt).value == 3);
  CHECK(edge_biparticity_signs(pt).value == 3);
}

TEST_CASE("small special graphs") {
  Graph k3(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(upsilon_r(k3, 1).value == 1);
  CHECK(edge_biparticity_subsets(k3).value == 1);
  CHECK(lambda_r(k3, 1).value == 2);

  Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(edge_biparticity_subsets(k4).value == 2);
  CHECK(edge_biparticity_signs(k4).value == 2);

  Graph c6(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  CHECK(edge_biparticity_subsets(c6).value == 0);
  CHECK(edge_biparticity_signs(c6).value == 0);
  CHECK(upsilon_r(c6, 1).value == 0);

  Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(lambda_r(c4, 1).value == 2);
  CHECK(min_cut_oracle(c4) == 2);
}

TEST_CASE("search agrees with the exhaustive mask oracle on random graphs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_connected(rng, 4 + int(rng() % 3), 0.55);
    int s = g.vertex_count();
    for (int r = 1; r <= s - 1; ++r) CHECK(lambda_r(g, r).value == oracle_lambda(g, r));
    for (int r = 1; r <= s; ++r) CHECK(upsilon_r(g, r).value == oracle_upsilon(g, r));
    CHECK(edge_biparticity_subsets(g).value == oracle_phi(g));
    CHECK(edge_biparticity_signs(g).value == oracle_phi(g));
    CHECK(lambda_r(g, 1).value == min_cut_oracle(g));
  }
}

TEST_CASE("invariant chains are monotone and ordered") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = random_connected(rng, 5 + int(rng() % 3), 0.5);
    int s = g.vertex_count();
    for (int r = 1; r + 1 <= s - 1; ++r)
      CHECK(lambda_r(g, r).value < lambda_r(g, r + 1).value);
    for (int r = 1; r + 1 <= s; ++r)
      CHECK(upsilon_r(g, r).value < upsilon_r(g, r + 1).value);
    CHECK(upsilon_r(g, 1).value <= edge_biparticity_subsets(g).value);
  }
}

TEST_CASE("degenerate top levels delete everything") {
  Graph pr = prism();
  // r = s bipartite components: every vertex isolated, all edges gone
  CHECK(upsilon_r(pr, 6).value == 9);
  // r = s - 1 means s components
  CHECK(lambda_r(pr, 5).value == 9);
}

TEST_CASE("witnesses certify their value") {
  Graph pt = petersen();
  InvariantResult res = lambda_r(pt, 2);
  CHECK(static_cast<int>(res.witness.size()) == res.value);
  // deleting the witness leaves at least 3 components
  std::uint64_t full = (1ull << pt.edge_count()) - 1;
  std::uint64_t del = 0;
  for (int e : res.witness.indices()) del |= 1ull << e;
  CHECK(scan_mask(pt, full & ~del).comps >= 3);

  InvariantResult ups = upsilon_r(pt, 2);
  std::uint64_t del2 = 0;
  for (int e : ups.witness.indices()) del2 |= 1ull << e;
  CHECK(scan_mask(pt, full & ~del2).bipartite_comps >= 2);
}

TEST_CASE("witnesses are the lexicographically least minimizers") {
  Graph pr = prism();
  // among the 3-cuts, the star of vertex 2 = {0, 1, 7} is lex-least
  CHECK(lambda_r(pr, 1).witness.indices() == std::vector<int>{0, 1, 7});
  // one edge per triangle, least pair making the rest bipartite
  CHECK(upsilon_r(pr, 1).witness.indices() == std::vector<int>{0, 5});
}

TEST_CASE("out-of-range and disconnected inputs are rejected") {
  Graph pr = prism();
  CHECK_THROWS_AS(lambda_r(pr, 0), std::invalid_argument);
  CHECK_THROWS_AS(lambda_r(pr, 6), std::invalid_argument);
  CHECK_THROWS_AS(upsilon_r(pr, 0), std::invalid_argument);
  CHECK_THROWS_AS(upsilon_r(pr, 7), std::invalid_argument);

  Graph disc(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(lambda_r(disc, 1), DisconnectedError);
  CHECK_THROWS_AS(upsilon_r(disc, 1), DisconnectedError);
  CHECK_THROWS_AS(edge_biparticity_signs(disc), DisconnectedError);
  // subsets variant tolerates disconnected graphs
  CHECK(edge_biparticity_subsets(disc).value == 0);
}

TEST_CASE("edge budget guards the exhaustive search") {
  // 7x5 grid: 35 vertices, 58 edges, far past the subset budget
  std::vector<std::pair<int, int>> edges;
  auto id = [](int r, int c) { return r * 5 + c + 1; };
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 5; ++c) {
      if (c + 1 < 5) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < 7) edges.push_back({id(r, c), id(r + 1, c)});
    }
  Graph grid(35, edges);
  CHECK_THROWS_AS(lambda_r(grid, 1), BudgetExceededError);
  try {
    edge_biparticity_subsets(grid);
    FAIL("expected budget error");
  } catch (const BudgetExceededError& e) {
    CHECK(e.count == "288230376151711744");  // 2^58 subsets
  }
}
