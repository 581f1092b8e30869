#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghwlab/fmatrix.hpp"

namespace ghwlab {

// Endpoints are 0-based internally and normalized to u < v.
struct Edge {
  int u, v;
  bool operator==(const Edge&) const = default;
};

// Sorted set of edge indices; the canonical witness representation.
class EdgeSet {
 public:
  EdgeSet() = default;
  // validates range against edge_count, sorts, rejects duplicates
  EdgeSet(std::vector<int> indices, int edge_count);
  static EdgeSet from_mask(std::uint64_t mask);

  const std::vector<int>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  bool contains(int e) const;
  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<int> idx_;
};

// Simple undirected graph: no loops, no parallel edges. Edge order is
// significant; it fixes the column order of the incidence matrix.
class Graph {
 public:
  // pairs are 1-based as in input files; throws std::invalid_argument on
  // loops, duplicates, or endpoints outside [1, s]
  Graph(int s, const std::vector<std::pair<int, int>>& edges_1based);

  int vertex_count() const { return s_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // per-vertex list of (neighbor, edge index)
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;

  bool is_connected() const;

  bool operator==(const Graph&) const = default;

 private:
  int s_;
  std::vector<Edge> edges_;
};

// Plain-text format: optional `c` comment lines, one `p <s> <m>` header, then
// exactly m lines `e <u> <v>` with 1-based endpoints.
Graph parse_graph(const std::string& text);

// JSON alternative: {"s": <int>, "edges": [[u, v], ...]} with 1-based endpoints.
Graph parse_graph_json(const std::string& text);

// dispatches on extension: .json files go through parse_graph_json
Graph load_graph_file(const std::string& path);

// s x m matrix over F_p; column j holds 1 at both endpoints of edge j.
FMatrix incidence_matrix(const Graph& g, const FieldSpec& f);

// Connected components of g minus the removed edges. Each component is sorted
// ascending; components are ordered by least vertex.
std::vector<std::vector<int>> components(const Graph& g, const EdgeSet& removed = {});

struct Bipartition {
  std::vector<int> side0, side1;  // side0 holds the least vertex
};

// Two-coloring of one component of g minus removed, or nullopt if an odd cycle
// obstructs it. `component` must be exactly one component of the remaining
// graph; anything else throws std::invalid_argument.
std::optional<Bipartition> bipartition(const Graph& g, const std::vector<int>& component,
                                       const EdgeSet& removed = {});

}  // namespace ghwlab
