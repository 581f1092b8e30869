#include "ghwlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ghwlab/errors.hpp"

namespace ghwlab {

EdgeSet::EdgeSet(std::vector<int> indices, int edge_count) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (idx_[i] < 0 || idx_[i] >= edge_count)
      throw std::invalid_argument("edge index out of range: " + std::to_string(idx_[i]));
    if (i > 0 && idx_[i] == idx_[i - 1])
      throw std::invalid_argument("duplicate edge index: " + std::to_string(idx_[i]));
  }
}

EdgeSet EdgeSet::from_mask(std::uint64_t mask) {
  EdgeSet s;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) s.idx_.push_back(i);
  return s;
}

bool EdgeSet::contains(int e) const {
  return std::binary_search(idx_.begin(), idx_.end(), e);
}

Graph::Graph(int s, const std::vector<std::pair<int, int>>& edges_1based) : s_(s) {
  if (s < 1) throw std::invalid_argument("vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edges_1based.size());
  for (auto [u, v] : edges_1based) {
    if (u < 1 || u > s || v < 1 || v > s)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    Edge e{std::min(u, v) - 1, std::max(u, v) - 1};
    if (!seen.insert({e.u, e.v}).second)
      throw std::invalid_argument("parallel edge: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    edges_.push_back(e);
  }
}

std::vector<std::vector<std::pair<int, int>>> Graph::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(s_);
  for (int j = 0; j < edge_count(); ++j) {
    adj[edges_[j].u].push_back({edges_[j].v, j});
    adj[edges_[j].v].push_back({edges_[j].u, j});
  }
  return adj;
}

bool Graph::is_connected() const { return components(*this).size() == 1; }

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int s = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (s != -1) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
      if (!(ls >> s >> m) || s < 1 || m < 0)
        throw ParseError("line " + std::to_string(lineno) + ": malformed header");
    } else if (tag == "e") {
      if (s == -1) throw ParseError("line " + std::to_string(lineno) + ": edge before header");
      int u, v;
      if (!(ls >> u >> v))
        throw ParseError("line " + std::to_string(lineno) + ": malformed edge");
      edges.push_back({u, v});
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
  }
  if (s == -1) throw ParseError("missing 'p <s> <m>' header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return Graph(s, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("s") || !doc.contains("edges"))
    throw ParseError("JSON graph needs object keys \"s\" and \"edges\"");
  if (!doc["s"].is_number_integer()) throw ParseError("\"s\" must be an integer");
  std::vector<std::pair<int, int>> edges;
  if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array of pairs");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("\"edges\" entries must be [u, v] integer pairs");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  try {
    return Graph(doc["s"].get<int>(), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return parse_graph_json(buf.str());
  return parse_graph(buf.str());
}

FMatrix incidence_matrix(const Graph& g, const FieldSpec& f) {
  FMatrix m(f, g.vertex_count(), g.edge_count());
  for (int j = 0; j < g.edge_count(); ++j) {
    m.set(g.edges()[j].u, j, 1);
    m.set(g.edges()[j].v, j, 1);
  }
  return m;
}

std::vector<std::vector<int>> components(const Graph& g, const EdgeSet& removed) {
  int s = g.vertex_count();
  std::vector<char> dropped(g.edge_count(), 0);
  for (int e : removed.indices()) dropped[e] = 1;
  auto adj = g.adjacency();
  std::vector<int> label(s, -1);
  std::vector<std::vector<int>> comps;
  std::vector<int> stack;
  for (int v0 = 0; v0 < s; ++v0) {
    if (label[v0] != -1) continue;
    int id = static_cast<int>(comps.size());
    comps.push_back({});
    stack.push_back(v0);
    label[v0] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comps[id].push_back(v);
      for (auto [w, e] : adj[v]) {
        if (dropped[e] || label[w] != -1) continue;
        label[w] = id;
        stack.push_back(w);
      }
    }
    std::sort(comps[id].begin(), comps[id].end());
  }
  return comps;
}

std::optional<Bipartition> bipartition(const Graph& g, const std::vector<int>& component,
                                       const EdgeSet& removed) {
  if (component.empty()) throw std::invalid_argument("empty component");
  std::vector<char> dropped(g.edge_count(), 0);
  for (int e : removed.indices()) dropped[e] = 1;
  std::vector<char> in_comp(g.vertex_count(), 0);
  for (int v : component) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    in_comp[v] = 1;
  }
  auto adj = g.adjacency();
  std::vector<int> color(g.vertex_count(), -1);
  int least = *std::min_element(component.begin(), component.end());
  color[least] = 0;
  std::vector<int> stack{least};
  std::size_t visited = 1;
  bool odd_cycle = false;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (dropped[e]) continue;
      if (!in_comp[w])
        throw std::invalid_argument("component is not closed under remaining edges");
      if (color[w] == -1) {
        color[w] = color[v] ^ 1;
        ++visited;
        stack.push_back(w);
      } else if (color[w] == color[v]) {
        odd_cycle = true;
      }
    }
  }
  if (visited != component.size())
    throw std::invalid_argument("component is not connected in the remaining graph");
  if (odd_cycle) return std::nullopt;
  Bipartition b;
  for (int v : component)
    (color[v] == 0 ? b.side0 : b.side1).push_back(v);
  return b;
}

}  // namespace ghwlab
