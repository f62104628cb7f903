#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cqc/errors.hpp"

namespace cqc {

// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency lists are kept sorted; no self-loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  // Canonical edge list: each pair (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

int max_degree(const Graph& g);
int min_degree(const Graph& g);

/// Graph produced by a relabeling operation; to_parent[new_id] = old id.
struct Subgraph {
  Graph graph;
  std::vector<int> to_parent;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
Subgraph delete_vertex(const Graph& g, int v);

// Components sorted by smallest member; each component sorted ascending.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// All triangles (u, v, w) with u < v < w, in lexicographic order.
std::vector<std::array<int, 3>> list_triangles(const Graph& g);

// Stable 64-bit digest of (n, canonical edge list).
std::uint64_t graph_fingerprint(const Graph& g);

// Text format: header "<n> <m>", then m lines "<u> <v>"; '#' lines are
// comments. parse accepts edges in either endpoint order; write emits the
// canonical sorted form with u < v and LF line endings.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace cqc
