#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqc/graph.hpp"
#include "cqc/recognition.hpp"

namespace cqc {

enum class PieceKind { Triangulation, Wagner };

/// One leaf of a clique-sum tree; to_host[piece_id] = vertex id in the host
/// graph the decomposition was computed for.
struct WagnerPiece {
  Graph piece;
  PieceKind kind = PieceKind::Triangulation;
  std::vector<int> to_host;
};

/// Tree edge gluing two pieces along a shared K2 or K3 (host coordinates).
struct GlueEdge {
  int parent = -1;
  int child = -1;
  VertexSet boundary;
};

struct WagnerDecomposition {
  int n = 0;  // order of the host graph
  std::vector<WagnerPiece> pieces;
  std::vector<GlueEdge> glue;
};

// Recursive clique-sum decomposition into plane triangulations and Wagner
// graphs. Leaves are recognized first; otherwise the lexicographically first
// separating edge, then the first separating triangle, splits the graph.
// nullopt when no such decomposition exists. The leaf test refuses parts
// larger than leaf_guard.
std::optional<WagnerDecomposition> wagner_decompose(const Graph& g,
                                                    int leaf_guard = 60);

// Union of all pieces mapped back to host coordinates.
Graph reconstruct(const WagnerDecomposition& d);

// recognize_2tree, but failure to be a 2-tree is an error.
TwoTreeOrder two_tree_order(const Graph& g);

// One line per piece ("piece <id> kind=<kind> vertices=<ids>") followed by
// one line per tree edge ("glue <parent> <child> boundary=<ids>").
std::string write_decomposition(const WagnerDecomposition& d);

}  // namespace cqc
