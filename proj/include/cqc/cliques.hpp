#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqc/graph.hpp"

namespace cqc {

/// All maximal cliques of a graph, each sorted, listed lexicographically.
/// Singleton cliques (isolated vertices) are listed but are exempt from
/// coloring constraints everywhere below.
struct CliqueSet {
  std::uint64_t fingerprint = 0;  // graph_fingerprint of the source graph
  std::vector<VertexSet> cliques;
};

/// Vertex coloring with palette 1..k; colors[v] is the color of v.
struct VertexColoring {
  std::vector<int> colors;
  int k = 0;
};

/// Outcome of a coloring check; witness is the first monochromatic clique of
/// size >= 2 in lexicographic order, present exactly when valid is false.
struct ValidityReport {
  bool valid = true;
  std::optional<VertexSet> witness;
};

// Pivoting branch-and-bound enumeration; deterministic output order.
CliqueSet maximal_cliques(const Graph& g);

int clique_number(const Graph& g);  // errors on the empty graph

// h must come from g (fingerprints are compared).
ValidityReport check_clique_coloring(const Graph& g, const CliqueSet& h,
                                     const VertexColoring& c);

// Smallest k <= max_k such that g has a k-clique-coloring, or nullopt.
// Exhaustive; refuses n > 25.
std::optional<int> oracle_clique_chromatic(const Graph& g, int max_k);

// Exact 2-clique-coloring by backtracking with unit propagation over the
// hyperedges (size-2 hyperedges act as disequalities, larger ones as
// not-all-equal constraints). nullopt means no 2-clique-coloring exists.
// Unguarded when max degree <= 4; refuses n > 64 otherwise.
std::optional<VertexColoring> exact_two_clique_coloring(const Graph& g);

// Smaller color class of a valid 2-clique-coloring (ties: class of color 1).
// The result meets every maximal clique of size >= 2 and has <= floor(n/2)
// vertices; both facts are re-checked before returning.
VertexSet transversal_from_coloring(const Graph& g, const CliqueSet& h,
                                    const VertexColoring& c);

// Minimum number of vertices meeting every maximal clique of size >= 2.
// Exhaustive; refuses n > 25.
int oracle_clique_transversal(const Graph& g);

// Text formats: a coloring is n whitespace-separated integers; a validity
// report is "valid" or "invalid <v1> <v2> ... <vk>".
VertexColoring parse_coloring(const std::string& text);
std::string write_coloring(const VertexColoring& c);
std::string write_validity(const ValidityReport& r);

}  // namespace cqc
