#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqc/cliques.hpp"
#include "cqc/decomposition.hpp"
#include "cqc/graph.hpp"

namespace cqc {

/// Rules a constructive colorer may apply; serialized names are
/// try-color, component-flip, x2y2-swap, local-search, base-solver,
/// piece-extension.
enum class ColorRule {
  TryColor,
  ComponentFlip,
  X2Y2Swap,
  LocalSearch,
  BaseSolver,
  PieceExtension,
};

const char* rule_name(ColorRule r);

struct TraceStep {
  ColorRule rule;
  int vertex;  // vertex acted on, in input-graph coordinates
};

/// A coloring together with the audit trail of rules that produced it.
/// Every returned certificate has validity.valid == true.
struct ColoringCertificate {
  VertexColoring coloring;
  std::vector<TraceStep> trace;
  ValidityReport validity;
};

// 2-coloring of a connected 2-tree (or K1/K2): base triangle gets (1,1,2);
// each later vertex attached to edge {a,b} gets the color missing on {a,b}
// when they agree, else color 1. Every maximal clique ends up bichromatic.
ColoringCertificate color_2tree(const Graph& g);

// 3-coloring of a plane triangulation such that no maximal clique and no
// triangle is monochromatic: greedy proper coloring in degeneracy order
// (at most 6 colors on K5-minor-free inputs), then classes merged in pairs
// {1,2}->1, {3,4}->2, {5,6}->3. Requires every edge to lie in a triangle.
VertexColoring merge_coloring_triangulation(const Graph& g);

/// Prescription for coloring the Wagner graph: an edge of the canonical V8
/// (i adjacent to j iff |i-j| is 1, 7 or 4 on vertices 0..7) plus the two
/// required endpoint colors, which may be equal.
struct WagnerPrescription {
  std::pair<int, int> edge;
  std::pair<int, int> colors;
};

// 3-coloring of the canonical V8. Without a prescription: a fixed proper
// coloring. With distinct prescribed colors: a permutation of that fixed
// coloring. With equal prescribed colors: the lexicographically first
// coloring proper on every edge except the prescribed one.
VertexColoring color_v8(const std::optional<WagnerPrescription>& boundary);

// Extends prescribed boundary colors (1..3) to a full 3-coloring of a plane
// triangulation piece so that no triangle of the piece and no given global
// hyperedge inside the piece is monochromatic. Backtracking in breadth-first
// order from the boundary, colors tried 1,2,3. All coordinates are piece-
// local. Throws InternalInconsistencyError when no extension exists.
VertexColoring extend_into_piece(const Graph& piece,
                                 const std::vector<VertexSet>& global_hyperedges,
                                 const VertexSet& boundary,
                                 const std::vector<int>& boundary_colors);

// 3-clique-coloring of a connected edge-maximal K5-minor-free graph with no
// monochromatic triangle: decompose into triangulation/V8 pieces, color the
// root piece directly, then extend across each glue boundary in tree order.
ColoringCertificate color_maximal_k5_free(const Graph& g);

// (1,2,1,2,...,1,2,3) on an odd cycle of length >= 5; uses 3 colors, which
// is optimal for such cycles.
VertexColoring color_odd_cycle(const Graph& g);

// 2-clique-coloring of a {claw, K5-minor}-free graph none of whose components
// is an odd cycle of length >= 5. Per component: exact solver when the
// maximum degree is at most 4; the 5-wheel directly; otherwise delete a
// degree-5 vertex (clique number <= 3) or a 4-clique vertex, recurse, and
// extend with the staged rules recorded in the trace. With verify_class set,
// first rejects inputs containing a claw or a K5 minor.
ColoringCertificate two_clique_color_claw_free(const Graph& g,
                                               bool verify_class = false);

// Staged extensions used by two_clique_color_claw_free. `sub` is indexed by
// g's vertices with sub.colors[v] == 0 and must be a valid 2-clique-coloring
// of g - v; the returned rule names the stage that produced the extension.
// extend_degree5 stages: recolor v alone; 2^|N[v]| local recoloring; exact
// solver. extend_4clique stages: recolor v alone; flip the component of v
// away from a monochromatic 4-clique; swap the x2/y2 pair joining the two
// blocking triangles through a 4-clique; local recoloring; exact solver.
std::pair<VertexColoring, ColorRule> extend_degree5(const Graph& g, int v,
                                                    const VertexColoring& sub);
std::pair<VertexColoring, ColorRule> extend_4clique(const Graph& g, int v,
                                                    const VertexColoring& sub);

// Certificate text: the coloring line followed by one line per trace entry,
// "step <k>: <rule> v=<id>".
std::string write_certificate(const ColoringCertificate& c);

}  // namespace cqc
