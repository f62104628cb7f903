#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cqc/graph.hpp"

namespace cqc {

/// An induced K_{1,3}: center adjacent to three pairwise non-adjacent leaves.
struct ClawWitness {
  int center = -1;
  std::array<int, 3> leaves{-1, -1, -1};
};

enum class MinorTarget { K4, K5, K33 };

/// Branch sets of a minor model, indexed like the target's vertices.
/// Sets are disjoint, each connected, and realize every target edge.
struct MinorWitness {
  std::vector<VertexSet> branch_sets;
};

/// Construction order of a 2-tree: order[0..2] is the base triangle and each
/// later order[i] was attached to the adjacent pair attach[i].
struct TwoTreeOrder {
  std::vector<int> order;
  std::vector<std::pair<int, int>> attach;  // {-1,-1} for the base triangle
};

struct RecognitionReport {
  bool claw_free = true;
  std::optional<ClawWitness> claw;
  bool k4_minor_free = false;
  bool k5_minor_free = false;
  bool is_2tree = false;
  bool is_plane_triangulation = false;
  bool is_wagner = false;
  bool is_odd_cycle = false;
  int max_degree = 0;
  int clique_number = 0;
};

// First claw in lexicographic (center, leaves) order, or nullopt.
std::optional<ClawWitness> find_claw(const Graph& g);

// Exact minor containment by branch-and-bound over branch sets, after
// reducing degree-<=1 vertices and smoothing degree-2 vertices (safe for all
// three targets, whose minimum degree is 3). Refuses n > size_guard.
std::optional<MinorWitness> has_minor(const Graph& g, MinorTarget target,
                                      int size_guard = 60);

// True iff repeated deletion of degree-<=1 vertices plus smoothing of
// degree-2 vertices empties the graph (equivalent to K4-minor-freeness).
bool is_k4_minor_free_fast(const Graph& g);

// Planarity by face insertion (Demoucron-Malgrange-Pertuiset), run per
// biconnected block. Polynomial; no size cap. Equivalent to having neither
// a K5 nor a K3,3 minor.
bool is_planar(const Graph& g);

// Peels degree-2 vertices with adjacent neighbors down to a triangle.
// Requires a connected graph with n >= 3; nullopt if g is not a 2-tree.
std::optional<TwoTreeOrder> recognize_2tree(const Graph& g);

// m = 3n-6 and neither a K5 nor a K3,3 minor. Connected, n >= 3 required.
bool is_plane_triangulation(const Graph& g, int size_guard = 60);

// Isomorphism with the Wagner graph (8-cycle plus the four long diagonals).
// Returns the vertex map canonical -> g when isomorphic.
std::optional<std::vector<int>> is_wagner_graph(const Graph& g);

// Length of g when g is a connected 2-regular graph on an odd number of
// vertices; nullopt otherwise.
std::optional<int> odd_cycle_length(const Graph& g);

// Max degree <= 5 and the closed neighborhood of every degree-5 vertex
// induces a 5-wheel.
bool neighborhoods_of_degree5_are_wheels(const Graph& g);

bool degree_at_most_six(const Graph& g);

RecognitionReport recognize(const Graph& g, int minor_guard = 60);
std::string write_recognition(const RecognitionReport& r);

}  // namespace cqc
