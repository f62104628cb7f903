#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqc/decomposition.hpp"
#include "cqc/graph.hpp"

namespace cqc {

/// 64-bit linear congruential generator with fixed constants (documented in
/// the README) so seeded corpora are reproducible across platforms.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  /// Uniform draw from {0, ..., k-1}; uses the high bits of the state.
  std::uint64_t below(std::uint64_t k) { return (next() >> 33) % k; }

 private:
  std::uint64_t state_;
};

Graph gen_cycle(int n);                      // n >= 3
Graph gen_complete(int n);                   // n >= 1
Graph gen_complete_bipartite(int a, int b);  // a, b >= 1
Graph gen_wheel(int n);                      // n >= 3 rim vertices; hub is vertex 0
Graph gen_cycle_power(int n, int k);         // k >= 1 and 2k < n
Graph gen_prism(int k);                      // k >= 3; the circular ladder CL_k
Graph gen_wagner();                          // V8: 8-cycle plus antipodal chords

// Start from K3 and attach each new vertex to a uniformly chosen existing
// edge; the result is always a 2-tree.
Graph gen_two_tree(int n, std::uint64_t seed);  // n >= 3

// Start from K4 and insert each new vertex into a uniformly chosen face,
// joined to its three corners; the result is always a plane triangulation.
Graph gen_apollonian(int n, std::uint64_t seed);  // n >= 4

// Vertices are the edges of g in canonical order; adjacency is sharing an
// endpoint.
Graph line_graph(const Graph& g);

Graph gen_l_k6();  // line graph of K6; 15 vertices, clique number 5

// 9-vertex K4-minor-free fixture with clique-chromatic number 3 (checked by
// the oracle in tests).
Graph gen_k4free_chi3();

enum class ClawFreePlanarKind { CyclePowerTwo, LineOfPrism };
// CyclePowerTwo: C_n^2 with even n >= 8 (odd squared cycles contract to K5,
// so they are rejected). LineOfPrism: line graph of CL_{n/2} with n even and
// >= 6. Both families are claw-free and planar.
Graph gen_claw_free_planar(ClawFreePlanarKind kind, int n);

struct BlueprintPiece {
  PieceKind kind;
  int size;        // vertex count; wagner pieces must have size 8
  int glue_arity;  // 2 or 3; ignored for the first piece; wagner pieces use 2
};

struct WagnerSumInstance {
  Graph graph;
  WagnerDecomposition intended;  // the pieces and glue edges as generated
};

// Glue the blueprint's pieces one by one onto a uniformly chosen existing
// K2 or K3 of the partial graph (the piece-side boundary is its
// lexicographically first edge or triangle). Triangulation pieces are
// seeded Apollonian networks; wagner pieces are V8 copies.
WagnerSumInstance gen_wagner_sum(const std::vector<BlueprintPiece>& blueprint,
                                 std::uint64_t seed);

// Blueprint text is line-oriented: "piece <triangulation|wagner> <size>
// [glue2|glue3]". '#' comments and blank lines are skipped.
std::vector<BlueprintPiece> parse_blueprint(const std::string& text);

enum class Family {
  Cycle,
  Complete,
  CompleteBipartite,
  Wheel,
  CyclePower,
  Wagner,
  TwoTree,
  Apollonian,
  WagnerSum,
  LineGraph,
  Prism,
  K4FreeChi3,
  LK6,
};

std::optional<Family> parse_family(const std::string& token);
const std::vector<std::string>& family_tokens();

struct GenSpec {
  Family family;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<BlueprintPiece> blueprint;
  std::optional<Graph> base;  // input graph for the line_graph family
};

Graph gen(const GenSpec& spec);

}  // namespace cqc
