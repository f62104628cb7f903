#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cqc/cliques.hpp"
#include "cqc/colorers.hpp"
#include "cqc/decomposition.hpp"
#include "cqc/errors.hpp"
#include "cqc/generators.hpp"
#include "cqc/graph.hpp"
#include "cqc/recognition.hpp"

using namespace cqc;

namespace {

Graph octahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j - i != 3) edges.push_back({i, j});
  return Graph(6, edges);
}

Graph icosahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 5; ++i) {
    edges.push_back({0, i});              // top hub
    edges.push_back({11, i + 5});         // bottom hub
    edges.push_back({i, i % 5 + 1});      // top rim
    edges.push_back({i + 5, i % 5 + 6});  // bottom rim
    edges.push_back({i, i + 5});          // band
    edges.push_back({i, i % 5 + 6});      // band, shifted
  }
  return Graph(12, edges);
}

Graph random_graph(Lcg64& rng, int n, int percent) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < static_cast<std::uint64_t>(percent))
        edges.push_back({i, j});
  return Graph(n, edges);
}

bool valid_on(const Graph& g, const std::vector<int>& colors) {
  int k = 1;
  for (int c : colors) k = std::max(k, c);
  return check_clique_coloring(g, maximal_cliques(g), {colors, k}).valid;
}

bool no_mono_triangle(const Graph& g, const std::vector<int>& colors) {
  for (const auto& t : list_triangles(g))
    if (colors[t[0]] == colors[t[1]] && colors[t[1]] == colors[t[2]])
      return false;
  return true;
}

int used_colors(const std::vector<int>& colors) {
  std::set<int> s(colors.begin(), colors.end());
  return static_cast<int>(s.size());
}

// Every maximal clique of size >= 2 meets the set.
bool hits_all_cliques(const Graph& g, const VertexSet& t) {
  std::set<int> ts(t.begin(), t.end());
  for (const auto& c : maximal_cliques(g).cliques) {
    if (c.size() < 2) continue;
    bool hit = false;
    for (int v : c) hit |= ts.count(v) > 0;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("2-tree coloring: base cases and small fixtures") {
  auto k1 = color_2tree(gen_complete(1));
  CHECK(k1.coloring.colors == std::vector<int>{1});
  CHECK(k1.coloring.k == 1);
  CHECK(k1.validity.valid);

  auto k2 = color_2tree(gen_complete(2));
  CHECK(k2.coloring.colors == std::vector<int>{1, 2});

  auto k3 = color_2tree(gen_complete(3));
  CHECK(k3.coloring.colors == std::vector<int>{1, 1, 2});
  CHECK(k3.coloring.k == 2);
  CHECK(k3.validity.valid);
  CHECK(k3.trace.empty());

  // Diamond: apex 3 sits on the (1, 1)-colored base edge and must flip to 2.
  Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  auto d = color_2tree(diamond);
  CHECK(d.coloring.colors == std::vector<int>{1, 1, 2, 2});
  CHECK(d.coloring.k == 2);
}

TEST_CASE("2-tree coloring: random 2-trees get valid 2-colorings") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
    for (int n : {3, 4, 7, 12, 41, 200}) {
      Graph g = gen_two_tree(n, seed * 100 + n);
      auto cert = color_2tree(g);
      REQUIRE(cert.coloring.k == 2);
      CHECK(cert.validity.valid);
      CHECK(valid_on(g, cert.coloring.colors));
      CHECK(used_colors(cert.coloring.colors) == 2);
      // Independent confirmation on oracle-sized instances.
      if (n <= 12) CHECK(oracle_clique_chromatic(g, 2) == 2);
    }
  }
}

TEST_CASE("2-tree coloring: rejects graphs that are not 2-trees") {
  CHECK_THROWS_AS(color_2tree(Graph(0, {})), PreconditionError);
  CHECK_THROWS_AS(color_2tree(gen_cycle(4)), PreconditionError);
  CHECK_THROWS_AS(color_2tree(gen_complete(4)), PreconditionError);
  CHECK_THROWS_AS(color_2tree(Graph(2, {})), PreconditionError);  // disconnected
  Graph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK_THROWS_AS(color_2tree(two_triangles), PreconditionError);
}

TEST_CASE("merge coloring: triangulations get <= 3 colors with no mono triangle") {
  auto k4 = merge_coloring_triangulation(gen_complete(4));
  CHECK(k4.colors == std::vector<int>{2, 2, 1, 1});
  CHECK(k4.k == 2);

  for (const Graph& g : {octahedron(), icosahedron(), gen_apollonian(30, 11),
                         gen_apollonian(50, 7)}) {
    auto c = merge_coloring_triangulation(g);
    CHECK(c.k <= 3);
    CHECK(valid_on(g, c.colors));
    CHECK(no_mono_triangle(g, c.colors));
  }

  // Any graph whose edges all lie in triangles is accepted, 2-trees included.
  Graph t = gen_two_tree(30, 5);
  auto c = merge_coloring_triangulation(t);
  CHECK(c.k <= 3);
  CHECK(valid_on(t, c.colors));
}

TEST_CASE("merge coloring: rejects thin or dense inputs") {
  CHECK_THROWS_AS(merge_coloring_triangulation(gen_complete(2)), PreconditionError);
  CHECK_THROWS_AS(merge_coloring_triangulation(gen_cycle(4)), PreconditionError);
  CHECK_THROWS_AS(merge_coloring_triangulation(gen_cycle(6)), PreconditionError);
  // K7 is not 5-degenerate, so the greedy stage needs a seventh color.
  CHECK_THROWS_AS(merge_coloring_triangulation(gen_complete(7)), PreconditionError);
}

TEST_CASE("Wagner coloring: default palette and prescribed boundaries") {
  auto base = color_v8(std::nullopt);
  CHECK(base.colors == std::vector<int>{1, 2, 1, 2, 3, 1, 2, 3});
  CHECK(base.k == 3);

  // Distinct prescribed colors: permute the base coloring onto the edge.
  auto same = color_v8(WagnerPrescription{{0, 1}, {1, 2}});
  CHECK(same.colors == std::vector<int>{1, 2, 1, 2, 3, 1, 2, 3});
  auto swapped = color_v8(WagnerPrescription{{0, 1}, {2, 1}});
  CHECK(swapped.colors == std::vector<int>{2, 1, 2, 1, 3, 2, 1, 3});

  // Equal prescribed colors: proper except on the prescribed edge.
  auto equal = color_v8(WagnerPrescription{{0, 1}, {1, 1}});
  CHECK(equal.colors == std::vector<int>{1, 1, 2, 1, 2, 3, 1, 2});

  Graph v8 = gen_wagner();
  for (auto [u, v] : v8.edge_list()) {
    for (int cu = 1; cu <= 3; ++cu) {
      for (int cv = 1; cv <= 3; ++cv) {
        auto c = color_v8(WagnerPrescription{{u, v}, {cu, cv}});
        REQUIRE(c.colors.size() == 8);
        CHECK(c.colors[u] == cu);
        CHECK(c.colors[v] == cv);
        for (auto [a, b] : v8.edge_list()) {
          bool prescribed = (a == u && b == v) || (a == v && b == u);
          if (!prescribed) CHECK(c.colors[a] != c.colors[b]);
        }
      }
    }
  }
}

TEST_CASE("Wagner coloring: rejects bad prescriptions") {
  CHECK_THROWS_AS(color_v8(WagnerPrescription{{0, 2}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(color_v8(WagnerPrescription{{1, 4}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(color_v8(WagnerPrescription{{0, 0}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(color_v8(WagnerPrescription{{0, 8}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(color_v8(WagnerPrescription{{0, 1}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(color_v8(WagnerPrescription{{0, 1}, {1, 4}}), PreconditionError);
}

TEST_CASE("piece extension: fills a piece around a prescribed boundary") {
  Graph k4 = gen_complete(4);
  auto rainbow = extend_into_piece(k4, {}, {0, 1, 2}, {1, 2, 3});
  CHECK(rainbow.colors == std::vector<int>{1, 2, 3, 1});

  // With two boundary vertices on color 1 the fourth vertex cannot take 1:
  // that would close a monochromatic triangle inside the piece.
  auto forced = extend_into_piece(k4, {}, {0, 1, 2}, {1, 1, 2});
  CHECK(forced.colors == std::vector<int>{1, 1, 2, 2});

  Graph oct = octahedron();
  auto ext = extend_into_piece(oct, {}, {0, 1}, {1, 1});
  CHECK(ext.colors[0] == 1);
  CHECK(ext.colors[1] == 1);
  for (int c : ext.colors) CHECK((c >= 1 && c <= 3));
  CHECK(no_mono_triangle(oct, ext.colors));

  // Global hyperedges steer the search: the triangle alone would allow
  // color 1 on vertex 2, but the size-2 hyperedge {0, 2} forbids it.
  Graph tri = gen_complete(3);
  auto plain = extend_into_piece(tri, {}, {0, 1}, {1, 2});
  CHECK(plain.colors == std::vector<int>{1, 2, 1});
  auto steered = extend_into_piece(tri, {{0, 2}}, {0, 1}, {1, 2});
  CHECK(steered.colors == std::vector<int>{1, 2, 2});
}

TEST_CASE("piece extension: rejects bad boundaries and prescriptions") {
  Graph k4 = gen_complete(4);
  CHECK_THROWS_AS(extend_into_piece(k4, {}, {0}, {1}), PreconditionError);
  CHECK_THROWS_AS(extend_into_piece(k4, {}, {0, 1, 2, 3}, {1, 2, 3, 1}),
                  PreconditionError);
  CHECK_THROWS_AS(extend_into_piece(k4, {}, {0, 1}, {1}), PreconditionError);
  CHECK_THROWS_AS(extend_into_piece(k4, {}, {0, 4}, {1, 2}), PreconditionError);
  CHECK_THROWS_AS(extend_into_piece(k4, {}, {0, 1}, {0, 2}), PreconditionError);
  CHECK_THROWS_AS(extend_into_piece(k4, {}, {0, 1}, {1, 4}), PreconditionError);
  CHECK_THROWS_AS(extend_into_piece(gen_cycle(4), {}, {0, 2}, {1, 2}),
                  PreconditionError);  // boundary is not a clique
  CHECK_THROWS_AS(extend_into_piece(k4, {}, {0, 1, 2}, {2, 2, 2}),
                  PreconditionError);  // monochromatic boundary triangle
  Graph tri = gen_complete(3);
  CHECK_THROWS_AS(extend_into_piece(tri, {{0, 1}}, {0, 1}, {2, 2}),
                  PreconditionError);  // hyperedge inside boundary, mono
  CHECK_THROWS_AS(extend_into_piece(tri, {{0, 5}}, {0, 1}, {1, 2}),
                  PreconditionError);  // hyperedge vertex out of range
}

TEST_CASE("3-coloring pipeline: single-piece inputs") {
  auto k4 = color_maximal_k5_free(gen_complete(4));
  CHECK(k4.coloring.colors == std::vector<int>{2, 2, 1, 1});
  CHECK(k4.coloring.k == 2);
  CHECK(k4.validity.valid);
  CHECK(k4.trace.empty());

  Graph v8 = gen_wagner();
  auto w = color_maximal_k5_free(v8);
  CHECK(w.coloring.k == 3);
  CHECK(w.validity.valid);
  CHECK(w.trace.empty());
  // Three colors are optimal for the Wagner graph.
  CHECK(oracle_clique_chromatic(v8, 3) == 3);

  for (const Graph& g : {octahedron(), icosahedron(), gen_apollonian(30, 3)}) {
    auto cert = color_maximal_k5_free(g);
    CHECK(cert.coloring.k <= 3);
    CHECK(cert.validity.valid);
    CHECK(valid_on(g, cert.coloring.colors));
    CHECK(no_mono_triangle(g, cert.coloring.colors));
  }
  CHECK(oracle_clique_chromatic(octahedron(), 3) == 2);
}

TEST_CASE("3-coloring pipeline: glued sums color piece by piece") {
  std::vector<std::vector<BlueprintPiece>> blueprints = {
      {{PieceKind::Triangulation, 6, 2},
       {PieceKind::Triangulation, 7, 3},
       {PieceKind::Wagner, 8, 2}},
      {{PieceKind::Wagner, 8, 2},
       {PieceKind::Triangulation, 10, 2},
       {PieceKind::Triangulation, 12, 3},
       {PieceKind::Triangulation, 5, 3}},
      {{PieceKind::Triangulation, 9, 2}, {PieceKind::Wagner, 8, 2},
       {PieceKind::Wagner, 8, 2}},
  };
  for (std::size_t b = 0; b < blueprints.size(); ++b) {
    for (std::uint64_t seed : {1ULL, 17ULL, 99ULL}) {
      auto inst = gen_wagner_sum(blueprints[b], seed);
      const Graph& g = inst.graph;
      auto cert = color_maximal_k5_free(g);
      CHECK(cert.coloring.k <= 3);
      CHECK(cert.validity.valid);
      CHECK(valid_on(g, cert.coloring.colors));
      CHECK(no_mono_triangle(g, cert.coloring.colors));
      // One piece-extension step per glue edge.
      auto dec = wagner_decompose(g);
      REQUIRE(dec.has_value());
      std::size_t ext = 0;
      for (const auto& s : cert.trace)
        if (s.rule == ColorRule::PieceExtension) ++ext;
      CHECK(ext == dec->pieces.size() - 1);
      CHECK(ext == cert.trace.size());
    }
  }

  // Small Wagner-plus-triangulation sum: if the oracle rules out 2 colors,
  // the pipeline's 3 are optimal.
  auto inst = gen_wagner_sum(
      {{PieceKind::Wagner, 8, 2}, {PieceKind::Triangulation, 6, 2}}, 4);
  auto cert = color_maximal_k5_free(inst.graph);
  CHECK(cert.coloring.k <= 3);
  if (!exact_two_clique_coloring(inst.graph).has_value())
    CHECK(cert.coloring.k == 3);
}

TEST_CASE("3-coloring pipeline: rejects inputs without a decomposition") {
  CHECK_THROWS_AS(color_maximal_k5_free(gen_complete(3)), PreconditionError);
  CHECK_THROWS_AS(color_maximal_k5_free(gen_cycle(6)), PreconditionError);
  CHECK_THROWS_AS(color_maximal_k5_free(gen_complete(5)), PreconditionError);
  CHECK_THROWS_AS(color_maximal_k5_free(gen_wheel(6)), PreconditionError);
  CHECK_THROWS_AS(color_maximal_k5_free(gen_complete_bipartite(3, 3)),
                  PreconditionError);
  Graph two_k4(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                   {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  CHECK_THROWS_AS(color_maximal_k5_free(two_k4), PreconditionError);
}

TEST_CASE("odd-cycle coloring: alternate and close with a third color") {
  CHECK(color_odd_cycle(gen_cycle(5)).colors == std::vector<int>{1, 2, 1, 2, 3});
  CHECK(color_odd_cycle(gen_cycle(7)).colors ==
        std::vector<int>{1, 2, 1, 2, 1, 2, 3});
  Graph c9 = gen_cycle(9);
  auto c = color_odd_cycle(c9);
  CHECK(c.k == 3);
  CHECK(valid_on(c9, c.colors));
  // Three colors are necessary: no 2-clique-coloring of C9 exists.
  CHECK_FALSE(exact_two_clique_coloring(c9).has_value());

  CHECK_THROWS_AS(color_odd_cycle(gen_cycle(6)), PreconditionError);
  CHECK_THROWS_AS(color_odd_cycle(gen_cycle(3)), PreconditionError);
  CHECK_THROWS_AS(color_odd_cycle(Graph(4, {{0, 1}, {1, 2}, {2, 3}})),
                  PreconditionError);
  CHECK_THROWS_AS(color_odd_cycle(gen_wagner()), PreconditionError);
}

TEST_CASE("claw-free 2-coloring: small-degree components go to the base solver") {
  auto k1 = two_clique_color_claw_free(gen_complete(1));
  CHECK(k1.coloring.colors == std::vector<int>{1});
  CHECK(k1.coloring.k == 1);

  auto c6 = two_clique_color_claw_free(gen_cycle(6));
  CHECK(c6.coloring.k == 2);
  CHECK(c6.validity.valid);
  REQUIRE(c6.trace.size() == 1);
  CHECK(c6.trace[0].rule == ColorRule::BaseSolver);
  CHECK(c6.trace[0].vertex == 0);

  // C9^2 is claw-free with max degree 4: solved exactly, and the oracle
  // agrees two colors suffice.
  Graph c9p2 = gen_cycle_power(9, 2);
  auto cert = two_clique_color_claw_free(c9p2);
  CHECK(cert.coloring.k == 2);
  CHECK(cert.validity.valid);
  CHECK(oracle_clique_chromatic(c9p2, 2) == 2);

  // K5 has max degree 4, so it lands in the base solver when class
  // verification is off; with verification on it is rejected up front.
  auto k5 = two_clique_color_claw_free(gen_complete(5));
  CHECK(k5.coloring.k == 2);
  CHECK(k5.validity.valid);
  CHECK_THROWS_AS(two_clique_color_claw_free(gen_complete(5), true),
                  ClassViolationError);
}

TEST_CASE("claw-free 2-coloring: wheel neighborhoods and recursion") {
  Graph w5 = gen_wheel(5);
  auto cert = two_clique_color_claw_free(w5);
  CHECK(cert.coloring.colors == std::vector<int>{1, 2, 2, 2, 2, 2});
  CHECK(write_certificate(cert) == "1 2 2 2 2 2\nstep 1: try-color v=0\n");

  // The icosahedron is claw-free, 5-regular, and not itself a wheel: the
  // solver deletes hubs, recurses to a degree-4 core, and extends back out.
  Graph ico = icosahedron();
  auto ic = two_clique_color_claw_free(ico, true);
  CHECK(ic.coloring.k == 2);
  CHECK(ic.validity.valid);
  CHECK(oracle_clique_chromatic(ico, 2) == 2);
  // Hubs 0, 6, 8 are peeled in turn before the rest drops to degree 4.
  REQUIRE(ic.trace.size() == 4);
  CHECK(ic.trace[0].rule == ColorRule::BaseSolver);
  CHECK(ic.trace[0].vertex == 1);
  CHECK(ic.trace[1].vertex == 8);
  CHECK(ic.trace[2].vertex == 6);
  CHECK(ic.trace[3].vertex == 0);

  // L(K5) is claw-free with clique number 4 and degree 6: exercises the
  // 4-clique extension branch of the case split.
  Graph lk5 = line_graph(gen_complete(5));
  auto lc = two_clique_color_claw_free(lk5);
  CHECK(lc.coloring.k == 2);
  CHECK(lc.validity.valid);
  CHECK(oracle_clique_chromatic(lk5, 2) == 2);
}

TEST_CASE("claw-free 2-coloring: claw-free planar corpus") {
  std::vector<Graph> corpus;
  for (int n : {8, 10, 12, 14, 16, 20, 28})
    corpus.push_back(gen_claw_free_planar(ClawFreePlanarKind::CyclePowerTwo, n));
  for (int n : {6, 8, 10, 12, 14, 16})
    corpus.push_back(gen_claw_free_planar(ClawFreePlanarKind::LineOfPrism, n));

  for (const Graph& g : corpus) {
    auto cert = two_clique_color_claw_free(g, true);
    const int n = g.num_vertices();
    CHECK(cert.coloring.k == 2);
    CHECK(cert.validity.valid);
    CHECK(used_colors(cert.coloring.colors) == 2);
    if (n <= 14) CHECK(oracle_clique_chromatic(g, 2) == 2);

    // Corollary: the smaller class is a clique transversal of size <= n/2.
    auto t = transversal_from_coloring(g, maximal_cliques(g), cert.coloring);
    CHECK(static_cast<int>(t.size()) <= n / 2);
    CHECK(hits_all_cliques(g, t));
  }

  // Disconnected inputs are colored component by component.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) edges.push_back({i, (i + 1) % 6});
  for (int i = 0; i < 8; ++i) edges.push_back({6 + i, 6 + (i + 1) % 8});
  Graph both(14, edges);
  auto cert = two_clique_color_claw_free(both);
  CHECK(cert.coloring.k == 2);
  CHECK(cert.validity.valid);
  CHECK(cert.trace.size() == 2);
}

TEST_CASE("claw-free 2-coloring: odd cycles and class violations") {
  CHECK_THROWS_WITH_AS(
      two_clique_color_claw_free(gen_cycle(7)),
      "a connected component is an odd cycle of length 7: it has no "
      "2-clique-coloring (its clique-chromatic number is 3); color-oddcycle "
      "produces an optimal 3-coloring",
      ChromaticExceptionError);

  // An odd-cycle component anywhere in the input triggers the exception.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 6; ++i) edges.push_back({5 + i, 5 + (i + 1) % 6});
  CHECK_THROWS_AS(two_clique_color_claw_free(Graph(11, edges)),
                  ChromaticExceptionError);

  // Odd cycle exposed mid-recursion: deleting the apex of this fan leaves
  // C7, and the component is then handed to the exact solver instead.
  std::vector<std::pair<int, int>> fan;
  for (int i = 0; i < 7; ++i) fan.push_back({i, (i + 1) % 7});
  for (int i = 0; i <= 4; ++i) fan.push_back({i, 7});
  auto cert = two_clique_color_claw_free(Graph(8, fan));
  CHECK(cert.coloring.k == 2);
  CHECK(cert.validity.valid);
  REQUIRE(cert.trace.size() == 1);
  CHECK(cert.trace[0].rule == ColorRule::BaseSolver);
  CHECK(cert.trace[0].vertex == 7);

  // A 5-clique is a K5 minor on its own: rejected with or without the
  // explicit class check (K6 and L(K6) both have clique number >= 5).
  CHECK_THROWS_AS(two_clique_color_claw_free(gen_complete(6)),
                  ClassViolationError);
  CHECK_THROWS_AS(two_clique_color_claw_free(gen_l_k6()), ClassViolationError);

  // verify_class reports claws and K5 minors before any coloring happens.
  CHECK_THROWS_AS(two_clique_color_claw_free(gen_complete_bipartite(1, 3), true),
                  ClassViolationError);
  Graph c9p2 = gen_cycle_power(9, 2);  // claw-free but contracts to K5
  CHECK_THROWS_AS(two_clique_color_claw_free(c9p2, true), ClassViolationError);
  CHECK(two_clique_color_claw_free(c9p2, false).validity.valid);
}

TEST_CASE("degree-5 extension: staged repair around a deleted vertex") {
  Graph w5 = gen_wheel(5);

  // Monochromatic rim: color 1 on the hub already works.
  auto [c1, r1] = extend_degree5(w5, 0, {{0, 2, 2, 2, 2, 2}, 2});
  CHECK(c1.colors == std::vector<int>{1, 2, 2, 2, 2, 2});
  CHECK(r1 == ColorRule::TryColor);

  // Alternating rim: still a first-stage success.
  auto [c2, r2] = extend_degree5(w5, 0, {{0, 2, 1, 2, 1, 2}, 2});
  CHECK(c2.colors == std::vector<int>{1, 2, 1, 2, 1, 2});
  CHECK(r2 == ColorRule::TryColor);
  CHECK(valid_on(w5, c2.colors));

  // Both hub colors blocked: rim edges (1,2) and (5,1) are monochromatic in
  // color 1 and (3,4) in color 2, each shielded from maximality by an outer
  // triangle, so the local search must recolor the closed neighborhood.
  std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
      {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
      {6, 1}, {6, 2}, {7, 2}, {7, 3}, {8, 3},
      {8, 4}, {9, 4}, {9, 5}, {10, 5}, {10, 1}};
  Graph shielded(11, edges);
  REQUIRE(shielded.degree(0) == 5);
  VertexColoring sub{{0, 1, 1, 2, 2, 1, 2, 1, 1, 1, 2}, 2};
  auto [c3, r3] = extend_degree5(shielded, 0, sub);
  CHECK(r3 == ColorRule::LocalSearch);
  CHECK(valid_on(shielded, c3.colors));
  // Only the closed neighborhood of 0 may change.
  for (int v = 6; v <= 10; ++v) CHECK(c3.colors[v] == sub.colors[v]);
}

TEST_CASE("4-clique extension: staged repair around a deleted vertex") {
  // First stage: in K4 the only maximal clique through v is the 4-clique
  // itself, already bichromatic, so color 1 goes through unchanged.
  auto [c1, r1] = extend_4clique(gen_complete(4), 3, {{1, 1, 2, 0}, 2});
  CHECK(c1.colors == std::vector<int>{1, 1, 2, 1});
  CHECK(r1 == ColorRule::TryColor);

  // Two 4-cliques sharing only v, one monochromatic in each color: flip
  // v's component away from the color-1 blocker and give v color 2.
  Graph two4(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                 {0, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}});
  auto [c2, r2] = extend_4clique(two4, 0, {{0, 1, 1, 1, 2, 2, 2}, 2});
  CHECK(c2.colors == std::vector<int>{2, 1, 1, 1, 1, 1, 1});
  CHECK(r2 == ColorRule::ComponentFlip);
  CHECK(valid_on(two4, c2.colors));

  // Both blockers are triangles met by one 4-clique through v: swap the
  // 4-clique's representatives of the two blockers.
  Graph swapg(8, {{0, 1}, {0, 2}, {1, 2},          // blocking triangle, color 1
                  {0, 3}, {0, 4}, {3, 4},          // blocking triangle, color 2
                  {0, 5}, {2, 4}, {2, 5}, {4, 5},  // 4-clique {0,2,4,5}
                  {1, 6}, {2, 6},                  // shields {1,2}
                  {3, 7}, {4, 7}});                // shields {3,4}
  auto [c3, r3] = extend_4clique(swapg, 0, {{0, 1, 1, 2, 2, 1, 2, 1}, 2});
  CHECK(r3 == ColorRule::X2Y2Swap);
  CHECK(c3.colors == std::vector<int>{1, 1, 2, 2, 1, 1, 2, 1});
  CHECK(valid_on(swapg, c3.colors));
}

TEST_CASE("extension helpers: input validation") {
  Graph w5 = gen_wheel(5);
  VertexColoring rim_only{{0, 2, 2, 2, 2, 2}, 2};
  CHECK_THROWS_AS(extend_degree5(w5, 0, {{0, 2, 2}, 2}), PreconditionError);
  CHECK_THROWS_AS(extend_degree5(w5, 0, {{1, 2, 2, 2, 2, 2}, 2}),
                  PreconditionError);  // v must be uncolored
  CHECK_THROWS_AS(extend_degree5(w5, 1, {{2, 0, 2, 2, 2, 2}, 2}),
                  PreconditionError);  // degree 3, not 5
  CHECK_THROWS_AS(extend_degree5(w5, -1, rim_only), PreconditionError);

  CHECK_THROWS_AS(extend_4clique(w5, 0, rim_only),
                  PreconditionError);  // clique number 3, not 4
  CHECK_THROWS_AS(extend_4clique(gen_complete(4), 3, {{1, 1, 2}, 2}),
                  PreconditionError);
  CHECK_THROWS_AS(extend_4clique(gen_complete(4), 3, {{1, 1, 2, 2}, 2}),
                  PreconditionError);  // v must be uncolored
  Graph pendant(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(extend_4clique(pendant, 4, {{1, 1, 2, 2, 0}, 2}),
                  PreconditionError);  // v lies in no 4-clique
}

TEST_CASE("maximal cliques survive vertex deletion") {
  Lcg64 rng(20260815);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng.below(7));
    Graph g = random_graph(rng, n, 20 + static_cast<int>(rng.below(60)));
    auto gset = maximal_cliques(g).cliques;
    std::set<VertexSet> in_g(gset.begin(), gset.end());
    for (int v = 0; v < n; ++v) {
      auto del = delete_vertex(g, v);
      std::set<VertexSet> in_del;
      for (const auto& c : maximal_cliques(del.graph).cliques) {
        VertexSet mapped;
        for (int u : c) mapped.push_back(del.to_parent[u]);
        in_del.insert(mapped);
      }
      // Forward: maximal cliques avoiding v stay maximal after deletion.
      for (const auto& c : gset)
        if (!std::binary_search(c.begin(), c.end(), v))
          CHECK(in_del.count(c) == 1);
      // Backward: a new maximal clique can only be an old one minus v.
      for (const auto& c : in_del) {
        bool toward_v = true;
        for (int u : c) toward_v &= g.has_edge(u, v);
        CHECK((in_g.count(c) == 1 || toward_v));
      }
    }
  }
}

TEST_CASE("certificates: serialization and determinism") {
  auto w5 = two_clique_color_claw_free(gen_wheel(5));
  CHECK(write_certificate(w5) == "1 2 2 2 2 2\nstep 1: try-color v=0\n");

  auto bare = color_2tree(gen_complete(3));
  CHECK(write_certificate(bare) == "1 1 2\n");

  Graph c12 = gen_cycle_power(12, 2);
  CHECK(write_certificate(two_clique_color_claw_free(c12)) ==
        write_certificate(two_clique_color_claw_free(c12)));

  Graph ico = icosahedron();
  CHECK(write_certificate(two_clique_color_claw_free(ico)) ==
        write_certificate(two_clique_color_claw_free(ico)));

  auto inst = gen_wagner_sum(
      {{PieceKind::Triangulation, 8, 2}, {PieceKind::Wagner, 8, 2}}, 12);
  CHECK(write_certificate(color_maximal_k5_free(inst.graph)) ==
        write_certificate(color_maximal_k5_free(inst.graph)));
}
