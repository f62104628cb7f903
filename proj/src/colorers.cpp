#include "cqc/colorers.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cqc/recognition.hpp"

namespace cqc {

namespace {

// Thrown inside the claw-free recursion when a component turns out to be an
// odd cycle of length >= 5; callers either escalate to the exact solver
// (mid-recursion) or report the chromatic exception (top level).
struct OddCycleSignal {
  int length;
};

bool v8_adjacent(int i, int j) {
  int d = std::abs(i - j);
  return d == 1 || d == 7 || d == 4;
}

constexpr int kFixedV8[8] = {1, 2, 1, 2, 3, 1, 2, 3};

void assert_valid(const Graph& g, const CliqueSet& cs, const VertexColoring& c,
                  ValidityReport* out, const char* what) {
  ValidityReport r = check_clique_coloring(g, cs, c);
  if (!r.valid) throw InternalInconsistencyError(std::string(what) + " failed validation");
  if (out) *out = r;
}

void assert_no_monochromatic_triangle(const Graph& g, const std::vector<int>& colors) {
  for (const auto& t : list_triangles(g))
    if (colors[t[0]] == colors[t[1]] && colors[t[1]] == colors[t[2]])
      throw InternalInconsistencyError("a triangle came out monochromatic");
}

// Maximal cliques of size >= 2 through v.
std::vector<VertexSet> cliques_through(const CliqueSet& cs, int v) {
  std::vector<VertexSet> out;
  for (const auto& c : cs.cliques)
    if (c.size() >= 2 && std::binary_search(c.begin(), c.end(), v)) out.push_back(c);
  return out;
}

bool clique_monochromatic(const VertexSet& c, const std::vector<int>& colors) {
  for (size_t i = 1; i < c.size(); ++i)
    if (colors[c[i]] != colors[c[0]]) return false;
  return true;
}

// First color in {1, 2} for v that leaves every maximal clique through v
// bichromatic (cliques avoiding v stay maximal and valid in g - v).
std::optional<int> try_color_stage(const std::vector<VertexSet>& through_v,
                                   std::vector<int>& colors, int v) {
  for (int c : {1, 2}) {
    colors[v] = c;
    bool ok = true;
    for (const auto& q : through_v)
      if (clique_monochromatic(q, colors)) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  colors[v] = 0;
  return std::nullopt;
}

// All 2^|ball| recolorings of ball over {1, 2}, base coloring elsewhere;
// first fully valid one wins.
std::optional<std::vector<int>> local_search_stage(const Graph& g, const CliqueSet& cs,
                                                   const VertexSet& ball,
                                                   const std::vector<int>& base) {
  const size_t sz = ball.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sz); ++mask) {
    std::vector<int> colors = base;
    for (size_t i = 0; i < sz; ++i) colors[ball[i]] = 1 + ((mask >> i) & 1);
    if (check_clique_coloring(g, cs, {colors, 2}).valid) return colors;
  }
  return std::nullopt;
}

std::optional<VertexColoring> exact_or_inconsistent(const Graph& g, const char* context) {
  try {
    return exact_two_clique_coloring(g);
  } catch (const SizeGuardError&) {
    throw InternalInconsistencyError(std::string(context) +
                                     ": instance exceeds the exact-solver size guard");
  }
}

}  // namespace

const char* rule_name(ColorRule r) {
  switch (r) {
    case ColorRule::TryColor: return "try-color";
    case ColorRule::ComponentFlip: return "component-flip";
    case ColorRule::X2Y2Swap: return "x2y2-swap";
    case ColorRule::LocalSearch: return "local-search";
    case ColorRule::BaseSolver: return "base-solver";
    case ColorRule::PieceExtension: return "piece-extension";
  }
  return "?";
}

ColoringCertificate color_2tree(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw PreconditionError("2-tree coloring needs at least one vertex");
  ColoringCertificate cert;
  if (n <= 2) {
    if (!is_connected(g)) throw PreconditionError("2-tree coloring needs a connected graph");
    cert.coloring.colors.assign(n, 1);
    if (n == 2) cert.coloring.colors[1] = 2;
    cert.coloring.k = n;
  } else {
    auto order = two_tree_order(g);
    std::vector<int> colors(n, 0);
    colors[order.order[0]] = 1;
    colors[order.order[1]] = 1;
    colors[order.order[2]] = 2;
    for (size_t i = 3; i < order.order.size(); ++i) {
      auto [a, b] = order.attach[i];
      colors[order.order[i]] = colors[a] == colors[b] ? 3 - colors[a] : 1;
    }
    cert.coloring = {colors, 2};
  }
  assert_valid(g, maximal_cliques(g), cert.coloring, &cert.validity, "2-tree coloring");
  return cert;
}

VertexColoring merge_coloring_triangulation(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 3) throw PreconditionError("triangulation coloring needs n >= 3");
  for (auto [u, v] : g.edge_list()) {
    bool in_triangle = false;
    for (int w : g.neighbors(u))
      if (w != v && g.has_edge(w, v)) {
        in_triangle = true;
        break;
      }
    if (!in_triangle) throw PreconditionError("an edge lies in no triangle");
  }
  // Degeneracy order: repeatedly delete a minimum-degree vertex (smallest id).
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> alive(n, true);
  std::vector<int> removal;
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    alive[pick] = false;
    removal.push_back(pick);
    for (int u : g.neighbors(pick))
      if (alive[u]) --deg[u];
  }
  // Greedy proper coloring in reverse removal order; each vertex sees at most
  // its back-degree <= degeneracy many colored neighbors.
  std::vector<int> proper(n, 0);
  for (size_t i = removal.size(); i-- > 0;) {
    int v = removal[i];
    bool used[8] = {};
    for (int u : g.neighbors(v))
      if (proper[u] && proper[u] <= 7) used[proper[u]] = true;
    int c = 1;
    while (c <= 7 && used[c]) ++c;
    if (c > 6) throw PreconditionError("graph is not 5-degenerate (not K5-minor-free)");
    proper[v] = c;
  }
  std::vector<int> merged(n);
  int k = 0;
  for (int v = 0; v < n; ++v) {
    merged[v] = (proper[v] + 1) / 2;
    k = std::max(k, merged[v]);
  }
  VertexColoring out{merged, k};
  assert_valid(g, maximal_cliques(g), out, nullptr, "merge coloring");
  assert_no_monochromatic_triangle(g, merged);
  return out;
}

VertexColoring color_v8(const std::optional<WagnerPrescription>& boundary) {
  std::vector<int> colors(8, 0);
  if (!boundary) {
    colors.assign(kFixedV8, kFixedV8 + 8);
    return {colors, 3};
  }
  auto [eu, ev] = boundary->edge;
  auto [cu, cv] = boundary->colors;
  if (eu < 0 || eu > 7 || ev < 0 || ev > 7 || eu == ev || !v8_adjacent(eu, ev))
    throw PreconditionError("prescription must name an edge of the canonical Wagner graph");
  if (cu < 1 || cu > 3 || cv < 1 || cv > 3)
    throw PreconditionError("prescribed colors must be in 1..3");
  if (cu != cv) {
    // Permute the fixed proper coloring onto the prescription.
    int bu = kFixedV8[eu], bv = kFixedV8[ev];
    int perm[4] = {0, 0, 0, 0};
    perm[bu] = cu;
    perm[bv] = cv;
    perm[6 - bu - bv] = 6 - cu - cv;
    for (int i = 0; i < 8; ++i) colors[i] = perm[kFixedV8[i]];
    return {colors, 3};
  }
  // Equal endpoint colors: lexicographically first coloring proper on every
  // edge except the prescribed one.
  colors[eu] = cu;
  colors[ev] = cv;
  std::vector<int> free_v;
  for (int i = 0; i < 8; ++i)
    if (colors[i] == 0) free_v.push_back(i);
  auto fits = [&](int i, int c) {
    for (int j = 0; j < 8; ++j) {
      if (j == i || colors[j] == 0 || !v8_adjacent(i, j)) continue;
      bool exempt = (i == eu && j == ev) || (i == ev && j == eu);
      if (!exempt && colors[j] == c) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, size_t idx) -> bool {
    if (idx == free_v.size()) return true;
    for (int c = 1; c <= 3; ++c)
      if (fits(free_v[idx], c)) {
        colors[free_v[idx]] = c;
        if (self(self, idx + 1)) return true;
        colors[free_v[idx]] = 0;
      }
    return false;
  };
  if (!dfs(dfs, 0))
    throw InternalInconsistencyError("no near-proper Wagner coloring exists (cannot occur)");
  return {colors, 3};
}

VertexColoring extend_into_piece(const Graph& piece,
                                 const std::vector<VertexSet>& global_hyperedges,
                                 const VertexSet& boundary,
                                 const std::vector<int>& boundary_colors) {
  const int n = piece.num_vertices();
  if (boundary.size() < 2 || boundary.size() > 3 || boundary.size() != boundary_colors.size())
    throw PreconditionError("boundary must be a K2 or K3 with one color per vertex");
  for (size_t i = 0; i < boundary.size(); ++i) {
    if (boundary[i] < 0 || boundary[i] >= n)
      throw PreconditionError("boundary vertex out of range");
    if (boundary_colors[i] < 1 || boundary_colors[i] > 3)
      throw PreconditionError("boundary colors must be in 1..3");
    for (size_t j = i + 1; j < boundary.size(); ++j)
      if (!piece.has_edge(boundary[i], boundary[j]))
        throw PreconditionError("boundary must induce a complete subgraph");
  }
  if (boundary.size() == 3 && boundary_colors[0] == boundary_colors[1] &&
      boundary_colors[1] == boundary_colors[2])
    throw PreconditionError("prescription makes the boundary triangle monochromatic");

  std::vector<int> colors(n, 0);
  for (size_t i = 0; i < boundary.size(); ++i) colors[boundary[i]] = boundary_colors[i];

  // Not-all-equal constraints: triangles of the piece plus the given global
  // hyperedges (both fully inside the piece by construction).
  std::vector<VertexSet> constraints;
  for (const auto& t : list_triangles(piece)) constraints.push_back({t[0], t[1], t[2]});
  for (const auto& h : global_hyperedges) {
    if (h.size() < 2) continue;
    for (int v : h)
      if (v < 0 || v >= n) throw PreconditionError("hyperedge vertex out of range");
    constraints.push_back(h);
  }
  for (const auto& c : constraints) {
    bool full = true, mono = true;
    for (int v : c) {
      if (colors[v] == 0) full = false;
      if (colors[v] != colors[c[0]]) mono = false;
    }
    if (full && mono)
      throw PreconditionError("prescription makes a hyperedge inside the boundary monochromatic");
  }
  std::vector<std::vector<int>> incident(n);
  for (size_t i = 0; i < constraints.size(); ++i)
    for (int v : constraints[i]) incident[v].push_back(static_cast<int>(i));

  // Assignment order: breadth-first from the boundary.
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  std::vector<int> queue;
  for (int v : boundary) {
    seen[v] = true;
    queue.push_back(v);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int u : piece.neighbors(queue[qi]))
      if (!seen[u]) {
        seen[u] = true;
        queue.push_back(u);
        order.push_back(u);
      }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) order.push_back(v);

  auto violates = [&](int v) {
    for (int ci : incident[v]) {
      const auto& c = constraints[ci];
      bool full = true, mono = true;
      for (int w : c) {
        if (colors[w] == 0) {
          full = false;
          break;
        }
        if (colors[w] != colors[c[0]]) mono = false;
      }
      if (full && mono) return true;
    }
    return false;
  };
  auto dfs = [&](auto&& self, size_t idx) -> bool {
    if (idx == order.size()) return true;
    int v = order[idx];
    for (int c = 1; c <= 3; ++c) {
      colors[v] = c;
      if (!violates(v) && self(self, idx + 1)) return true;
    }
    colors[v] = 0;
    return false;
  };
  if (!dfs(dfs, 0)) throw InternalInconsistencyError("piece extension search exhausted");
  return {colors, 3};
}

ColoringCertificate color_maximal_k5_free(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 4) throw PreconditionError("3-clique-coloring pipeline needs n >= 4");
  auto dec = wagner_decompose(g);
  if (!dec)
    throw PreconditionError(
        "no Wagner decomposition: the graph is not edge-maximal K5-minor-free");
  auto cs = maximal_cliques(g);
  std::vector<VertexSet> hyper;
  for (const auto& c : cs.cliques)
    if (c.size() >= 2) hyper.push_back(c);

  const auto& pieces = dec->pieces;
  std::vector<std::vector<std::pair<int, int>>> tree(pieces.size());
  for (size_t i = 0; i < dec->glue.size(); ++i) {
    tree[dec->glue[i].parent].push_back({dec->glue[i].child, static_cast<int>(i)});
    tree[dec->glue[i].child].push_back({dec->glue[i].parent, static_cast<int>(i)});
  }
  for (auto& row : tree) std::sort(row.begin(), row.end());
  std::vector<int> order{0};
  std::vector<int> via_glue(pieces.size(), -1);
  std::vector<bool> seen(pieces.size(), false);
  seen[0] = true;
  for (size_t qi = 0; qi < order.size(); ++qi)
    for (auto [q, gi] : tree[order[qi]])
      if (!seen[q]) {
        seen[q] = true;
        via_glue[q] = gi;
        order.push_back(q);
      }
  if (order.size() != pieces.size())
    throw InternalInconsistencyError("piece tree is disconnected");

  ColoringCertificate cert;
  std::vector<int> colors(n, 0);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    const auto& piece = pieces[order[qi]];
    const int pn = piece.piece.num_vertices();
    std::vector<int> to_local(n, -1);
    for (int i = 0; i < pn; ++i) to_local[piece.to_host[i]] = i;

    std::vector<int> piece_colors(pn, 0);
    if (qi == 0) {
      if (piece.kind == PieceKind::Triangulation) {
        piece_colors = merge_coloring_triangulation(piece.piece).colors;
      } else {
        auto iso = is_wagner_graph(piece.piece);
        if (!iso) throw InternalInconsistencyError("wagner piece fails the isomorphism test");
        auto vc = color_v8(std::nullopt);
        for (int i = 0; i < 8; ++i) piece_colors[(*iso)[i]] = vc.colors[i];
      }
    } else {
      const auto& glue = dec->glue[via_glue[order[qi]]];
      std::vector<std::pair<int, int>> bound;  // (local vertex, prescribed color)
      for (int v : glue.boundary) {
        if (to_local[v] < 0 || colors[v] == 0)
          throw InternalInconsistencyError("glue boundary is not colored yet");
        bound.push_back({to_local[v], colors[v]});
      }
      std::sort(bound.begin(), bound.end());
      if (piece.kind == PieceKind::Triangulation) {
        std::vector<VertexSet> local_hyper;
        for (const auto& h : hyper) {
          bool inside = true;
          for (int v : h)
            if (to_local[v] < 0) {
              inside = false;
              break;
            }
          if (!inside) continue;
          VertexSet lh;
          for (int v : h) lh.push_back(to_local[v]);
          std::sort(lh.begin(), lh.end());
          local_hyper.push_back(lh);
        }
        VertexSet b;
        std::vector<int> bc;
        for (auto [lv, c] : bound) {
          b.push_back(lv);
          bc.push_back(c);
        }
        piece_colors = extend_into_piece(piece.piece, local_hyper, b, bc).colors;
      } else {
        if (bound.size() != 2)
          throw InternalInconsistencyError("wagner piece glued on a triangle");
        auto iso = is_wagner_graph(piece.piece);
        if (!iso) throw InternalInconsistencyError("wagner piece fails the isomorphism test");
        std::vector<int> canon_of(pn, -1);
        for (int i = 0; i < 8; ++i) canon_of[(*iso)[i]] = i;
        WagnerPrescription wp{{canon_of[bound[0].first], canon_of[bound[1].first]},
                              {bound[0].second, bound[1].second}};
        auto vc = color_v8(wp);
        for (int i = 0; i < 8; ++i) piece_colors[(*iso)[i]] = vc.colors[i];
      }
      cert.trace.push_back({ColorRule::PieceExtension, glue.boundary[0]});
    }
    for (int i = 0; i < pn; ++i) {
      int hv = piece.to_host[i];
      if (colors[hv] == 0)
        colors[hv] = piece_colors[i];
      else if (colors[hv] != piece_colors[i])
        throw InternalInconsistencyError("piece colorings disagree on a shared vertex");
    }
  }
  int k = *std::max_element(colors.begin(), colors.end());
  cert.coloring = {colors, k};
  assert_valid(g, cs, cert.coloring, &cert.validity, "3-clique-coloring pipeline");
  assert_no_monochromatic_triangle(g, colors);
  return cert;
}

VertexColoring color_odd_cycle(const Graph& g) {
  auto len = odd_cycle_length(g);
  if (!len || *len < 5)
    throw PreconditionError("input must be an odd cycle of length >= 5");
  const int n = g.num_vertices();
  std::vector<int> colors(n, 0);
  int prev = -1, cur = 0;
  for (int pos = 0; pos < n; ++pos) {
    colors[cur] = pos == n - 1 ? 3 : 1 + pos % 2;
    int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    prev = cur;
    cur = next;
  }
  VertexColoring out{colors, 3};
  assert_valid(g, maximal_cliques(g), out, nullptr, "odd-cycle coloring");
  return out;
}

std::pair<VertexColoring, ColorRule> extend_degree5(const Graph& g, int v,
                                                    const VertexColoring& sub) {
  const int n = g.num_vertices();
  if (v < 0 || v >= n || static_cast<int>(sub.colors.size()) != n || sub.colors[v] != 0)
    throw PreconditionError("sub coloring must cover all vertices except v");
  if (g.degree(v) != 5) throw PreconditionError("v must have degree 5");
  auto cs = maximal_cliques(g);
  auto through_v = cliques_through(cs, v);
  std::vector<int> colors = sub.colors;
  if (try_color_stage(through_v, colors, v))
    return {{colors, 2}, ColorRule::TryColor};
  VertexSet ball = g.neighbors(v);
  ball.push_back(v);
  std::sort(ball.begin(), ball.end());
  if (auto found = local_search_stage(g, cs, ball, sub.colors))
    return {{*found, 2}, ColorRule::LocalSearch};
  if (auto ex = exact_or_inconsistent(g, "degree-5 extension"))
    return {*ex, ColorRule::BaseSolver};
  throw InternalInconsistencyError("degree-5 extension failed every stage");
}

std::pair<VertexColoring, ColorRule> extend_4clique(const Graph& g, int v,
                                                    const VertexColoring& sub) {
  const int n = g.num_vertices();
  if (v < 0 || v >= n || static_cast<int>(sub.colors.size()) != n || sub.colors[v] != 0)
    throw PreconditionError("sub coloring must cover all vertices except v");
  auto cs = maximal_cliques(g);
  std::size_t omega = 0;
  for (const auto& c : cs.cliques) omega = std::max(omega, c.size());
  if (omega != 4) throw PreconditionError("clique number must be exactly 4");
  auto through_v = cliques_through(cs, v);
  bool in_4clique = false;
  for (const auto& c : through_v) in_4clique |= c.size() == 4;
  if (!in_4clique) throw PreconditionError("v must lie in a 4-clique");

  std::vector<int> colors = sub.colors;
  if (try_color_stage(through_v, colors, v))
    return {{colors, 2}, ColorRule::TryColor};

  // Both colors blocked: some clique through v is monochromatic color 1
  // outside v and another is monochromatic color 2 outside v.
  auto blocking = [&](int color) -> std::optional<VertexSet> {
    for (const auto& q : through_v) {
      bool mono = true;
      for (int w : q)
        if (w != v && sub.colors[w] != color) {
          mono = false;
          break;
        }
      if (mono) return q;
    }
    return std::nullopt;
  };
  auto k1 = blocking(1);
  auto k2 = blocking(2);

  // Component flip: when a blocking clique is a 4-clique, recolor the whole
  // component of v away from it and give v the opposite color.
  for (int side : {1, 2}) {
    const auto& blk = side == 1 ? k1 : k2;
    if (!blk || blk->size() != 4) continue;
    // Keep everything except the blocking triple blk - v (v itself stays).
    VertexSet rest;
    for (int u = 0; u < n; ++u)
      if (u == v || !std::binary_search(blk->begin(), blk->end(), u)) rest.push_back(u);
    auto sg = induced_subgraph(g, rest);
    int v_local = static_cast<int>(
        std::lower_bound(sg.to_parent.begin(), sg.to_parent.end(), v) - sg.to_parent.begin());
    colors = sub.colors;
    for (const auto& comp : connected_components(sg.graph)) {
      if (!std::binary_search(comp.begin(), comp.end(), v_local)) continue;
      for (int u : comp)
        if (sg.to_parent[u] != v) colors[sg.to_parent[u]] = 3 - colors[sg.to_parent[u]];
      break;
    }
    colors[v] = 3 - side;
    if (check_clique_coloring(g, cs, {colors, 2}).valid)
      return {{colors, 2}, ColorRule::ComponentFlip};
  }

  // x2/y2 swap: both blocking cliques are triangles; route the repair through
  // a 4-clique containing v that meets both.
  if (k1 && k2) {
    for (const auto& w4 : through_v) {
      if (w4.size() != 4) continue;
      int x2 = -1, y2 = -1;
      for (int u : w4) {
        if (u == v) continue;
        if (x2 < 0 && std::binary_search(k1->begin(), k1->end(), u)) x2 = u;
      }
      for (int u : w4) {
        if (u == v || u == x2) continue;
        if (y2 < 0 && std::binary_search(k2->begin(), k2->end(), u)) y2 = u;
      }
      if (x2 < 0 || y2 < 0) continue;
      for (int cv : {1, 2}) {
        colors = sub.colors;
        std::swap(colors[x2], colors[y2]);
        colors[v] = cv;
        if (check_clique_coloring(g, cs, {colors, 2}).valid)
          return {{colors, 2}, ColorRule::X2Y2Swap};
      }
    }
  }

  VertexSet ball = g.neighbors(v);
  ball.push_back(v);
  std::sort(ball.begin(), ball.end());
  if (auto found = local_search_stage(g, cs, ball, sub.colors))
    return {{*found, 2}, ColorRule::LocalSearch};
  if (auto ex = exact_or_inconsistent(g, "4-clique extension"))
    return {*ex, ColorRule::BaseSolver};
  throw InternalInconsistencyError("4-clique extension failed every stage");
}

namespace {

// hub/rim test for the 5-wheel.
std::optional<int> w5_hub(const Graph& g) {
  if (g.num_vertices() != 6 || g.num_edges() != 10) return std::nullopt;
  int hub = -1;
  for (int v = 0; v < 6; ++v) {
    if (g.degree(v) == 5) {
      if (hub >= 0) return std::nullopt;
      hub = v;
    } else if (g.degree(v) != 3) {
      return std::nullopt;
    }
  }
  if (hub < 0) return std::nullopt;
  for (int v = 0; v < 6; ++v) {
    if (v == hub) continue;
    int rim_deg = 0;
    for (int u : g.neighbors(v))
      if (u != hub) ++rim_deg;
    if (rim_deg != 2) return std::nullopt;
  }
  return hub;
}

// Recursive worker for the claw-free 2-coloring; h is connected, to_global
// maps h's vertices to input coordinates (used only in trace entries).
std::vector<int> solve_component(const Graph& h, const std::vector<int>& to_global,
                                 std::vector<TraceStep>& trace);

std::vector<int> delete_recurse_extend(const Graph& h, int v,
                                       const std::vector<int>& to_global,
                                       std::vector<TraceStep>& trace, bool wheel) {
  auto del = delete_vertex(h, v);
  std::vector<int> sub_colors(h.num_vertices(), 0);
  size_t trace_mark = trace.size();
  try {
    for (const auto& comp : connected_components(del.graph)) {
      auto csub = induced_subgraph(del.graph, comp);
      std::vector<int> tg;
      for (int u : csub.to_parent) tg.push_back(to_global[del.to_parent[u]]);
      auto cc = solve_component(csub.graph, tg, trace);
      for (size_t i = 0; i < cc.size(); ++i)
        sub_colors[del.to_parent[csub.to_parent[i]]] = cc[i];
    }
  } catch (const OddCycleSignal&) {
    // Deleting v exposed an odd cycle; solve the pre-deletion graph exactly.
    trace.resize(trace_mark);
    auto ex = exact_or_inconsistent(h, "odd-cycle escalation");
    if (!ex)
      throw InternalInconsistencyError(
          "no 2-clique-coloring found after an odd-cycle escalation; the input "
          "likely violates the claw-free / K5-minor-free precondition");
    trace.push_back({ColorRule::BaseSolver, to_global[v]});
    return ex->colors;
  }
  auto [vc, rule] = wheel ? extend_degree5(h, v, {sub_colors, 2})
                          : extend_4clique(h, v, {sub_colors, 2});
  trace.push_back({rule, to_global[v]});
  return vc.colors;
}

std::vector<int> solve_component(const Graph& h, const std::vector<int>& to_global,
                                 std::vector<TraceStep>& trace) {
  const int n = h.num_vertices();
  if (n == 0) return {};
  if (auto len = odd_cycle_length(h); len && *len >= 5) throw OddCycleSignal{*len};
  if (max_degree(h) <= 4) {
    auto ex = exact_two_clique_coloring(h);
    if (!ex)
      throw InternalInconsistencyError(
          "no 2-clique-coloring exists for a max-degree-4 component; the input "
          "likely violates the claw-free / K5-minor-free precondition");
    trace.push_back({ColorRule::BaseSolver, to_global[0]});
    return ex->colors;
  }
  auto cs = maximal_cliques(h);
  std::size_t omega = 0;
  for (const auto& c : cs.cliques) omega = std::max(omega, c.size());
  if (max_degree(h) == 5 && omega <= 3) {
    if (auto hub = w5_hub(h)) {
      std::vector<int> colors(n, 2);
      colors[*hub] = 1;
      trace.push_back({ColorRule::TryColor, to_global[*hub]});
      return colors;
    }
    int v = 0;
    while (h.degree(v) != 5) ++v;
    return delete_recurse_extend(h, v, to_global, trace, true);
  }
  if (omega >= 5)
    throw ClassViolationError("a 5-clique exists, so the graph has a K5 minor");
  if (omega == 4) {
    // Smallest-id vertex lying in a 4-clique, preferring degree <= 5.
    std::vector<bool> in4(n, false);
    for (const auto& c : cs.cliques)
      if (c.size() == 4)
        for (int u : c) in4[u] = true;
    int v = -1;
    for (int u = 0; u < n && v < 0; ++u)
      if (in4[u] && h.degree(u) <= 5) v = u;
    for (int u = 0; u < n && v < 0; ++u)
      if (in4[u]) v = u;
    if (v < 0) throw InternalInconsistencyError("clique number 4 but no 4-clique vertex");
    return delete_recurse_extend(h, v, to_global, trace, false);
  }
  // Outside the case split (degree >= 6 with clique number <= 3): the class
  // guarantees this cannot happen; fall back to the exact solver.
  auto ex = exact_or_inconsistent(h, "case-split fallback");
  if (!ex)
    throw InternalInconsistencyError(
        "no 2-clique-coloring exists outside the case split; the input likely "
        "violates the claw-free / K5-minor-free precondition");
  trace.push_back({ColorRule::BaseSolver, to_global[0]});
  return ex->colors;
}

}  // namespace

ColoringCertificate two_clique_color_claw_free(const Graph& g, bool verify_class) {
  if (verify_class) {
    if (auto claw = find_claw(g)) {
      std::ostringstream msg;
      msg << "claw found: center " << claw->center << ", leaves " << claw->leaves[0]
          << ' ' << claw->leaves[1] << ' ' << claw->leaves[2];
      throw ClassViolationError(msg.str());
    }
    // Planar graphs have no K5 minor; checking planarity first keeps the
    // exponential minor search away from large in-class instances.
    if (g.num_vertices() >= 5 && !is_planar(g) && has_minor(g, MinorTarget::K5))
      throw ClassViolationError("the graph has a K5 minor");
  }
  const int n = g.num_vertices();
  ColoringCertificate cert;
  std::vector<int> colors(n, 0);
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    try {
      auto cc = solve_component(sub.graph, sub.to_parent, cert.trace);
      for (size_t i = 0; i < cc.size(); ++i) colors[sub.to_parent[i]] = cc[i];
    } catch (const OddCycleSignal& sig) {
      std::ostringstream msg;
      msg << "a connected component is an odd cycle of length " << sig.length
          << ": it has no 2-clique-coloring (its clique-chromatic number is 3); "
          << "color-oddcycle produces an optimal 3-coloring";
      throw ChromaticExceptionError(msg.str());
    }
  }
  cert.coloring = {colors, n == 1 ? 1 : 2};
  assert_valid(g, maximal_cliques(g), cert.coloring, &cert.validity,
               "claw-free 2-clique-coloring");
  return cert;
}

std::string write_certificate(const ColoringCertificate& c) {
  std::ostringstream out;
  out << write_coloring(c.coloring);
  for (size_t i = 0; i < c.trace.size(); ++i)
    out << "step " << i + 1 << ": " << rule_name(c.trace[i].rule) << " v="
        << c.trace[i].vertex << '\n';
  return out.str();
}

}  // namespace cqc
