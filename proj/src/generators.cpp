#include "cqc/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace cqc {

Graph gen_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Graph(n, edges);
}

Graph gen_complete(int n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph gen_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw PreconditionError("bipartite sides must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, edges);
}

Graph gen_wheel(int n) {
  if (n < 3) throw PreconditionError("wheel needs n >= 3 rim vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, i});
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph(n + 1, edges);
}

Graph gen_cycle_power(int n, int k) {
  if (k < 1 || 2 * k >= n) throw PreconditionError("cycle power needs k >= 1 and 2k < n");
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= k; ++d) {
      int j = (i + d) % n;
      edges.insert({std::min(i, j), std::max(i, j)});
    }
  return Graph(n, {edges.begin(), edges.end()});
}

Graph gen_prism(int k) {
  if (k < 3) throw PreconditionError("prism needs k >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    edges.push_back({std::min(i, j), std::max(i, j)});
    edges.push_back({std::min(i, j) + k, std::max(i, j) + k});
    edges.push_back({i, i + k});
  }
  return Graph(2 * k, edges);
}

Graph gen_wagner() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 8; ++i) {
    int j = (i + 1) % 8;
    edges.push_back({std::min(i, j), std::max(i, j)});
  }
  for (int i = 0; i < 4; ++i) edges.push_back({i, i + 4});
  return Graph(8, edges);
}

Graph gen_two_tree(int n, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("2-tree needs n >= 3");
  Lcg64 rng(seed);
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < n; ++v) {
    auto [a, b] = edges[rng.below(edges.size())];
    edges.push_back({a, v});
    edges.push_back({b, v});
  }
  return Graph(n, edges);
}

Graph gen_apollonian(int n, std::uint64_t seed) {
  if (n < 4) throw PreconditionError("Apollonian network needs n >= 4");
  Lcg64 rng(seed);
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int v = 4; v < n; ++v) {
    auto idx = rng.below(faces.size());
    auto [a, b, c] = faces[idx];
    edges.push_back({a, v});
    edges.push_back({b, v});
    edges.push_back({c, v});
    faces[idx] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return Graph(n, edges);
}

Graph line_graph(const Graph& g) {
  auto el = g.edge_list();
  const int m = static_cast<int>(el.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = el[i];
      auto [c, d] = el[j];
      if (a == c || a == d || b == c || b == d) edges.push_back({i, j});
    }
  return Graph(m, edges);
}

Graph gen_l_k6() { return line_graph(gen_complete(6)); }

Graph gen_k4free_chi3() {
  return Graph(9, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {2, 5}, {5, 7},
                   {4, 7}, {4, 8}, {6, 8}, {3, 6}});
}

Graph gen_claw_free_planar(ClawFreePlanarKind kind, int n) {
  if (kind == ClawFreePlanarKind::CyclePowerTwo) {
    // Odd squared cycles contract to K5 ({0}, odds, evens, {n-2}, {n-1}),
    // so only the even ones (antiprisms) are planar.
    if (n < 7 || n % 2 != 0)
      throw PreconditionError("planar squared cycle needs even n >= 8");
    return gen_cycle_power(n, 2);
  }
  if (n < 6 || n % 2 != 0) throw PreconditionError("prism line graph needs even n >= 6");
  return line_graph(gen_prism(n / 2));
}

WagnerSumInstance gen_wagner_sum(const std::vector<BlueprintPiece>& blueprint,
                                 std::uint64_t seed) {
  if (blueprint.empty()) throw PreconditionError("blueprint must list at least one piece");
  for (size_t i = 0; i < blueprint.size(); ++i) {
    const auto& p = blueprint[i];
    if (p.kind == PieceKind::Wagner && p.size != 8)
      throw PreconditionError("wagner pieces have exactly 8 vertices");
    if (p.kind == PieceKind::Triangulation && p.size < 4)
      throw PreconditionError("triangulation pieces need size >= 4");
    if (i > 0 && p.glue_arity != 2 && p.glue_arity != 3)
      throw PreconditionError("glue arity must be 2 or 3");
    if (i > 0 && p.kind == PieceKind::Wagner && p.glue_arity != 2)
      throw PreconditionError("wagner pieces glue along edges only (no triangles in V8)");
  }
  Lcg64 rng(seed);
  WagnerSumInstance out;
  std::set<std::pair<int, int>> edges;
  int n = 0;
  for (size_t i = 0; i < blueprint.size(); ++i) {
    const auto& bp = blueprint[i];
    Graph piece = bp.kind == PieceKind::Wagner ? gen_wagner()
                                               : gen_apollonian(bp.size, rng.next());
    const int pn = piece.num_vertices();
    std::vector<int> to_host(pn, -1);
    if (i == 0) {
      for (int v = 0; v < pn; ++v) to_host[v] = v;
      n = pn;
    } else {
      Graph partial(n, {edges.begin(), edges.end()});
      VertexSet host_boundary;
      if (bp.glue_arity == 2) {
        auto el = partial.edge_list();
        auto [u, v] = el[rng.below(el.size())];
        host_boundary = {u, v};
      } else {
        auto tris = list_triangles(partial);
        if (tris.empty())
          throw PreconditionError("infeasible blueprint: no triangle to glue a K3 boundary on");
        const auto& t = tris[rng.below(tris.size())];
        host_boundary = {t[0], t[1], t[2]};
      }
      // The piece-side boundary is its lexicographically first edge or
      // triangle: {0,1} or {0,1,2}, present in every generated piece.
      int fresh = n;
      for (int v = 0; v < pn; ++v) {
        if (v < bp.glue_arity)
          to_host[v] = host_boundary[v];
        else
          to_host[v] = fresh++;
      }
      n = fresh;
      int parent = -1;
      for (size_t j = 0; j < out.intended.pieces.size() && parent < 0; ++j) {
        const auto& hosted = out.intended.pieces[j].to_host;
        bool all = true;
        for (int v : host_boundary)
          if (std::find(hosted.begin(), hosted.end(), v) == hosted.end()) {
            all = false;
            break;
          }
        if (all) parent = static_cast<int>(j);
      }
      if (parent < 0)
        throw InternalInconsistencyError("glue boundary not inside any earlier piece");
      out.intended.glue.push_back({parent, static_cast<int>(i), host_boundary});
    }
    for (auto [u, v] : piece.edge_list())
      edges.insert({std::min(to_host[u], to_host[v]), std::max(to_host[u], to_host[v])});
    out.intended.pieces.push_back({piece, bp.kind, to_host});
  }
  out.intended.n = n;
  out.graph = Graph(n, {edges.begin(), edges.end()});
  return out;
}

std::vector<BlueprintPiece> parse_blueprint(const std::string& text) {
  std::vector<BlueprintPiece> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head != "piece") throw ParseError(lineno, "expected a 'piece' line");
    std::string kind_token;
    int size = 0;
    if (!(ls >> kind_token >> size)) throw ParseError(lineno, "expected 'piece <kind> <size>'");
    BlueprintPiece p;
    if (kind_token == "triangulation")
      p.kind = PieceKind::Triangulation;
    else if (kind_token == "wagner")
      p.kind = PieceKind::Wagner;
    else
      throw ParseError(lineno, "piece kind must be 'triangulation' or 'wagner'");
    p.size = size;
    p.glue_arity = 2;
    std::string glue;
    if (ls >> glue) {
      if (glue == "glue2")
        p.glue_arity = 2;
      else if (glue == "glue3")
        p.glue_arity = 3;
      else
        throw ParseError(lineno, "glue token must be 'glue2' or 'glue3'");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "unexpected trailing token");
    }
    out.push_back(p);
  }
  return out;
}

std::optional<Family> parse_family(const std::string& token) {
  if (token == "cycle") return Family::Cycle;
  if (token == "complete") return Family::Complete;
  if (token == "complete_bipartite") return Family::CompleteBipartite;
  if (token == "wheel") return Family::Wheel;
  if (token == "cycle_power") return Family::CyclePower;
  if (token == "wagner") return Family::Wagner;
  if (token == "two_tree") return Family::TwoTree;
  if (token == "apollonian") return Family::Apollonian;
  if (token == "wagner_sum") return Family::WagnerSum;
  if (token == "line_graph") return Family::LineGraph;
  if (token == "prism") return Family::Prism;
  if (token == "k4free_chi3") return Family::K4FreeChi3;
  if (token == "l_k6") return Family::LK6;
  return std::nullopt;
}

const std::vector<std::string>& family_tokens() {
  static const std::vector<std::string> tokens{
      "cycle",       "complete",   "complete_bipartite", "wheel",
      "cycle_power", "wagner",     "two_tree",           "apollonian",
      "wagner_sum",  "line_graph", "prism",              "k4free_chi3",
      "l_k6"};
  return tokens;
}

Graph gen(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Cycle: return gen_cycle(spec.n);
    case Family::Complete: return gen_complete(spec.n);
    case Family::CompleteBipartite: return gen_complete_bipartite(spec.n, spec.k);
    case Family::Wheel: return gen_wheel(spec.n);
    case Family::CyclePower: return gen_cycle_power(spec.n, spec.k);
    case Family::Wagner: return gen_wagner();
    case Family::TwoTree: return gen_two_tree(spec.n, spec.seed);
    case Family::Apollonian: return gen_apollonian(spec.n, spec.seed);
    case Family::WagnerSum: return gen_wagner_sum(spec.blueprint, spec.seed).graph;
    case Family::LineGraph:
      if (!spec.base) throw PreconditionError("line_graph needs an input graph");
      return line_graph(*spec.base);
    case Family::Prism: return gen_prism(spec.n);
    case Family::K4FreeChi3: return gen_k4free_chi3();
    case Family::LK6: return gen_l_k6();
  }
  throw PreconditionError("unknown family");
}

}  // namespace cqc
