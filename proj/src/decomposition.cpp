#include "cqc/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cqc {

namespace {

// True iff removing s disconnects g (s given in g's coordinates).
bool separates(const Graph& g, const VertexSet& s) {
  const int n = g.num_vertices();
  std::vector<bool> blocked(n, false);
  for (int v : s) blocked[v] = true;
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!blocked[v]) {
      start = v;
      break;
    }
  if (start < 0) return false;
  std::vector<int> stack{start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!blocked[u] && !seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count != n - static_cast<int>(s.size());
}

// Lexicographically first separating edge, then first separating triangle.
std::optional<VertexSet> find_separating_clique(const Graph& g) {
  for (auto [u, v] : g.edge_list())
    if (separates(g, {u, v})) return VertexSet{u, v};
  for (const auto& t : list_triangles(g))
    if (separates(g, {t[0], t[1], t[2]})) return VertexSet{t[0], t[1], t[2]};
  return std::nullopt;
}

struct Builder {
  WagnerDecomposition out;
  int leaf_guard;

  // Decomposes sub (whose vertex i is host vertex ids[i]); returns the piece
  // indices created for this subtree, or nullopt when sub is not decomposable.
  std::optional<std::vector<int>> rec(const Graph& sub,
                                      const std::vector<int>& ids) {
    const int n = sub.num_vertices();
    if (n <= leaf_guard) {
      if (n >= 3 && is_plane_triangulation(sub, leaf_guard)) {
        int idx = static_cast<int>(out.pieces.size());
        out.pieces.push_back({sub, PieceKind::Triangulation, ids});
        return std::vector<int>{idx};
      }
      if (is_wagner_graph(sub)) {
        int idx = static_cast<int>(out.pieces.size());
        out.pieces.push_back({sub, PieceKind::Wagner, ids});
        return std::vector<int>{idx};
      }
    }
    auto sep = find_separating_clique(sub);
    if (!sep) {
      if (n > leaf_guard)
        throw SizeGuardError("leaf candidate exceeds the decomposition size guard");
      return std::nullopt;
    }
    const VertexSet& s = *sep;
    std::vector<bool> blocked(n, false);
    for (int v : s) blocked[v] = true;
    VertexSet rest;
    for (int v = 0; v < n; ++v)
      if (!blocked[v]) rest.push_back(v);
    auto rest_sub = induced_subgraph(sub, rest);
    auto comps = connected_components(rest_sub.graph);
    VertexSet s_host;
    for (int v : s) s_host.push_back(ids[v]);
    std::sort(s_host.begin(), s_host.end());

    std::vector<int> all_indices;
    std::vector<int> parent_indices;
    for (size_t c = 0; c < comps.size(); ++c) {
      VertexSet part = s;
      for (int v : comps[c]) part.push_back(rest_sub.to_parent[v]);
      std::sort(part.begin(), part.end());
      auto part_sub = induced_subgraph(sub, part);
      std::vector<int> part_ids;
      for (int v : part_sub.to_parent) part_ids.push_back(ids[v]);
      auto pieces = rec(part_sub.graph, part_ids);
      if (!pieces) return std::nullopt;
      if (c == 0) {
        parent_indices = *pieces;
      } else {
        int host_parent = find_host(parent_indices, s_host);
        int host_child = find_host(*pieces, s_host);
        out.glue.push_back({host_parent, host_child, s_host});
      }
      all_indices.insert(all_indices.end(), pieces->begin(), pieces->end());
    }
    return all_indices;
  }

  // First piece among indices whose vertex set contains boundary.
  int find_host(const std::vector<int>& indices, const VertexSet& boundary) {
    for (int idx : indices) {
      const auto& hosted = out.pieces[idx].to_host;
      bool all = true;
      for (int v : boundary)
        if (std::find(hosted.begin(), hosted.end(), v) == hosted.end()) {
          all = false;
          break;
        }
      if (all) return idx;
    }
    throw InternalInconsistencyError("no piece contains a glue boundary");
  }
};

}  // namespace

std::optional<WagnerDecomposition> wagner_decompose(const Graph& g,
                                                    int leaf_guard) {
  if (g.num_vertices() < 4) throw PreconditionError("decomposition needs n >= 4");
  if (!is_connected(g)) throw PreconditionError("decomposition needs a connected graph");
  Builder b;
  b.leaf_guard = leaf_guard;
  b.out.n = g.num_vertices();
  std::vector<int> ids(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) ids[v] = v;
  if (!b.rec(g, ids)) return std::nullopt;
  return b.out;
}

Graph reconstruct(const WagnerDecomposition& d) {
  std::set<std::pair<int, int>> edges;
  for (const auto& p : d.pieces) {
    if (static_cast<int>(p.to_host.size()) != p.piece.num_vertices())
      throw PreconditionError("inconsistent vertex map");
    for (auto [u, v] : p.piece.edge_list()) {
      int hu = p.to_host[u], hv = p.to_host[v];
      if (hu < 0 || hu >= d.n || hv < 0 || hv >= d.n)
        throw PreconditionError("vertex map out of range");
      edges.insert({std::min(hu, hv), std::max(hu, hv)});
    }
  }
  return Graph(d.n, {edges.begin(), edges.end()});
}

TwoTreeOrder two_tree_order(const Graph& g) {
  auto order = recognize_2tree(g);
  if (!order) throw PreconditionError("graph is not a 2-tree");
  return *order;
}

std::string write_decomposition(const WagnerDecomposition& d) {
  std::ostringstream out;
  for (size_t i = 0; i < d.pieces.size(); ++i) {
    const auto& p = d.pieces[i];
    out << "piece " << i << " kind="
        << (p.kind == PieceKind::Triangulation ? "triangulation" : "wagner")
        << " vertices=";
    VertexSet hosts = p.to_host;
    std::sort(hosts.begin(), hosts.end());
    for (size_t j = 0; j < hosts.size(); ++j) {
      if (j) out << ',';
      out << hosts[j];
    }
    out << '\n';
  }
  for (const auto& e : d.glue) {
    out << "glue " << e.parent << ' ' << e.child << " boundary=";
    for (size_t j = 0; j < e.boundary.size(); ++j) {
      if (j) out << ',';
      out << e.boundary[j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cqc
