#include "cqc/cliques.hpp"

#include <algorithm>
#include <sstream>

namespace cqc {

namespace {

VertexSet intersect(const VertexSet& a, const std::vector<int>& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    VertexSet clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // Pivot: vertex of P union X maximizing |P cap N(u)|, smallest id on ties.
  int pivot = -1;
  int best = -1;
  for (const VertexSet* side : {&p, &x})
    for (int u : *side) {
      int cnt = static_cast<int>(intersect(p, g.neighbors(u)).size());
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  VertexSet ext;
  std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(),
                      g.neighbors(pivot).end(), std::back_inserter(ext));
  for (int v : ext) {
    r.push_back(v);
    bron_kerbosch(g, r, intersect(p, g.neighbors(v)),
                  intersect(x, g.neighbors(v)), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

CliqueSet maximal_cliques(const Graph& g) {
  CliqueSet cs;
  cs.fingerprint = graph_fingerprint(g);
  VertexSet r, p, x;
  for (int v = 0; v < g.num_vertices(); ++v) p.push_back(v);
  bron_kerbosch(g, r, std::move(p), std::move(x), cs.cliques);
  std::sort(cs.cliques.begin(), cs.cliques.end());
  return cs;
}

int clique_number(const Graph& g) {
  if (g.num_vertices() == 0) throw PreconditionError("empty graph");
  size_t best = 0;
  for (const auto& c : maximal_cliques(g).cliques) best = std::max(best, c.size());
  return static_cast<int>(best);
}

ValidityReport check_clique_coloring(const Graph& g, const CliqueSet& h,
                                     const VertexColoring& c) {
  if (h.fingerprint != graph_fingerprint(g))
    throw PreconditionError("clique set does not match graph");
  if (static_cast<int>(c.colors.size()) != g.num_vertices())
    throw PreconditionError("coloring length mismatch");
  for (int col : c.colors)
    if (col < 1 || col > c.k) throw PreconditionError("color out of range");
  for (const auto& q : h.cliques) {
    if (q.size() < 2) continue;
    int col = c.colors[q[0]];
    bool mono = true;
    for (int v : q)
      if (c.colors[v] != col) {
        mono = false;
        break;
      }
    if (mono) return {false, q};
  }
  return {true, std::nullopt};
}

std::optional<int> oracle_clique_chromatic(const Graph& g, int max_k) {
  const int n = g.num_vertices();
  if (n == 0) throw PreconditionError("empty graph");
  if (n > 25) throw SizeGuardError("oracle limited to 25 vertices");
  if (max_k < 1) throw PreconditionError("max_k must be positive");
  auto cs = maximal_cliques(g);
  // Cliques indexed by their largest vertex: checked when that vertex is set.
  std::vector<std::vector<const VertexSet*>> by_last(n);
  for (const auto& q : cs.cliques)
    if (q.size() >= 2) by_last[q.back()].push_back(&q);

  std::vector<int> color(n, 0);
  // Colors tried up to one beyond the count already used (symmetry break).
  auto feasible = [&](int k) {
    auto rec = [&](auto&& self, int v, int used) -> bool {
      if (v == n) return true;
      int limit = std::min(k, used + 1);
      for (int c = 1; c <= limit; ++c) {
        color[v] = c;
        bool ok = true;
        for (const VertexSet* q : by_last[v]) {
          bool mono = true;
          for (int u : *q)
            if (color[u] != c) {
              mono = false;
              break;
            }
          if (mono) {
            ok = false;
            break;
          }
        }
        if (ok && self(self, v + 1, std::max(used, c))) return true;
      }
      color[v] = 0;
      return false;
    };
    return rec(rec, 0, 0);
  };
  for (int k = 1; k <= max_k; ++k)
    if (feasible(k)) return k;
  return std::nullopt;
}

std::optional<VertexColoring> exact_two_clique_coloring(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return VertexColoring{{}, 2};
  if (max_degree(g) > 4 && n > 64)
    throw SizeGuardError("exact 2-coloring limited to 64 vertices when max degree exceeds 4");
  auto cs = maximal_cliques(g);
  struct Constraint {
    VertexSet verts;
    int cnt[3] = {0, 0, 0};  // cnt[c] = members currently colored c
  };
  std::vector<Constraint> cons;
  for (auto& q : cs.cliques)
    if (q.size() >= 2) cons.push_back({q, {0, 0, 0}});
  std::vector<std::vector<int>> incident(n);
  for (size_t i = 0; i < cons.size(); ++i)
    for (int v : cons[i].verts) incident[v].push_back(static_cast<int>(i));

  std::vector<int> color(n, 0);
  std::vector<int> trail;

  // Assign v := c, propagate forced assignments; false on conflict.
  auto assign = [&](int v0, int c0) -> bool {
    std::vector<std::pair<int, int>> queue{{v0, c0}};
    while (!queue.empty()) {
      auto [v, c] = queue.back();
      queue.pop_back();
      if (color[v] == c) continue;
      if (color[v] != 0) return false;
      color[v] = c;
      trail.push_back(v);
      // Increment every incident counter even after a conflict is found so
      // that undo_to's decrements stay symmetric.
      bool conflict = false;
      for (int ci : incident[v]) {
        auto& con = cons[ci];
        con.cnt[c]++;
        if (conflict) continue;
        int size = static_cast<int>(con.verts.size());
        if (con.cnt[c] == size) {  // monochromatic
          conflict = true;
          continue;
        }
        if (con.cnt[c] == size - 1 && con.cnt[3 - c] == 0) {
          // All assigned members share c and one member is free: force it.
          for (int u : con.verts)
            if (color[u] == 0) {
              queue.emplace_back(u, 3 - c);
              break;
            }
        }
      }
      if (conflict) return false;
    }
    return true;
  };
  auto undo_to = [&](size_t mark) {
    while (trail.size() > mark) {
      int v = trail.back();
      trail.pop_back();
      int c = color[v];
      for (int ci : incident[v]) cons[ci].cnt[c]--;
      color[v] = 0;
    }
  };
  auto solve = [&](auto&& self, int from) -> bool {
    int v = from;
    while (v < n && color[v] != 0) ++v;
    if (v == n) return true;
    for (int c : {1, 2}) {
      size_t mark = trail.size();
      if (assign(v, c) && self(self, v + 1)) return true;
      undo_to(mark);
    }
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  return VertexColoring{color, 2};
}

VertexSet transversal_from_coloring(const Graph& g, const CliqueSet& h,
                                    const VertexColoring& c) {
  if (c.k != 2) throw PreconditionError("expected a 2-coloring");
  auto report = check_clique_coloring(g, h, c);
  if (!report.valid) throw PreconditionError("coloring is not a valid 2-clique-coloring");
  VertexSet cls1, cls2;
  for (int v = 0; v < g.num_vertices(); ++v)
    (c.colors[v] == 1 ? cls1 : cls2).push_back(v);
  VertexSet& pick = (cls2.size() < cls1.size()) ? cls2 : cls1;
  for (const auto& q : h.cliques) {
    if (q.size() < 2) continue;
    bool hit = false;
    for (int v : q)
      if (std::binary_search(pick.begin(), pick.end(), v)) {
        hit = true;
        break;
      }
    if (!hit) throw InternalInconsistencyError("transversal misses a clique");
  }
  if (pick.size() > static_cast<size_t>(g.num_vertices() / 2))
    throw InternalInconsistencyError("transversal larger than n/2");
  return pick;
}

int oracle_clique_transversal(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 25) throw SizeGuardError("oracle limited to 25 vertices");
  auto cs = maximal_cliques(g);
  std::vector<std::uint32_t> masks;
  for (const auto& q : cs.cliques) {
    if (q.size() < 2) continue;
    std::uint32_t m = 0;
    for (int v : q) m |= 1u << v;
    masks.push_back(m);
  }
  if (masks.empty()) return 0;
  // Lower bound: greedy packing of pairwise disjoint cliques.
  int lower = 0;
  std::uint32_t used = 0;
  for (std::uint32_t m : masks)
    if ((m & used) == 0) {
      used |= m;
      ++lower;
    }
  auto dfs = [&](auto&& self, std::uint32_t chosen, int budget) -> bool {
    const std::uint32_t* unhit = nullptr;
    for (const auto& m : masks)
      if ((m & chosen) == 0) {
        unhit = &m;
        break;
      }
    if (!unhit) return true;
    if (budget == 0) return false;
    for (int v = 0; v < n; ++v)
      if (*unhit & (1u << v))
        if (self(self, chosen | (1u << v), budget - 1)) return true;
    return false;
  };
  for (int s = lower; s <= n; ++s)
    if (dfs(dfs, 0, s)) return s;
  throw InternalInconsistencyError("transversal search failed");
}

VertexColoring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  VertexColoring c;
  long long x;
  while (in >> x) {
    if (x < 1) throw ParseError(1, "colors must be positive");
    c.colors.push_back(static_cast<int>(x));
    c.k = std::max<int>(c.k, static_cast<int>(x));
  }
  std::string rest;
  in.clear();
  if (in >> rest) throw ParseError(1, "malformed coloring");
  if (c.k == 0) c.k = 1;
  return c;
}

std::string write_coloring(const VertexColoring& c) {
  std::ostringstream out;
  for (size_t i = 0; i < c.colors.size(); ++i) {
    if (i) out << ' ';
    out << c.colors[i];
  }
  out << '\n';
  return out.str();
}

std::string write_validity(const ValidityReport& r) {
  if (r.valid) return "valid\n";
  std::ostringstream out;
  out << "invalid";
  for (int v : *r.witness) out << ' ' << v;
  out << '\n';
  return out.str();
}

}  // namespace cqc
