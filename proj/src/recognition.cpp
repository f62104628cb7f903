#include "cqc/recognition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "cqc/cliques.hpp"

namespace cqc {

std::optional<ClawWitness> find_claw(const Graph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& nb = g.neighbors(v);
    const int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (int k = j + 1; k < d; ++k) {
          if (g.has_edge(nb[i], nb[k]) || g.has_edge(nb[j], nb[k])) continue;
          return ClawWitness{v, {nb[i], nb[j], nb[k]}};
        }
      }
  }
  return std::nullopt;
}

namespace {

// ---- reduction: delete degree-<=1 vertices, smooth degree-2 vertices ----

// Smoothing replaces a degree-2 vertex by an edge between its neighbors;
// "interior" remembers, per surviving edge, the smoothed path it stands for
// (oriented from the smaller to the larger endpoint), so witnesses found in
// the reduced graph can be expanded back into the original one.
struct Reduction {
  std::vector<int> alive_ids;                        // reduced id -> original id
  std::vector<std::uint64_t> adj;                    // reduced adjacency masks
  std::map<std::pair<int, int>, std::vector<int>> interior;  // original-id keys
};

Reduction reduce_for_minors(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<bool> alive(n, true);
  std::map<std::pair<int, int>, std::vector<int>> interior;

  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  auto path_between = [&](int from, int to) {
    auto it = interior.find(key(from, to));
    std::vector<int> p = (it == interior.end()) ? std::vector<int>{} : it->second;
    if (from > to) std::reverse(p.begin(), p.end());
    return p;  // oriented from -> to
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (adj[v].size() <= 1) {
        for (int u : adj[v]) {
          adj[u].erase(v);
          interior.erase(key(u, v));
        }
        adj[v].clear();
        alive[v] = false;
        changed = true;
      } else if (adj[v].size() == 2) {
        int a = *adj[v].begin();
        int b = *std::next(adj[v].begin());
        std::vector<int> pa = path_between(a, v);
        std::vector<int> pb = path_between(v, b);
        adj[a].erase(v);
        adj[b].erase(v);
        interior.erase(key(a, v));
        interior.erase(key(v, b));
        adj[v].clear();
        alive[v] = false;
        if (!adj[a].count(b)) {
          adj[a].insert(b);
          adj[b].insert(a);
          std::vector<int> path = std::move(pa);
          path.push_back(v);
          path.insert(path.end(), pb.begin(), pb.end());
          if (a > b) std::reverse(path.begin(), path.end());
          interior[key(a, b)] = std::move(path);
        }
        changed = true;
      }
    }
  }

  Reduction r;
  std::vector<int> to_new(n, -1);
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      to_new[v] = static_cast<int>(r.alive_ids.size());
      r.alive_ids.push_back(v);
    }
  r.adj.assign(r.alive_ids.size(), 0);
  for (int v = 0; v < n; ++v)
    if (alive[v])
      for (int u : adj[v]) r.adj[to_new[v]] |= 1ULL << to_new[u];
  r.interior = std::move(interior);
  return r;
}

// ---- branch-and-bound search for a minor model in a bitmask graph ----

struct TargetSpec {
  int h;
  std::vector<std::pair<int, int>> edges;
};

TargetSpec target_spec(MinorTarget t) {
  switch (t) {
    case MinorTarget::K4: {
      TargetSpec s{4, {}};
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) s.edges.emplace_back(i, j);
      return s;
    }
    case MinorTarget::K5: {
      TargetSpec s{5, {}};
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) s.edges.emplace_back(i, j);
      return s;
    }
    case MinorTarget::K33: {
      TargetSpec s{6, {}};
      for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) s.edges.emplace_back(i, j);
      return s;
    }
  }
  throw PreconditionError("unknown minor target");
}

struct MinorSearch {
  const std::vector<std::uint64_t>& adj;
  const TargetSpec& spec;
  int n;
  std::vector<std::uint64_t> sets, set_adj;
  std::uint64_t free_mask = 0;

  MinorSearch(const std::vector<std::uint64_t>& adj_, const TargetSpec& spec_)
      : adj(adj_), spec(spec_), n(static_cast<int>(adj_.size())),
        sets(spec_.h, 0), set_adj(spec_.h, 0) {}

  bool realized(int i, int j) const { return (sets[j] & set_adj[i]) != 0; }

  void add(int i, int v) {
    sets[i] |= 1ULL << v;
    set_adj[i] |= adj[v];
    free_mask &= ~(1ULL << v);
  }

  bool search() {
    int empties = 0;
    for (int i = 0; i < spec.h; ++i)
      if (sets[i] == 0) ++empties;
    if (std::popcount(free_mask) < empties) return false;

    // Label connected components of the free subgraph and record, for each
    // component, the branch sets it touches.
    std::vector<int> comp(n, -1);
    std::vector<std::uint32_t> touch;
    std::vector<std::uint64_t> comp_mask;
    {
      std::uint64_t rem = free_mask;
      while (rem) {
        int s = std::countr_zero(rem);
        std::uint64_t cm = 1ULL << s;
        std::uint64_t frontier = cm;
        while (frontier) {
          std::uint64_t next = 0;
          std::uint64_t f = frontier;
          while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v] & free_mask & ~cm;
          }
          cm |= next;
          frontier = next;
        }
        int id = static_cast<int>(comp_mask.size());
        std::uint64_t c = cm;
        while (c) {
          comp[std::countr_zero(c)] = id;
          c &= c - 1;
        }
        std::uint32_t t = 0;
        for (int i = 0; i < spec.h; ++i)
          if (sets[i] != 0 && (cm & set_adj[i])) t |= 1u << i;
        touch.push_back(t);
        comp_mask.push_back(cm);
        rem &= ~cm;
      }
    }

    // Pick the unrealized target edge with the fewest growth options.
    int best_i = -1, best_j = -1, best_score = 1 << 30;
    bool best_one_empty = false;
    std::uint64_t best_grow_i = 0, best_grow_j = 0;
    bool any = false;
    for (auto [i, j] : spec.edges) {
      bool iempty = sets[i] == 0, jempty = sets[j] == 0;
      if (iempty && jempty) {
        any = true;
        continue;  // deferred; reachable only before both endpoints root
      }
      if (iempty || jempty) {
        int a = iempty ? j : i;  // the nonempty side
        std::uint64_t roots = free_mask & set_adj[a];
        if (roots == 0) return false;
        any = true;
        int score = 2 * std::popcount(roots);
        if (score < best_score) {
          best_score = score;
          best_i = iempty ? i : j;
          best_j = a;
          best_one_empty = true;
          best_grow_i = roots;
          best_grow_j = roots;
        }
        continue;
      }
      if (realized(i, j)) continue;
      any = true;
      // Feasible only if some free component touches both sides.
      std::uint64_t gi = 0, gj = 0;
      for (size_t c = 0; c < comp_mask.size(); ++c) {
        if ((touch[c] & (1u << i)) && (touch[c] & (1u << j))) {
          gi |= comp_mask[c] & set_adj[i];
          gj |= comp_mask[c] & set_adj[j];
        }
      }
      if (gi == 0 && gj == 0) return false;
      int score = std::popcount(gi) + std::popcount(gj);
      if (score < best_score) {
        best_score = score;
        best_i = i;
        best_j = j;
        best_one_empty = false;
        best_grow_i = gi;
        best_grow_j = gj;
      }
    }
    if (!any) return true;  // every target edge realized
    if (best_i < 0) {
      // Only edges with two empty endpoints remain; root one endpoint over
      // every free vertex (no symmetry assumption).
      for (auto [i, j] : spec.edges) {
        if (sets[i] != 0 || sets[j] != 0) continue;
        std::uint64_t cands = free_mask;
        while (cands) {
          int v = std::countr_zero(cands);
          cands &= cands - 1;
          auto save = snapshot();
          add(i, v);
          if (search()) return true;
          restore(save);
        }
        return false;
      }
      return false;
    }
    if (best_one_empty) {
      // Either root the empty side at a free neighbor of the nonempty side,
      // or grow the nonempty side by one of its free neighbors.
      std::uint64_t roots = best_grow_i;
      while (roots) {
        int v = std::countr_zero(roots);
        roots &= roots - 1;
        auto save = snapshot();
        add(best_i, v);
        if (search()) return true;
        restore(save);
      }
      std::uint64_t grows = best_grow_j;
      while (grows) {
        int v = std::countr_zero(grows);
        grows &= grows - 1;
        auto save = snapshot();
        add(best_j, v);
        if (search()) return true;
        restore(save);
      }
      return false;
    }
    std::uint64_t gi = best_grow_i;
    while (gi) {
      int v = std::countr_zero(gi);
      gi &= gi - 1;
      auto save = snapshot();
      add(best_i, v);
      if (search()) return true;
      restore(save);
    }
    std::uint64_t gj = best_grow_j;
    while (gj) {
      int v = std::countr_zero(gj);
      gj &= gj - 1;
      auto save = snapshot();
      add(best_j, v);
      if (search()) return true;
      restore(save);
    }
    return false;
  }

  struct Snapshot {
    std::vector<std::uint64_t> sets, set_adj;
    std::uint64_t free_mask;
  };
  Snapshot snapshot() const { return {sets, set_adj, free_mask}; }
  void restore(const Snapshot& s) {
    sets = s.sets;
    set_adj = s.set_adj;
    free_mask = s.free_mask;
  }
};

// Expand a witness found in the reduced graph back to the original graph:
// reinstate smoothed paths needed for in-set connectivity or edge contacts.
MinorWitness lift_witness(const Graph& g, const Reduction& red,
                          const TargetSpec& spec,
                          const std::vector<std::uint64_t>& sets) {
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::vector<std::vector<int>> orig_sets(spec.h);
  std::vector<std::uint64_t> red_sets = sets;
  for (int i = 0; i < spec.h; ++i) {
    std::uint64_t s = sets[i];
    std::vector<int> members;
    while (s) {
      int v = std::countr_zero(s);
      s &= s - 1;
      members.push_back(red.alive_ids[v]);
    }
    orig_sets[i] = members;
    // Spanning-tree walk in the reduced graph: reinstate smoothed interiors
    // of the tree edges so the set is connected in the original graph.
    std::uint64_t inside = sets[i];
    std::uint64_t seen = inside & (-inside);  // lowest member
    while (seen != inside) {
      bool grew = false;
      std::uint64_t rest = inside & ~seen;
      std::uint64_t r = rest;
      while (r) {
        int v = std::countr_zero(r);
        r &= r - 1;
        std::uint64_t link = red.adj[v] & seen;
        if (link) {
          int u = std::countr_zero(link);
          int ov = red.alive_ids[v], ou = red.alive_ids[u];
          if (!g.has_edge(ov, ou)) {
            auto it = red.interior.find(key(ov, ou));
            if (it == red.interior.end())
              throw InternalInconsistencyError("missing smoothed path");
            for (int w : it->second) orig_sets[i].push_back(w);
          }
          seen |= 1ULL << v;
          grew = true;
        }
      }
      if (!grew) throw InternalInconsistencyError("disconnected branch set");
    }
  }
  // Reinstate interiors for target edges realized through smoothed paths.
  for (auto [i, j] : spec.edges) {
    bool direct = false;
    for (int u : orig_sets[i]) {
      for (int v : orig_sets[j])
        if (g.has_edge(u, v)) {
          direct = true;
          break;
        }
      if (direct) break;
    }
    if (direct) continue;
    bool fixed = false;
    std::uint64_t si = red_sets[i];
    while (si && !fixed) {
      int v = std::countr_zero(si);
      si &= si - 1;
      std::uint64_t link = red.adj[v] & red_sets[j];
      while (link && !fixed) {
        int u = std::countr_zero(link);
        link &= link - 1;
        int ov = red.alive_ids[v], ou = red.alive_ids[u];
        auto it = red.interior.find(key(ov, ou));
        if (it != red.interior.end()) {
          for (int w : it->second) orig_sets[i].push_back(w);
          fixed = true;
        }
      }
    }
    if (!fixed) throw InternalInconsistencyError("unrealized target edge in witness");
  }
  MinorWitness w;
  for (auto& s : orig_sets) {
    std::sort(s.begin(), s.end());
    w.branch_sets.push_back(std::move(s));
  }
  return w;
}

bool witness_ok(const Graph& g, const TargetSpec& spec, const MinorWitness& w) {
  std::vector<bool> used(g.num_vertices(), false);
  for (const auto& s : w.branch_sets) {
    if (s.empty()) return false;
    for (int v : s) {
      if (used[v]) return false;
      used[v] = true;
    }
    // connectivity within the set
    std::set<int> inset(s.begin(), s.end());
    std::vector<int> stack{s[0]};
    std::set<int> seen{s[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (inset.count(u) && !seen.count(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
    }
    if (seen.size() != s.size()) return false;
  }
  for (auto [i, j] : spec.edges) {
    bool ok = false;
    for (int u : w.branch_sets[i]) {
      for (int v : w.branch_sets[j])
        if (g.has_edge(u, v)) {
          ok = true;
          break;
        }
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::optional<MinorWitness> has_minor(const Graph& g, MinorTarget target,
                                      int size_guard) {
  if (size_guard > 60) throw PreconditionError("minor search hard cap is 60 vertices");
  if (g.num_vertices() > size_guard)
    throw SizeGuardError("minor search refuses more than " +
                         std::to_string(size_guard) + " vertices");
  auto spec = target_spec(target);
  Reduction red = reduce_for_minors(g);
  const int rn = static_cast<int>(red.alive_ids.size());
  if (rn < spec.h) return std::nullopt;
  // Root the first branch set at each vertex in turn; a model relabeled so
  // that its minimum vertex lies in set 0 uses only vertices >= that root
  // (all three targets are vertex-transitive).
  for (int v = 0; v < rn; ++v) {
    MinorSearch ms(red.adj, spec);
    std::uint64_t universe = (rn == 64) ? ~0ULL : ((1ULL << rn) - 1);
    universe &= ~((1ULL << v) - 1);  // drop vertices below the root
    ms.free_mask = universe & ~(1ULL << v);
    ms.add(0, v);
    ms.free_mask &= ~(1ULL << v);
    if (ms.search()) {
      auto w = lift_witness(g, red, spec, ms.sets);
      if (!witness_ok(g, spec, w))
        throw InternalInconsistencyError("invalid minor witness");
      return w;
    }
  }
  return std::nullopt;
}

bool is_k4_minor_free_fast(const Graph& g) {
  return reduce_for_minors(g).alive_ids.empty();
}

std::optional<TwoTreeOrder> recognize_2tree(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 3) throw PreconditionError("2-tree recognition needs n >= 3");
  if (!is_connected(g)) throw PreconditionError("2-tree recognition needs a connected graph");
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<bool> alive(n, true);
  int remaining = n;
  std::vector<int> removed;
  std::vector<std::pair<int, int>> attach;
  while (remaining > 3) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!alive[v] || adj[v].size() != 2) continue;
      int a = *adj[v].begin();
      int b = *std::next(adj[v].begin());
      if (adj[a].count(b)) pick = v;
    }
    if (pick < 0) return std::nullopt;
    int a = *adj[pick].begin();
    int b = *std::next(adj[pick].begin());
    removed.push_back(pick);
    attach.emplace_back(a, b);
    adj[a].erase(pick);
    adj[b].erase(pick);
    adj[pick].clear();
    alive[pick] = false;
    --remaining;
  }
  VertexSet base;
  for (int v = 0; v < n; ++v)
    if (alive[v]) base.push_back(v);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!adj[base[i]].count(base[j])) return std::nullopt;
  TwoTreeOrder order;
  order.order = base;
  order.attach.assign(3, {-1, -1});
  for (size_t i = removed.size(); i-- > 0;) {
    order.order.push_back(removed[i]);
    order.attach.push_back(attach[i]);
  }
  return order;
}

namespace {

// Edge sets of the biconnected blocks (Hopcroft-Tarjan lowpoint DFS).
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(
    const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;
  for (int s = 0; s < n; ++s) {
    if (num[s] != -1) continue;
    std::vector<int> stack{s};
    num[s] = low[s] = timer++;
    while (!stack.empty()) {
      int v = stack.back();
      if (next[v] < g.neighbors(v).size()) {
        int w = g.neighbors(v)[next[v]++];
        if (w == parent[v]) continue;
        if (num[w] == -1) {
          estack.push_back({v, w});
          parent[w] = v;
          num[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (num[w] < num[v]) {  // back edge, recorded once
          estack.push_back({v, w});
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) continue;
        int u = parent[v];
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          std::vector<std::pair<int, int>> block;
          while (!estack.empty()) {
            auto e = estack.back();
            estack.pop_back();
            block.push_back(e);
            if (e.first == u && e.second == v) break;
          }
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

// Face-insertion planarity on one biconnected block: keep the faces of a
// partial embedding as boundary cycles, and per round route one path of some
// unembedded fragment through a face containing all its attachments. A
// fragment with no admissible face certifies nonplanarity; fragments with a
// unique admissible face are forced and go first.
bool block_planar(const Graph& h) {
  const int n = h.num_vertices();
  const int m = h.num_edges();
  if (n <= 4) return true;
  if (m > 3 * n - 6) return false;

  std::vector<char> embedded(n, 0);
  std::vector<std::set<int>> emb_adj(n);
  auto mark_edge = [&](int u, int v) {
    emb_adj[u].insert(v);
    emb_adj[v].insert(u);
  };

  // Initial cycle: walk without immediate backtracking until a repeat (the
  // block is 2-connected, so every vertex has degree >= 2).
  std::vector<int> pos(n, -1), walk;
  int prev = -1, cur = 0;
  while (pos[cur] == -1) {
    pos[cur] = static_cast<int>(walk.size());
    walk.push_back(cur);
    int nxt = -1;
    for (int w : h.neighbors(cur))
      if (w != prev) {
        nxt = w;
        break;
      }
    prev = cur;
    cur = nxt;
  }
  std::vector<int> cyc(walk.begin() + pos[cur], walk.end());
  std::vector<std::vector<int>> faces{cyc, cyc};  // inner and outer side
  int emb_edges = static_cast<int>(cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    embedded[cyc[i]] = 1;
    mark_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
  }

  while (emb_edges < m) {
    // Fragments: single unembedded chords between embedded vertices, and
    // components of unembedded vertices with their attachment sets.
    struct Fragment {
      std::vector<int> attach;
      int inner = -1;  // any interior vertex; -1 for a chord
    };
    std::vector<Fragment> frags;
    for (auto [u, v] : h.edge_list())
      if (embedded[u] && embedded[v] && !emb_adj[u].count(v))
        frags.push_back({{u, v}, -1});
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
      if (embedded[s] || comp[s] != -1) continue;
      comp[s] = s;
      std::set<int> attach;
      std::vector<int> queue{s};
      while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : h.neighbors(v)) {
          if (embedded[w])
            attach.insert(w);
          else if (comp[w] == -1) {
            comp[w] = s;
            queue.push_back(w);
          }
        }
      }
      frags.push_back({std::vector<int>(attach.begin(), attach.end()), s});
    }
    if (frags.empty())
      throw InternalInconsistencyError("planarity: missing edges, no fragment");

    // Admissible faces per fragment; a fragment without one is an obstruction.
    std::vector<char> in_face(n, 0);
    int pick = -1, pick_face = -1;
    for (std::size_t fi = 0; fi < frags.size() && pick == -1; ++fi) {
      int count = 0, first = -1;
      for (std::size_t k = 0; k < faces.size(); ++k) {
        for (int v : faces[k]) in_face[v] = 1;
        bool ok = true;
        for (int a : frags[fi].attach)
          if (!in_face[a]) {
            ok = false;
            break;
          }
        for (int v : faces[k]) in_face[v] = 0;
        if (ok) {
          ++count;
          if (first == -1) first = static_cast<int>(k);
        }
      }
      if (count == 0) return false;
      if (count == 1 || fi + 1 == frags.size()) {
        pick = static_cast<int>(fi);
        pick_face = first;
      }
    }

    // Route a path between two attachments through the fragment interior.
    const Fragment& fr = frags[pick];
    std::vector<int> path;
    if (fr.inner == -1) {
      path = fr.attach;
    } else {
      int a = fr.attach[0];
      std::vector<int> from(n, -1);
      std::vector<int> queue;
      for (int w : h.neighbors(a))
        if (!embedded[w] && comp[w] == comp[fr.inner] && from[w] == -1) {
          from[w] = a;
          queue.push_back(w);
        }
      int hit = -1, hit_end = -1;
      for (std::size_t qi = 0; qi < queue.size() && hit == -1; ++qi) {
        int v = queue[qi];
        for (int w : h.neighbors(v)) {
          if (embedded[w]) {
            if (w != a) {
              hit = v;
              hit_end = w;
              break;
            }
          } else if (from[w] == -1) {
            from[w] = v;
            queue.push_back(w);
          }
        }
      }
      if (hit == -1)
        throw InternalInconsistencyError("planarity: fragment path not found");
      path.push_back(hit_end);
      for (int v = hit; v != a; v = from[v]) path.push_back(v);
      path.push_back(a);
    }

    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      embedded[path[i]] = 1;
      mark_edge(path[i], path[i + 1]);
    }
    embedded[path.back()] = 1;
    emb_edges += static_cast<int>(path.size()) - 1;

    // Split the host face along the new path.
    std::vector<int>& f = faces[pick_face];
    const int fsz = static_cast<int>(f.size());
    int ia = -1, ib = -1;
    for (int i = 0; i < fsz; ++i) {
      if (f[i] == path.front()) ia = i;
      if (f[i] == path.back()) ib = i;
    }
    std::vector<int> f1, f2;
    for (int i = ia;; i = (i + 1) % fsz) {
      f1.push_back(f[i]);
      if (i == ib) break;
    }
    for (int i = static_cast<int>(path.size()) - 2; i >= 1; --i)
      f1.push_back(path[i]);
    for (int i = ib;; i = (i + 1) % fsz) {
      f2.push_back(f[i]);
      if (i == ia) break;
    }
    for (int i = 1; i + 1 < static_cast<int>(path.size()); ++i)
      f2.push_back(path[i]);
    faces[pick_face] = std::move(f1);
    faces.push_back(std::move(f2));
  }
  return true;
}

}  // namespace

bool is_planar(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 4) return true;
  if (g.num_edges() > 3 * n - 6) return false;
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() < 3) continue;  // a bridge or a triangle-free stub
    std::vector<int> ids;
    for (auto [u, v] : block) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : block) edges.push_back({local[u], local[v]});
    if (!block_planar(Graph(static_cast<int>(ids.size()), edges))) return false;
  }
  return true;
}

bool is_plane_triangulation(const Graph& g, int size_guard) {
  const int n = g.num_vertices();
  if (n < 3) throw PreconditionError("triangulation test needs n >= 3");
  if (n > size_guard)
    throw SizeGuardError("triangulation test refuses more than " +
                         std::to_string(size_guard) + " vertices");
  if (!is_connected(g)) return false;
  if (g.num_edges() != 3 * n - 6) return false;
  return is_planar(g);
}

namespace {

bool wagner_adjacent(int i, int j) {
  int d = std::abs(i - j);
  return d == 1 || d == 7 || d == 4;
}

}  // namespace

std::optional<std::vector<int>> is_wagner_graph(const Graph& g) {
  if (g.num_vertices() != 8 || g.num_edges() != 12) return std::nullopt;
  for (int v = 0; v < 8; ++v)
    if (g.degree(v) != 3) return std::nullopt;
  std::vector<int> map(8, -1);
  std::vector<bool> used(8, false);
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == 8) return true;
    for (int cand = 0; cand < 8; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j)
        if (wagner_adjacent(i, j) != g.has_edge(cand, map[j])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[i] = cand;
      used[cand] = true;
      if (self(self, i + 1)) return true;
      used[cand] = false;
      map[i] = -1;
    }
    return false;
  };
  if (dfs(dfs, 0)) return map;
  return std::nullopt;
}

std::optional<int> odd_cycle_length(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 3 || n % 2 == 0) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  return n;
}

bool neighborhoods_of_degree5_are_wheels(const Graph& g) {
  if (g.num_vertices() == 0) throw PreconditionError("empty graph");
  if (max_degree(g) > 5) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 5) continue;
    const auto& rim = g.neighbors(v);
    // The five neighbors must induce a single 5-cycle.
    int rim_edges = 0;
    for (int u : rim) {
      int deg = 0;
      for (int w : rim)
        if (u != w && g.has_edge(u, w)) ++deg;
      if (deg != 2) return false;
      rim_edges += deg;
    }
    if (rim_edges != 10) return false;
    auto sub = induced_subgraph(g, VertexSet(rim.begin(), rim.end()));
    if (!is_connected(sub.graph)) return false;
  }
  return true;
}

bool degree_at_most_six(const Graph& g) {
  if (g.num_vertices() == 0) throw PreconditionError("empty graph");
  return max_degree(g) <= 6;
}

RecognitionReport recognize(const Graph& g, int minor_guard) {
  if (g.num_vertices() == 0) throw PreconditionError("empty graph");
  RecognitionReport r;
  r.claw = find_claw(g);
  r.claw_free = !r.claw.has_value();
  r.k4_minor_free = is_k4_minor_free_fast(g);
  r.k5_minor_free =
      is_planar(g) || !has_minor(g, MinorTarget::K5, minor_guard).has_value();
  r.is_2tree = g.num_vertices() >= 3 && is_connected(g) &&
               recognize_2tree(g).has_value();
  r.is_plane_triangulation =
      g.num_vertices() >= 3 && is_plane_triangulation(g, minor_guard);
  r.is_wagner = is_wagner_graph(g).has_value();
  r.is_odd_cycle = odd_cycle_length(g).has_value();
  r.max_degree = max_degree(g);
  r.clique_number = clique_number(g);
  return r;
}

std::string write_recognition(const RecognitionReport& r) {
  std::ostringstream out;
  auto b = [](bool x) { return x ? "true" : "false"; };
  out << "claw_free " << b(r.claw_free) << '\n';
  if (r.claw)
    out << "claw_witness " << r.claw->center << ' ' << r.claw->leaves[0] << ' '
        << r.claw->leaves[1] << ' ' << r.claw->leaves[2] << '\n';
  out << "k4_minor_free " << b(r.k4_minor_free) << '\n';
  out << "k5_minor_free " << b(r.k5_minor_free) << '\n';
  out << "is_2tree " << b(r.is_2tree) << '\n';
  out << "is_plane_triangulation " << b(r.is_plane_triangulation) << '\n';
  out << "is_wagner " << b(r.is_wagner) << '\n';
  out << "is_odd_cycle " << b(r.is_odd_cycle) << '\n';
  out << "max_degree " << r.max_degree << '\n';
  out << "clique_number " << r.clique_number << '\n';
  return out.str();
}

}  // namespace cqc
