#include "cqc/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace cqc {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw PreconditionError("duplicate edge");
  }
  m_ = static_cast<int>(edges.size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw PreconditionError("vertex out of range");
  return adj_[v];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw PreconditionError("vertex out of range");
  if (u == v) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;  // already lexicographic: u ascending, adj_[u] sorted
}

int max_degree(const Graph& g) {
  if (g.num_vertices() == 0) throw PreconditionError("empty graph");
  int best = 0;
  for (int v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.num_vertices() == 0) throw PreconditionError("empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.num_vertices(); ++v) best = std::min(best, g.degree(v));
  return best;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> to_new(g.num_vertices(), -1);
  for (size_t i = 0; i < s.size(); ++i) {
    int v = s[i];
    if (v < 0 || v >= g.num_vertices())
      throw PreconditionError("vertex out of range");
    if (i > 0 && s[i - 1] >= v)
      throw PreconditionError("vertex set must be sorted and distinct");
    to_new[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : s)
    for (int w : g.neighbors(v))
      if (v < w && to_new[w] >= 0) edges.emplace_back(to_new[v], to_new[w]);
  return {Graph(static_cast<int>(s.size()), edges), s};
}

Subgraph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.num_vertices())
    throw PreconditionError("vertex out of range");
  VertexSet keep;
  keep.reserve(g.num_vertices() - 1);
  for (int u = 0; u < g.num_vertices(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<bool> seen(g.num_vertices(), false);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

std::vector<std::array<int, 3>> list_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto& nu = g.neighbors(u);
      const auto& nv = g.neighbors(v);
      size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j])
          ++i;
        else if (nv[j] < nu[i])
          ++j;
        else {
          if (nu[i] > v) out.push_back({u, v, nu[i]});
          ++i;
          ++j;
        }
      }
    }
  return out;
}

std::uint64_t graph_fingerprint(const Graph& g) {
  auto mix = [](std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  std::uint64_t h = 1469598103934665603ULL;
  h = mix(h, static_cast<std::uint64_t>(g.num_vertices()));
  for (auto [u, v] : g.edge_list()) {
    h = mix(h, static_cast<std::uint64_t>(u));
    h = mix(h, static_cast<std::uint64_t>(v));
  }
  return h;
}

namespace {

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  if (!(in >> a >> b)) return false;
  std::string rest;
  if (in >> rest) return false;
  return true;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> seen;  // per-vertex sorted-later duplicate check
  int header_needed = 1;
  long long edges_read = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') continue;          // comment
    long long a, b;
    if (!parse_two_ints(line, a, b))
      throw ParseError(lineno, header_needed ? "malformed header" : "malformed edge");
    if (header_needed) {
      if (a < 0 || b < 0) throw ParseError(lineno, "malformed header");
      n = a;
      m = b;
      header_needed = 0;
      seen.assign(static_cast<size_t>(n), {});
      continue;
    }
    if (edges_read == m) throw ParseError(lineno, "more edges than declared");
    if (a == b) throw ParseError(lineno, "self-loop");
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError(lineno, "vertex id out of range");
    int u = static_cast<int>(std::min(a, b));
    int v = static_cast<int>(std::max(a, b));
    auto& su = seen[static_cast<size_t>(u)];
    if (std::find(su.begin(), su.end(), v) != su.end())
      throw ParseError(lineno, "duplicate edge");
    su.push_back(v);
    edges.emplace_back(u, v);
    ++edges_read;
  }
  if (header_needed) throw ParseError(lineno + 1, "missing header");
  if (edges_read != m)
    throw ParseError(lineno + 1, "fewer edges than declared");
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace cqc
