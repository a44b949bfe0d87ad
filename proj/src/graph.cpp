#include "matchram/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

#include "matchram/errors.hpp"

namespace matchram {

Graph::Graph(int n) : n_(n), adj_(n) {
  require(n >= 0, "graph: vertex count must be non-negative");
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  require(n >= 0, "graph: vertex count must be non-negative");
  for (auto& e : edges) {
    e = make_edge(e.first, e.second);
    require(e.first != e.second, "graph: self-loops are not allowed");
    require(e.first >= 0 && e.second < n, "graph: edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  require(dup == edges.end(), "graph: duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbours(int v) const {
  require(v >= 0 && v < n_, "graph: vertex out of range");
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

bool Graph::has_edge(int u, int v) const {
  require(u >= 0 && u < n_ && v >= 0 && v < n_, "graph: vertex out of range");
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> normalize_set(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool set_contains(const std::vector<int>& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Graph with_edge(const Graph& g, int u, int v) {
  require(!g.has_edge(u, v), "with_edge: edge already present");
  auto edges = g.edges();
  edges.push_back(make_edge(u, v));
  return Graph(g.vertex_count(), std::move(edges));
}

Graph without_edges_at(const Graph& g, const std::vector<int>& S) {
  auto s = normalize_set(S);
  std::vector<Edge> kept;
  for (const auto& [u, v] : g.edges())
    if (!set_contains(s, u) && !set_contains(s, v)) kept.emplace_back(u, v);
  return Graph(g.vertex_count(), std::move(kept));
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Relabelling induced(const Graph& g, const std::vector<int>& keep) {
  auto k = normalize_set(keep);
  require(k.empty() || (k.front() >= 0 && k.back() < g.vertex_count()),
          "induced: vertex out of range");
  std::vector<int> from_parent(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(k.size()); ++i) from_parent[k[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (from_parent[u] >= 0 && from_parent[v] >= 0)
      edges.emplace_back(from_parent[u], from_parent[v]);
  return Relabelling{Graph(static_cast<int>(k.size()), std::move(edges)), std::move(k),
                     std::move(from_parent)};
}

Relabelling remove_vertex(const Graph& g, int v) {
  require(v >= 0 && v < g.vertex_count(), "remove_vertex: vertex out of range");
  std::vector<int> keep;
  keep.reserve(g.vertex_count() - 1);
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v) keep.push_back(u);
  return induced(g, keep);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      out[id].push_back(v);
      for (int w : g.neighbours(v))
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_forest(const Graph& g) {
  const auto comps = connected_components(g);
  // acyclic iff every component has |E| = |V| - 1
  std::size_t tree_edges = 0;
  for (const auto& c : comps) tree_edges += c.size() - 1;
  return static_cast<std::size_t>(g.edge_count()) == tree_edges;
}

std::optional<std::array<std::vector<int>, 2>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::array<std::vector<int>, 2> parts;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbours(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) parts[side[v]].push_back(v);
  return parts;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph: need at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));      // outer cycle
    edges.push_back(make_edge(i, i + 5));            // spokes
    edges.push_back(make_edge(i + 5, (i + 2) % 5 + 5));  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

}  // namespace matchram
