#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <queue>

#include "matchram/connector.hpp"
#include "matchram/errors.hpp"
#include "matchram/matching.hpp"

namespace matchram {

ColouredConstruction cl_extremal(const TVector& t) {
  const int q = t.q();
  const int n = t.tmax() + t.lambda();

  // Colours sorted by descending target, stable on index. The first block is
  // a clique of its own colour; each later block claims the incident edges
  // that no earlier block claimed.
  std::vector<int> order(q);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&t](int a, int b) { return t.t[a] > t.t[b]; });
  std::vector<int> block_of(n, -1);
  int next = 0;
  for (int pos = 0; pos < q; ++pos) {
    const int size = pos == 0 ? 2 * t.t[order[0]] - 1 : t.t[order[pos]] - 1;
    for (int k = 0; k < size; ++k) block_of[next++] = pos;
  }
  contract(next == n, "cl_extremal: block sizes do not fill the host");

  Graph host = complete_graph(n);
  std::vector<std::vector<Edge>> layers(q + 1);
  for (const auto& [u, v] : host.edges()) {
    const int bu = std::min(block_of[u], block_of[v]);
    const int bv = std::max(block_of[u], block_of[v]);
    const int pos = bu >= 1 ? bu : (bv == 0 ? 0 : bv);
    layers[order[pos] + 1].emplace_back(u, v);
  }
  return ColouredConstruction{host, ColouredGraph(host, std::move(layers))};
}

ColouredConstruction sharp_construction(const TVector& t, int s) {
  require(s >= 1, "sharp_construction: s must be positive");
  auto base = cl_extremal(t);
  const int n = base.graph.vertex_count() + s - 1;
  Graph host(n, base.graph.edges());
  std::vector<std::vector<Edge>> layers(t.q() + 1);
  for (int j = 0; j <= t.q(); ++j) layers[j] = base.colouring.layer(j);
  return ColouredConstruction{host, ColouredGraph(host, std::move(layers))};
}

ColouredConstruction split_star_colouring(int q, int s) {
  require(q >= 1, "split_star_colouring: q must be positive");
  require(s >= 2, "split_star_colouring: s must be at least 2");
  Graph host = gen_complete_split(q, 2 * s - 1);
  std::vector<std::vector<Edge>> layers(q + 1);
  // Clique vertices are 0..q-1; every edge meets one, and takes the least
  // such index as its colour.
  for (const auto& [u, v] : host.edges()) layers[std::min(u, v) + 1].emplace_back(u, v);
  return ColouredConstruction{host, ColouredGraph(host, std::move(layers))};
}

namespace {

// Minimum vertex cover of a bipartite graph: maximum matching plus the
// alternating-reachability construction of Koenig's theorem.
std::vector<int> konig_cover(const Graph& g, const std::array<std::vector<int>, 2>& sides) {
  const int n = g.vertex_count();
  std::vector<char> is_left(n, 0);
  for (int v : sides[0]) is_left[v] = 1;

  std::vector<int> mate(n, -1);
  std::vector<char> seen(n, 0);
  std::function<bool(int)> try_augment = [&](int u) -> bool {
    for (int w : g.neighbours(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (mate[w] == -1 || try_augment(mate[w])) {
        mate[w] = u;
        mate[u] = w;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int u : sides[0]) {
    std::fill(seen.begin(), seen.end(), 0);
    if (try_augment(u)) ++matched;
  }

  // Z: vertices reachable from unmatched left vertices by alternating paths
  // (unmatched edges leftwards, matched edges rightwards).
  std::vector<char> in_z(n, 0);
  std::queue<int> queue;
  for (int u : sides[0])
    if (mate[u] == -1) {
      in_z[u] = 1;
      queue.push(u);
    }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : g.neighbours(v)) {
      if (is_left[v]) {
        if (mate[v] == w || in_z[w]) continue;
        in_z[w] = 1;
        queue.push(w);
      } else {
        if (mate[v] != w || in_z[w]) continue;
        in_z[w] = 1;
        queue.push(w);
      }
    }
  }
  std::vector<int> cover;
  for (int u : sides[0])
    if (!in_z[u]) cover.push_back(u);
  for (int w : sides[1])
    if (in_z[w]) cover.push_back(w);
  cover = normalize_set(std::move(cover));
  contract(static_cast<int>(cover.size()) == matched,
           "konig_cover: cover size differs from the matching number");
  return cover;
}

}  // namespace

ColouredGraph konig_colouring(const Graph& g, const TVector& t) {
  const auto sides = bipartition(g);
  require(sides.has_value(), "konig_colouring: graph is not bipartite");
  const auto cover = konig_cover(g, *sides);
  require(t.lambda() >= static_cast<int>(cover.size()),
          "konig_colouring: pigeonhole budget below the matching number");

  // Greedy split of the cover, colour j taking at most t_j - 1 vertices.
  std::vector<int> colour_of(g.vertex_count(), 0);
  int j = 1;
  int used = 0;
  for (int v : cover) {
    while (used >= t.t[j - 1] - 1) {
      ++j;
      used = 0;
    }
    colour_of[v] = j;
    ++used;
  }
  std::vector<std::vector<Edge>> layers(t.q() + 1);
  for (const auto& [u, v] : g.edges()) {
    const int cu = colour_of[u] == 0 ? t.q() + 1 : colour_of[u];
    const int cv = colour_of[v] == 0 ? t.q() + 1 : colour_of[v];
    const int c = std::min(cu, cv);
    contract(c <= t.q(), "konig_colouring: cover misses an edge");
    layers[c].emplace_back(u, v);
  }
  return ColouredGraph(g, std::move(layers));
}

std::optional<ColouredGraph> gnp_adversary_colouring(const Graph& g, const TVector& t) {
  require(t.lambda() >= nu(g),
          "gnp_adversary_colouring: pigeonhole budget below the matching number");
  if (is_forest(g)) return konig_colouring(g, t);

  const auto comps = connected_components(g);
  std::size_t largest = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[largest].size()) largest = i;

  std::vector<int> cyclic_part = comps[largest];
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i == largest) continue;
    std::size_t inner_edges = 0;
    for (const auto& [u, v] : g.edges())
      if (set_contains(comps[i], u) && set_contains(comps[i], v)) ++inner_edges;
    if (inner_edges >= comps[i].size())  // connected, so cyclic iff |E| >= |V|
      cyclic_part = set_union(cyclic_part, comps[i]);
  }

  const auto sub = induced(g, cyclic_part);
  const int nu1 = nu(sub.graph);
  int jstar = 0;
  for (int j = 1; j < t.q(); ++j)
    if (t.t[j] > t.t[jstar]) jstar = j;
  if (nu1 >= t.t[jstar]) return std::nullopt;  // construction inapplicable

  std::vector<std::vector<Edge>> layers(t.q() + 1);
  std::vector<Edge> rest_edges;
  for (const auto& [u, v] : g.edges()) {
    if (set_contains(cyclic_part, u) && set_contains(cyclic_part, v))
      layers[jstar + 1].emplace_back(u, v);
    else
      rest_edges.emplace_back(u, v);
  }

  std::vector<int> rest;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!set_contains(cyclic_part, v)) rest.push_back(v);
  const auto forest = induced(g, rest);
  contract(is_forest(forest.graph), "gnp_adversary_colouring: residual is not a forest");

  TVector reduced = t;
  reduced.t[jstar] -= nu1;
  const auto forest_colouring = konig_colouring(forest.graph, reduced);
  for (int j = 1; j <= t.q(); ++j)
    for (const auto& [u, v] : forest_colouring.layer(j))
      layers[j].push_back(make_edge(forest.to_parent[u], forest.to_parent[v]));

  return ColouredGraph(g, std::move(layers));
}

}  // namespace matchram
