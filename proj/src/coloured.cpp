#include "matchram/coloured.hpp"

#include <algorithm>
#include <numeric>

#include "matchram/errors.hpp"
#include "matchram/matching.hpp"

namespace matchram {

namespace {

std::vector<Edge> normalize_edges(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

ColouredGraph::ColouredGraph(Graph host, int q) : host_(std::move(host)), q_(q) {
  require(q >= 1, "coloured: colour count must be at least 1");
  layers_.assign(q + 1, {});
}

ColouredGraph::ColouredGraph(Graph host, std::vector<std::vector<Edge>> layers)
    : host_(std::move(host)), q_(static_cast<int>(layers.size()) - 1) {
  require(layers.size() >= 2, "coloured: need layer 0 plus at least one colour");
  for (auto& layer : layers) {
    layer = normalize_edges(std::move(layer));
    for (const auto& [u, v] : layer)
      require(host_.has_edge(u, v), "coloured: layer contains a non-host edge");
  }
  layers_ = std::move(layers);
}

const std::vector<Edge>& ColouredGraph::layer(int j) const {
  require(j >= 0 && j <= q_, "coloured: layer index out of range");
  return layers_[j];
}

Graph ColouredGraph::layer_graph(int j) const {
  return Graph(host_.vertex_count(), layer(j));
}

bool ColouredGraph::fully_coloured() const {
  if (!layers_[0].empty()) return false;
  std::vector<Edge> all;
  for (int j = 1; j <= q_; ++j)
    all.insert(all.end(), layers_[j].begin(), layers_[j].end());
  return normalize_edges(std::move(all)) == host_.edges();
}

bool ColouredGraph::is_s_proper(const std::vector<int>& S) const {
  const auto s = normalize_set(S);
  std::vector<Edge> at_s;
  for (const auto& [u, v] : host_.edges())
    if (set_contains(s, u) || set_contains(s, v)) at_s.emplace_back(u, v);
  if (layers_[0] != at_s) return false;
  for (int j = 1; j <= q_; ++j)
    for (const auto& e : layers_[j])
      if (std::binary_search(at_s.begin(), at_s.end(), e)) return false;
  return true;
}

std::vector<int> nu_vector(const ColouredGraph& cg) {
  std::vector<int> out;
  out.reserve(cg.colour_count());
  for (int j = 1; j <= cg.colour_count(); ++j) out.push_back(nu(cg.layer_graph(j)));
  return out;
}

int nu_sigma(const ColouredGraph& cg) {
  const auto v = nu_vector(cg);
  return std::accumulate(v.begin(), v.end(), 0);
}

ColouredGraph uncolour(const ColouredGraph& cg, const std::vector<int>& S) {
  const auto s = normalize_set(S);
  const auto touches = [&s](const Edge& e) {
    return set_contains(s, e.first) || set_contains(s, e.second);
  };
  std::vector<std::vector<Edge>> layers(cg.colour_count() + 1);
  layers[0] = cg.layer(0);
  for (const auto& e : cg.host().edges())
    if (touches(e)) layers[0].push_back(e);
  for (int j = 1; j <= cg.colour_count(); ++j)
    for (const auto& e : cg.layer(j))
      if (!touches(e)) layers[j].push_back(e);
  return ColouredGraph(cg.host(), std::move(layers));
}

ComponentHypergraph component_hypergraph(const ColouredGraph& cg) {
  ComponentHypergraph h;
  h.n = cg.vertex_count();
  for (int j = 1; j <= cg.colour_count(); ++j) {
    const Graph layer = cg.layer_graph(j);
    for (auto& comp : connected_components(layer))
      if (comp.size() >= 2)
        h.edges.push_back({std::move(comp), j, Hyperedge::Origin::kColourComponent});
  }
  return h;
}

ComponentHypergraph k_hypergraph(const ColouredGraph& cg) {
  ComponentHypergraph h;
  h.n = cg.vertex_count();
  for (int j = 1; j <= cg.colour_count(); ++j) {
    const auto ge = ge_decompose(cg.layer_graph(j));
    for (const auto& comp : ge.d_components)
      h.edges.push_back({comp, j, Hyperedge::Origin::kDComponent});
  }
  return h;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false if x and y were already connected
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

bool is_hyperforest(const ComponentHypergraph& h) {
  // Incidence nodes: vertices 0..n-1, then one node per hyperedge.
  UnionFind uf(h.n + static_cast<int>(h.edges.size()));
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    for (int v : h.edges[i].vertices)
      if (!uf.unite(v, h.n + static_cast<int>(i))) return false;
  return true;
}

SigmaContext::SigmaContext(const ColouredGraph& cg)
    : n_(cg.vertex_count()), q_(cg.colour_count()) {
  for (int j = 1; j <= q_; ++j) {
    const Graph layer = cg.layer_graph(j);
    const auto ge = ge_decompose(layer);
    a_sets_.push_back(ge.A);
    forced_ = set_union(forced_, ge.A);
    for (const auto& comp : ge.d_components) {
      auto sub = induced(layer, comp);
      Component c;
      c.colour = j;
      c.vertices = comp;
      c.nu = nu(sub.graph);
      c.graph = std::move(sub.graph);
      c.local_of = std::move(sub.from_parent);
      components_.push_back(std::move(c));
    }
  }
}

SigmaValue sigma_eval(const SigmaContext& ctx, const std::vector<int>& T) {
  const auto t = normalize_set(T);
  int r = 0;
  for (int j = 1; j <= ctx.colour_count(); ++j)
    r += static_cast<int>(set_intersection(ctx.a_set(j), t).size());
  for (const auto& comp : ctx.components()) {
    if (comp.nu == 0) continue;  // removing vertices cannot drop an empty matching
    std::vector<char> removed(comp.graph.vertex_count(), 0);
    bool any = false;
    for (int v : t)
      if (v < static_cast<int>(comp.local_of.size()) && comp.local_of[v] >= 0) {
        removed[comp.local_of[v]] = 1;
        any = true;
      }
    if (any) r += comp.nu - nu_excluding(comp.graph, removed);
  }
  return SigmaValue{r, r - static_cast<int>(t.size())};
}

}  // namespace matchram
