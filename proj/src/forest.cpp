#include "matchram/forest.hpp"

#include <algorithm>
#include <numeric>

#include "matchram/errors.hpp"

namespace matchram {

namespace {

std::int64_t set_weight(const std::vector<int>& vs, const std::vector<std::int64_t>& w) {
  std::int64_t total = 0;
  for (int v : vs) total += w[v];
  return total;
}

// Heaviest component, ties broken towards the earliest (components arrive
// ordered by smallest vertex).
std::size_t heaviest(const std::vector<std::vector<int>>& comps,
                     const std::vector<std::int64_t>& w) {
  std::size_t best = 0;
  std::int64_t best_w = set_weight(comps[0], w);
  for (std::size_t i = 1; i < comps.size(); ++i) {
    const auto wi = set_weight(comps[i], w);
    if (wi > best_w) {
      best = i;
      best_w = wi;
    }
  }
  return best;
}

}  // namespace

int weighted_centroid(const WeightedForest& forest) {
  const Graph& g = forest.graph;
  const int n = g.vertex_count();
  require(n > 0, "weighted_centroid: empty forest");
  require(is_forest(g), "weighted_centroid: graph has a cycle");
  require(forest.weight.size() == static_cast<std::size_t>(n),
          "weighted_centroid: weight vector size mismatch");
  for (auto w : forest.weight) require(w >= 0, "weighted_centroid: negative weight");

  const std::int64_t total = std::accumulate(forest.weight.begin(), forest.weight.end(),
                                             std::int64_t{0});
  const auto comps = connected_components(g);
  const auto& home = comps[heaviest(comps, forest.weight)];

  int v = home.front();
  for (int step = 0; step <= n; ++step) {
    const auto pieces = connected_components(remove_vertex(g, v).graph);
    if (pieces.empty()) return v;  // deleting the only vertex leaves nothing
    // Map back: remove_vertex keeps ids below v, shifts ids above v down one.
    std::vector<std::vector<int>> lifted;
    for (const auto& p : pieces) {
      std::vector<int> q;
      q.reserve(p.size());
      for (int x : p) q.push_back(x < v ? x : x + 1);
      lifted.push_back(std::move(q));
    }
    const auto& heavy = lifted[heaviest(lifted, forest.weight)];
    if (2 * set_weight(heavy, forest.weight) <= total) return v;
    // Descend towards the overweight piece; it lies in v's own component, so
    // v has a neighbour inside it.
    int next = -1;
    for (int w : g.neighbours(v))
      if (set_contains(heavy, w)) {
        next = w;
        break;
      }
    contract(next != -1, "weighted_centroid: overweight piece not adjacent");
    v = next;
  }
  throw ContractError("weighted_centroid: descent failed to terminate");
}

std::vector<std::size_t> balanced_subset(const std::vector<std::int64_t>& s) {
  require(!s.empty(), "balanced_subset: empty input");
  std::int64_t total = 0;
  for (auto v : s) {
    require(v > 0, "balanced_subset: values must be positive");
    total += v;
  }
  for (auto v : s)
    require(3 * v <= 2 * total, "balanced_subset: an element exceeds two thirds of the sum");
  // One element already in [total/3, 2*total/3]?
  for (std::size_t i = 0; i < s.size(); ++i)
    if (3 * s[i] >= total) return {i};
  // All elements below total/3: shortest prefix reaching total/3 stays below
  // 2*total/3.
  std::int64_t run = 0;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    run += s[i];
    out.push_back(i);
    if (3 * run >= total) return out;
  }
  throw ContractError("balanced_subset: prefix never reached a third");
}

}  // namespace matchram
