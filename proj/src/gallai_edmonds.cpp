#include "matchram/gallai_edmonds.hpp"

#include <algorithm>

#include "matchram/errors.hpp"
#include "matchram/matching.hpp"

namespace matchram {

namespace {

// Marks each vertex inessential iff nu(g - v) == nu(g). Uses one maximum
// matching M: an unmatched v is immediately inessential; for a matched v,
// unmatch its partner u and look for a single augmenting path from u with v
// deleted. Any augmenting path of the reduced matching must end at u, so the
// single-source search is exact.
std::vector<char> inessential_mask(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbours(v);
  std::vector<int> base_mate;
  max_matching_mates(g, base_mate);
  std::vector<char> out(n, 0);
  std::vector<char> dead(n, 0);
  for (int v = 0; v < n; ++v) {
    if (base_mate[v] == -1) {
      out[v] = 1;
      continue;
    }
    std::vector<int> mate = base_mate;
    const int u = mate[v];
    mate[u] = -1;
    mate[v] = -1;
    dead[v] = 1;
    out[v] = blossom_augment(adj, mate, u, &dead) ? 1 : 0;
    dead[v] = 0;
  }
  return out;
}

}  // namespace

GEDecomposition ge_decompose(const Graph& g) {
  const int n = g.vertex_count();
  const auto inessential = inessential_mask(g);
  GEDecomposition ge;
  for (int v = 0; v < n; ++v)
    if (inessential[v]) ge.D.push_back(v);
  for (int v = 0; v < n; ++v) {
    if (inessential[v]) continue;
    bool touches_d = false;
    for (int w : g.neighbours(v))
      if (inessential[w]) {
        touches_d = true;
        break;
      }
    (touches_d ? ge.A : ge.C).push_back(v);
  }
  const auto sub = induced(g, ge.D);
  for (const auto& comp : connected_components(sub.graph)) {
    std::vector<int> lifted;
    lifted.reserve(comp.size());
    for (int v : comp) lifted.push_back(sub.to_parent[v]);
    ge.d_components.push_back(normalize_set(std::move(lifted)));
  }
  return ge;
}

bool is_factor_critical(const Graph& g) {
  const int n = g.vertex_count();
  if (n % 2 == 0) return false;
  if (nu(g) != (n - 1) / 2) return false;
  // Near-perfect matchings exist; factor-critical iff every vertex is missed
  // by one of them, i.e. the whole vertex set is inessential.
  const auto inessential = inessential_mask(g);
  return std::all_of(inessential.begin(), inessential.end(), [](char c) { return c != 0; });
}

}  // namespace matchram
