#include "matchram/matching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "matchram/errors.hpp"

namespace matchram {

std::vector<int> Matching::covered() const {
  std::vector<int> out;
  out.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    out.push_back(u);
    out.push_back(v);
  }
  return normalize_set(std::move(out));
}

namespace {

// Scratch state for one augmenting-path search (Edmonds' blossom contraction,
// BFS formulation). Vertices become "outer" when queued; `parent` links record
// the alternating forest; `base` maps each vertex to its blossom base.
struct BlossomSearch {
  const std::vector<std::vector<int>>& adj;
  std::vector<int>& mate;
  const std::vector<char>* dead;
  int n;
  std::vector<int> parent, base, queue;
  std::vector<char> outer, in_blossom;
  std::vector<int> lca_mark;
  int lca_stamp = 0;

  BlossomSearch(const std::vector<std::vector<int>>& adj_, std::vector<int>& mate_,
                const std::vector<char>* dead_)
      : adj(adj_), mate(mate_), dead(dead_), n(static_cast<int>(adj_.size())),
        parent(n, -1), base(n), outer(n, 0), in_blossom(n, 0), lca_mark(n, -1) {
    std::iota(base.begin(), base.end(), 0);
  }

  bool alive(int v) const { return dead == nullptr || !(*dead)[v]; }

  int lca(int a, int b) {
    ++lca_stamp;
    int v = a;
    for (;;) {
      v = base[v];
      lca_mark[v] = lca_stamp;
      if (mate[v] == -1) break;
      v = parent[mate[v]];
    }
    int u = b;
    for (;;) {
      u = base[u];
      if (lca_mark[u] == lca_stamp) return u;
      u = parent[mate[u]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  }

  void augment_along(int v) {
    while (v != -1) {
      int pv = parent[v];
      int next = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = next;
    }
  }

  bool run(int root) {
    if (!alive(root)) return false;
    outer[root] = 1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int to : adj[v]) {
        if (!alive(to)) continue;
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
          // Found an odd cycle: contract the blossom.
          int cur_base = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!outer[i]) {
                outer[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (mate[to] == -1) {
            augment_along(to);
            return true;
          }
          if (!outer[mate[to]]) {
            outer[mate[to]] = 1;
            queue.push_back(mate[to]);
          }
        }
      }
    }
    return false;
  }
};

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbours(v);
  return adj;
}

}  // namespace

bool blossom_augment(const std::vector<std::vector<int>>& adj, std::vector<int>& mate,
                     int root, const std::vector<char>* dead) {
  BlossomSearch search(adj, mate, dead);
  return search.run(root);
}

int max_matching_mates(const Graph& g, std::vector<int>& mate) {
  const int n = g.vertex_count();
  mate.assign(n, -1);
  // Greedy seed in edge-list order, then augment from exposed vertices.
  for (const auto& [u, v] : g.edges())
    if (mate[u] == -1 && mate[v] == -1) {
      mate[u] = v;
      mate[v] = u;
    }
  const auto adj = adjacency(g);
  int size = 0;
  for (int v = 0; v < n; ++v)
    if (mate[v] != -1) ++size;
  size /= 2;
  for (int v = 0; v < n; ++v)
    if (mate[v] == -1 && blossom_augment(adj, mate, v)) ++size;
  return size;
}

Matching max_matching(const Graph& g) {
  std::vector<int> mate;
  max_matching_mates(g, mate);
  Matching m;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
  return m;
}

int nu(const Graph& g) {
  std::vector<int> mate;
  return max_matching_mates(g, mate);
}

int nu_excluding(const Graph& g, const std::vector<char>& removed) {
  require(removed.size() == static_cast<std::size_t>(g.vertex_count()),
          "nu_excluding: mask size mismatch");
  std::vector<Edge> kept;
  for (const auto& [u, v] : g.edges())
    if (!removed[u] && !removed[v]) kept.emplace_back(u, v);
  return nu(Graph(g.vertex_count(), std::move(kept)));
}

namespace {

// Kuhn's algorithm on an explicit left->right adjacency.
int kuhn_matching(const std::vector<std::vector<int>>& right_of, int right_count) {
  const int left_count = static_cast<int>(right_of.size());
  std::vector<int> match_right(right_count, -1);
  std::vector<char> seen(right_count, 0);
  std::function<bool(int)> try_left = [&](int u) -> bool {
    for (int w : right_of[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (match_right[w] == -1 || try_left(match_right[w])) {
        match_right[w] = u;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int u = 0; u < left_count; ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    if (try_left(u)) ++size;
  }
  return size;
}

}  // namespace

int nu_between(const Graph& g, const std::vector<int>& X, const std::vector<int>& Y) {
  const auto xs = normalize_set(X);
  const auto ys = normalize_set(Y);
  require(xs.empty() || (xs.front() >= 0 && xs.back() < g.vertex_count()),
          "nu_between: X out of range");
  require(ys.empty() || (ys.front() >= 0 && ys.back() < g.vertex_count()),
          "nu_between: Y out of range");
  std::vector<Edge> eligible;
  for (const auto& [u, v] : g.edges()) {
    const bool uv = set_contains(xs, u) && set_contains(ys, v);
    const bool vu = set_contains(xs, v) && set_contains(ys, u);
    if (uv || vu) eligible.emplace_back(u, v);
  }
  if (set_intersection(xs, ys).empty()) {
    // Disjoint sides: plain bipartite augmentation.
    std::vector<int> x_id(g.vertex_count(), -1), y_id(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) x_id[xs[i]] = i;
    for (int i = 0; i < static_cast<int>(ys.size()); ++i) y_id[ys[i]] = i;
    std::vector<std::vector<int>> right_of(xs.size());
    for (const auto& [u, v] : eligible) {
      int x = x_id[u] >= 0 ? u : v;
      int y = x == u ? v : u;
      right_of[x_id[x]].push_back(y_id[y]);
    }
    return kuhn_matching(right_of, static_cast<int>(ys.size()));
  }
  return nu(Graph(g.vertex_count(), std::move(eligible)));
}

}  // namespace matchram
