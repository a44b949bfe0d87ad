#include "matchram/connector.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "matchram/errors.hpp"
#include "matchram/matching.hpp"

namespace matchram {

TVector::TVector(std::vector<int> entries) : t(std::move(entries)) {
  require(!t.empty(), "t-vector: needs at least one colour");
  for (int v : t) require(v >= 1, "t-vector: entries must be positive");
}

int TVector::lambda() const {
  int sum = 0;
  for (int v : t) sum += v - 1;
  return sum;
}

int TVector::tmax() const { return *std::max_element(t.begin(), t.end()); }

namespace {

using Mask = std::uint64_t;

// first k vertices listed in `mask`'s complement relative to all n vertices
std::vector<int> mask_to_set(Mask mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask & (Mask{1} << v)) out.push_back(v);
  return out;
}

}  // namespace

ConnectorCertificate is_s_connector(const Graph& g, int s, const ConnectorGuard& guard) {
  require(s >= 1, "is_s_connector: s must be positive");
  const int n = g.vertex_count();
  if (2 * s > n) return ConnectorCertificate{s, true, std::nullopt};
  if (n > guard.max_n || s > guard.max_s)
    throw GuardError("is_s_connector: n=" + std::to_string(n) + ", s=" + std::to_string(s) +
                     " exceeds guard (n<=" + std::to_string(guard.max_n) +
                     ", s<=" + std::to_string(guard.max_s) + "); raise with --guard-n");
  contract(n <= 63, "is_s_connector: bitset overflow");

  std::vector<Mask> nbr(n, 0);
  for (const auto& [u, v] : g.edges()) {
    nbr[u] |= Mask{1} << v;
    nbr[v] |= Mask{1} << u;
  }
  const Mask all = n == 63 ? ~Mask{0} : (Mask{1} << n) - 1;

  // Enumerate size-s subsets X; a hole partner exists iff at least s vertices
  // avoid X and all its neighbours.
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    Mask x = 0, reach = 0;
    for (int i : idx) {
      x |= Mask{1} << i;
      reach |= nbr[i];
    }
    const Mask free = all & ~x & ~reach;
    if (std::popcount(free) >= s) {
      auto ys = mask_to_set(free, n);
      ys.resize(s);
      return ConnectorCertificate{s, false, std::make_pair(mask_to_set(x, n), ys)};
    }
    // next combination
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return ConnectorCertificate{s, true, std::nullopt};
}

int alpha_star(const Graph& g, const AlphaStarGuard& guard) {
  const int n = g.vertex_count();
  if (n > guard.max_n)
    throw GuardError("alpha_star: n=" + std::to_string(n) + " exceeds guard (n<=" +
                     std::to_string(guard.max_n) + "); raise with --guard-n");
  // (t,t)-holes are monotone: a (t,t)-hole contains a (t-1,t-1)-hole.
  ConnectorGuard inner{n, n};
  int best = 0;
  for (int t = 1; 2 * t <= n; ++t) {
    if (is_s_connector(g, t, inner).verdict) break;
    best = t;
  }
  return best;
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0, "gen_gnp: negative order");
  require(p >= 0.0 && p <= 1.0, "gen_gnp: probability out of range");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph gen_random_regular(int n, int d, std::uint64_t seed) {
  require(n >= 0 && d >= 0, "gen_random_regular: negative parameter");
  require(d < n || (n == 0 && d == 0), "gen_random_regular: degree must be below order");
  require((static_cast<long long>(n) * d) % 2 == 0, "gen_random_regular: nd must be even");
  if (d == 0) return Graph(n);
  std::mt19937_64 rng(seed);
  // Pairing model: shuffle n*d half-edge points, pair consecutively, reject
  // the whole attempt on any loop or repeated edge.
  std::vector<int> points(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) points[static_cast<std::size_t>(v) * d + k] = v;
  constexpr int kMaxAttempts = 20000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    edges.reserve(points.size() / 2);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      if (points[i] == points[i + 1]) {
        ok = false;
        break;
      }
      edges.push_back(make_edge(points[i], points[i + 1]));
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, std::move(edges));
  }
  throw PreconditionError("gen_random_regular: no simple pairing found (parameters too tight)");
}

Graph gen_complete_split(int clique_size, int independent_size) {
  require(clique_size >= 0 && independent_size >= 0, "gen_complete_split: negative size");
  std::vector<Edge> edges;
  for (int u = 0; u < clique_size; ++u) {
    for (int v = u + 1; v < clique_size; ++v) edges.emplace_back(u, v);
    for (int w = 0; w < independent_size; ++w) edges.emplace_back(u, clique_size + w);
  }
  return Graph(clique_size + independent_size, std::move(edges));
}

Graph gen_odd_cycle(int ell) {
  require(ell >= 3 && ell % 2 == 1, "gen_odd_cycle: length must be odd and at least 3");
  return cycle_graph(ell);
}

}  // namespace matchram
