#include <doctest.h>

#include "matchram/coloured.hpp"
#include "matchram/compression.hpp"
#include "matchram/gallai_edmonds.hpp"
#include "oracles.hpp"

using namespace matchram;

namespace {

// exhaustive reference: best sigma over all subsets, and the largest set
// attaining it
struct BruteSigma {
  int best = 0;
  std::vector<int> largest_argmax;
};

BruteSigma brute_sigma(const ColouredGraph& cg) {
  const int n = cg.vertex_count();
  const SigmaContext ctx(cg);
  BruteSigma out;
  out.best = -1 << 20;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> t;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) t.push_back(v);
    const int s = sigma_eval(ctx, t).sigma;
    if (s > out.best ||
        (s == out.best && t.size() > out.largest_argmax.size())) {
      out.best = s;
      out.largest_argmax = t;
    }
  }
  return out;
}

ColouredGraph ad_pure_instance(int n, int q, std::uint64_t seed) {
  const Graph g = oracles::random_graph(n, 0.45, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> pick(1, q);
  std::vector<std::vector<Edge>> layers(q + 1);
  for (const auto& e : g.edges()) layers[pick(rng)].push_back(e);
  const ColouredGraph coloured(g, std::move(layers));
  std::vector<std::vector<Edge>> pure(q + 1);
  std::vector<Edge> union_edges;
  for (int j = 1; j <= q; ++j) {
    pure[j] = c_isolate(coloured.layer_graph(j), false).edges();
    union_edges.insert(union_edges.end(), pure[j].begin(), pure[j].end());
  }
  std::sort(union_edges.begin(), union_edges.end());
  union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());
  return ColouredGraph(Graph(n, union_edges), std::move(pure));
}

}  // namespace

TEST_CASE("a factor-critical cycle needs no deletions") {
  const Graph host = cycle_graph(5);
  const SigmaContext ctx(ColouredGraph(host, {{}, host.edges()}));
  CHECK(sigma_maximal(ctx).empty());
}

TEST_CASE("on a 3-path the chosen set is exactly the centre") {
  const Graph host = path_graph(3);
  const SigmaContext ctx(ColouredGraph(host, {{}, host.edges()}));
  CHECK(sigma_maximal(ctx) == std::vector<int>{1});
}

TEST_CASE("two triangles sharing two vertices: the shared pair is deleted") {
  // colour 1 on {0,1,2}, colour 2 on {1,2,3}; their D-components form a cycle
  const Graph host(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const ColouredGraph cg(host,
                         {{},
                          {{0, 1}, {0, 2}, {1, 2}},
                          {{1, 2}, {1, 3}, {2, 3}}});
  CHECK(!is_hyperforest(k_hypergraph(cg)));
  const SigmaContext ctx(cg);
  const auto T = sigma_maximal(ctx);
  CHECK(T == std::vector<int>{1, 2});
  CHECK(is_hyperforest(k_hypergraph(uncolour(cg, T))));
}

TEST_CASE("sigma-maximal output is a largest global maximiser (exhaustive, n <= 9)") {
  for (int i = 0; i < 120; ++i) {
    const int n = 4 + i % 6;
    const int q = 1 + i % 3;
    const auto cg = ad_pure_instance(n, q, 2200 + i);
    const SigmaContext ctx(cg);
    const auto T = sigma_maximal(ctx);
    const auto brute = brute_sigma(cg);
    const int got = sigma_eval(ctx, T).sigma;
    CAPTURE(i);
    CAPTURE(n);
    CAPTURE(q);
    REQUIRE(got == brute.best);
    // every strict superset loses strictly
    const std::uint32_t base = [&] {
      std::uint32_t m = 0;
      for (int v : T) m |= std::uint32_t{1} << v;
      return m;
    }();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      if ((mask & base) != base || mask == base) continue;
      std::vector<int> sup;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) sup.push_back(v);
      REQUIRE(sigma_eval(ctx, sup).sigma < got);
    }
  }
}

TEST_CASE("strict-superset condition holds exhaustively at n = 12") {
  for (int i = 0; i < 6; ++i) {
    const auto cg = ad_pure_instance(12, 2, 47000 + i);
    const SigmaContext ctx(cg);
    const auto T = sigma_maximal(ctx);
    const int got = sigma_eval(ctx, T).sigma;
    std::uint32_t base = 0;
    for (int v : T) base |= std::uint32_t{1} << v;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << 12); ++mask) {
      std::vector<int> s;
      for (int v = 0; v < 12; ++v)
        if (mask >> v & 1) s.push_back(v);
      const int val = sigma_eval(ctx, s).sigma;
      CAPTURE(i);
      if ((mask & base) == base && mask != base)
        REQUIRE(val < got);  // strict superset loses strictly
      else
        REQUIRE(val <= got);  // nothing beats the maximiser
    }
  }
}

TEST_CASE("sigma-maximal beats random candidates on larger instances") {
  for (int i = 0; i < 20; ++i) {
    const auto cg = ad_pure_instance(12, 2, 9900 + i);
    const SigmaContext ctx(cg);
    const auto T = sigma_maximal(ctx);
    const int got = sigma_eval(ctx, T).sigma;
    std::mt19937_64 rng(i);
    std::uniform_int_distribution<int> vp(0, 11);
    for (int k = 0; k < 1000; ++k) {
      std::vector<int> s;
      const int size = k % 7;
      for (int x = 0; x < size; ++x) s.push_back(vp(rng));
      REQUIRE(sigma_eval(ctx, normalize_set(s)).sigma <= got);
    }
    for (int v = 0; v < 12; ++v) {
      if (set_contains(T, v)) continue;
      auto ext = T;
      ext.push_back(v);
      REQUIRE(sigma_eval(ctx, ext).sigma < got);
    }
  }
}

TEST_CASE("the forced A-union is always included") {
  for (int i = 0; i < 60; ++i) {
    const auto cg = ad_pure_instance(9, 2, 31337 + i);
    const SigmaContext ctx(cg);
    const auto T = sigma_maximal(ctx);
    for (int j = 1; j <= 2; ++j)
      REQUIRE(set_intersection(ctx.a_set(j), T) == ctx.a_set(j));
  }
}
