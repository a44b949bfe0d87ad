#include "matchram/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "matchram/compression.hpp"
#include "matchram/connector.hpp"
#include "matchram/errors.hpp"
#include "matchram/gallai_edmonds.hpp"
#include "matchram/matching.hpp"
#include "matchram/ramsey.hpp"

namespace matchram {

namespace {

using Rng = std::mt19937_64;

void note_failure(SuiteCheck& check, nlohmann::json info) {
  ++check.failures;
  if (check.detail["failures"].size() < 5) check.detail["failures"].push_back(std::move(info));
}

nlohmann::json graph_note(const Graph& g) {
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph random_graph(int n, Rng& rng) {
  std::uniform_real_distribution<double> pd(0.1, 0.9);
  const double p = pd(rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// Near-complete host that provably passes the exact connectivity check.
Graph random_connector(int n, int s, Rng& rng) {
  const ConnectorGuard guard{std::max(n, 24), std::max(s, 5)};
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::uniform_real_distribution<double> pd(0.0, 0.15);
    Graph g = complement(gen_gnp(n, pd(rng), rng()));
    if (is_s_connector(g, s, guard).verdict) return g;
  }
  return complete_graph(n);  // always an s-connector
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.push_back(make_edge(perm[u], perm[v]));
  return Graph(g.vertex_count(), std::move(edges));
}

ColouredGraph permuted(const ColouredGraph& cg, const std::vector<int>& perm) {
  std::vector<std::vector<Edge>> layers(cg.colour_count() + 1);
  for (int j = 0; j <= cg.colour_count(); ++j)
    for (const auto& [u, v] : cg.layer(j)) layers[j].push_back(make_edge(perm[u], perm[v]));
  return ColouredGraph(permuted(cg.host(), perm), std::move(layers));
}

ColouredGraph random_full_colouring(const Graph& g, int q, Rng& rng) {
  std::uniform_int_distribution<int> pick(1, q);
  std::vector<std::vector<Edge>> layers(q + 1);
  for (const auto& e : g.edges()) layers[pick(rng)].push_back(e);
  return ColouredGraph(g, std::move(layers));
}

// Random fully-coloured instance in which every colour's C part is empty:
// colour a random graph, isolate each colour's C part, and keep the union of
// the compressed layers as the host.
ColouredGraph random_ad_pure(int n, int q, Rng& rng) {
  const Graph g = random_graph(n, rng);
  const auto coloured = random_full_colouring(g, q, rng);
  std::vector<std::vector<Edge>> layers(q + 1);
  std::vector<Edge> union_edges;
  for (int j = 1; j <= q; ++j) {
    layers[j] = c_isolate(coloured.layer_graph(j), /*checked=*/false).edges();
    union_edges.insert(union_edges.end(), layers[j].begin(), layers[j].end());
  }
  std::sort(union_edges.begin(), union_edges.end());
  union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());
  return ColouredGraph(Graph(n, std::move(union_edges)), std::move(layers));
}

// Fully-coloured colouring of a complete host whose per-colour matching
// numbers fit under (n-2s)/2: a random admissible block split, randomly
// relabelled.
std::optional<ColouredGraph> block_colouring(int n, int q, int s, Rng& rng) {
  std::vector<std::vector<int>> candidates;
  std::vector<int> t(q, 1);
  const std::function<void(int, int)> enumerate = [&](int j, int used) {
    if (j == q) {
      TVector tv(t);
      if (tv.tmax() + tv.lambda() != n) return;
      for (int x : t)
        if (2 * (x - 1) > n - 2 * s) return;
      candidates.push_back(t);
      return;
    }
    for (int x = 1; x <= n && used + x <= 2 * n; ++x) {
      t[j] = x;
      enumerate(j + 1, used + x);
    }
  };
  enumerate(0, 0);
  if (candidates.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  const auto base = cl_extremal(TVector(candidates[pick(rng)]));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permuted(base.colouring, perm);
}

// A host plus colouring satisfying the distil preconditions for the given s.
std::pair<Graph, ColouredGraph> distil_instance(int n, int q, int s, Rng& rng) {
  // Try rejection sampling on a verified connector first, for variety.
  for (int attempt = 0; attempt < 30; ++attempt) {
    const Graph host = random_connector(n, s, rng);
    std::uniform_int_distribution<int> flavour(0, 1);
    ColouredGraph cg = flavour(rng) == 0 ? random_full_colouring(host, q, rng)
                                         : [&] {
                                             std::vector<int> cover(host.vertex_count(), 0);
                                             std::uniform_int_distribution<int> cpick(0, q);
                                             for (auto& c : cover) c = cpick(rng);
                                             std::uniform_int_distribution<int> rpick(1, q);
                                             std::vector<std::vector<Edge>> layers(q + 1);
                                             for (const auto& [u, v] : host.edges()) {
                                               int cu = cover[u] == 0 ? q + 1 : cover[u];
                                               int cv = cover[v] == 0 ? q + 1 : cover[v];
                                               int c = std::min(cu, cv);
                                               layers[c <= q ? c : rpick(rng)].emplace_back(u, v);
                                             }
                                             return ColouredGraph(host, std::move(layers));
                                           }();
    bool ok = true;
    for (int x : nu_vector(cg))
      if (2 * x > n - 2 * s) ok = false;
    if (ok) return {host, std::move(cg)};
  }
  // Guaranteed fallback: extremal block colouring of a complete host, backing
  // off one or two vertices when the block arithmetic has no solution at n.
  for (int shrink = 0; shrink <= 2; ++shrink) {
    auto block = block_colouring(n - shrink, q, s, rng);
    if (block.has_value()) return {block->host(), *block};
  }
  throw PreconditionError("distil_instance: no admissible block split near n=" +
                          std::to_string(n));
}

// ---- plain full-enumeration arrowing, used to cross-validate the oracle ----

ArrowVerdict arrows_naive(const Graph& g, const TVector& t) {
  const int q = t.q();
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> colour(m, 1);
  std::uint64_t nodes = 0;
  for (;;) {
    ++nodes;
    std::vector<std::vector<Edge>> layers(q + 1);
    for (int i = 0; i < m; ++i) layers[colour[i]].push_back(edges[i]);
    ColouredGraph cg(g, std::move(layers));
    bool refutes = true;
    const auto nus = nu_vector(cg);
    for (int j = 0; j < q; ++j)
      if (nus[j] > t.t[j] - 1) refutes = false;
    if (refutes) return ArrowVerdict{false, std::move(cg), nodes};
    int i = m - 1;
    while (i >= 0 && colour[i] == q) --i;
    if (i < 0) break;
    ++colour[i];
    std::fill(colour.begin() + i + 1, colour.end(), 1);
  }
  return ArrowVerdict{true, std::nullopt, nodes};
}

// ---------------------------------------------------------------- suites --

SuiteResult ge_suite(const SuiteConfig& cfg) {
  SuiteResult res{"ge", false, cfg.seed, {}};
  SuiteCheck deficiency{"k(D) - |A| equals the number of uncovered vertices", 0, 0, {}};
  SuiteCheck critical{"every D-component is factor-critical", 0, 0, {}};
  SuiteCheck stability{"deleting an A-vertex only shrinks A", 0, 0, {}};
  for (int n = 1; n <= cfg.max_n; ++n) {
    for (int i = 0; i < cfg.per_size; ++i) {
      Rng rng(cfg.seed + static_cast<std::uint64_t>(n) * 100000 + i);
      const Graph g = random_graph(n, rng);
      const auto ge = ge_decompose(g);
      ++deficiency.instances;
      const int uncovered = n - 2 * nu(g);
      if (static_cast<int>(ge.d_components.size() - ge.A.size()) != uncovered)
        note_failure(deficiency, graph_note(g));
      ++critical.instances;
      for (const auto& comp : ge.d_components)
        if (!is_factor_critical(induced(g, comp).graph)) {
          note_failure(critical, graph_note(g));
          break;
        }
      ++stability.instances;
      for (int v : ge.A) {
        const auto sub = remove_vertex(g, v);
        const auto ge2 = ge_decompose(sub.graph);
        std::vector<int> c2, a2, d2;
        for (int x : ge2.C) c2.push_back(sub.to_parent[x]);
        for (int x : ge2.A) a2.push_back(sub.to_parent[x]);
        for (int x : ge2.D) d2.push_back(sub.to_parent[x]);
        const auto expect_a = set_difference(ge.A, {v});
        if (normalize_set(c2) != ge.C || normalize_set(a2) != expect_a ||
            normalize_set(d2) != ge.D) {
          note_failure(stability, graph_note(g));
          break;
        }
      }
    }
  }
  res.checks = {deficiency, critical, stability};
  res.passed = deficiency.failures + critical.failures + stability.failures == 0;
  return res;
}

SuiteResult cl_suite(const SuiteConfig& cfg) {
  SuiteResult res{"cl", false, cfg.seed, {}};
  SuiteCheck upper{"complete graph at the bound arrows", 0, 0, {}};
  SuiteCheck lower{"one vertex below, the extremal colouring refutes", 0, 0, {}};
  const ArrowGuard guard{(cfg.max_bound * (cfg.max_bound - 1)) / 2};
  std::vector<int> t(cfg.q, 1);
  const std::function<void(int)> sweep = [&](int j) {
    if (j == cfg.q) {
      const TVector tv(t);
      const int bound = tv.tmax() + tv.lambda() + 1;
      if (bound > cfg.max_bound) return;
      ++upper.instances;
      if (!arrows(complete_graph(bound), tv, guard).arrows)
        note_failure(upper, {{"t", t}, {"bound", bound}});
      ++lower.instances;
      const auto below = arrows(complete_graph(bound - 1), tv, guard);
      const auto extremal = cl_extremal(tv);
      bool ok = !below.arrows && below.witness.has_value();
      ok = ok && extremal.graph.vertex_count() == bound - 1;
      const auto nus = nu_vector(extremal.colouring);
      for (int k = 0; k < cfg.q; ++k) ok = ok && nus[k] <= t[k] - 1;
      if (!ok) note_failure(lower, {{"t", t}, {"bound", bound}});
      return;
    }
    for (int x = 1; x <= cfg.max_bound; ++x) {
      t[j] = x;
      sweep(j + 1);
    }
  };
  sweep(0);
  res.checks = {upper, lower};
  res.passed = upper.failures + lower.failures == 0;
  return res;
}

SuiteResult sharp_suite(const SuiteConfig& cfg) {
  SuiteResult res{"sharp", false, cfg.seed, {}};
  SuiteCheck check{"padded extremal colouring: connector, order, per-colour slack", 0, 0, {}};
  for (int q = 1; q <= 2; ++q) {
    std::vector<int> t(q, 1);
    const std::function<void(int)> sweep = [&](int j) {
      if (j == q) {
        for (int s = 1; s <= 4; ++s) {
          const TVector tv(t);
          ++check.instances;
          const auto built = sharp_construction(tv, s);
          const int want = tv.tmax() + tv.lambda() + s - 1;
          bool ok = built.graph.vertex_count() == want;
          ok = ok && is_s_connector(built.graph, s).verdict;
          const auto nus = nu_vector(built.colouring);
          for (int k = 0; k < q; ++k) ok = ok && nus[k] <= t[k] - 1;
          if (!ok) note_failure(check, {{"t", t}, {"s", s}});
        }
        return;
      }
      for (int x = 1; x <= 3; ++x) {
        t[j] = x;
        sweep(j + 1);
      }
    };
    sweep(0);
  }
  res.checks = {check};
  res.passed = check.failures == 0;
  return res;
}

SuiteResult saturate_suite(const SuiteConfig& cfg) {
  SuiteResult res{"saturate", false, cfg.seed, {}};
  SuiteCheck check{"saturation keeps nu, exhausts host C-D edges, and polarises C", 0, 0, {}};
  for (int i = 0; i < cfg.trials; ++i) {
    Rng rng(cfg.seed + i);
    std::uniform_int_distribution<int> np(4, 12), sp(1, 3);
    const int n = np(rng);
    const int s = std::min(sp(rng), n / 2);
    const Graph host = random_connector(n, s, rng);
    std::uniform_real_distribution<double> keep(0.2, 0.8);
    const double rho_keep = keep(rng);
    std::bernoulli_distribution coin(rho_keep);
    std::vector<Edge> sub_edges;
    for (const auto& e : host.edges())
      if (coin(rng)) sub_edges.push_back(e);
    const Graph g(n, std::move(sub_edges));

    ++check.instances;
    const Graph sat = cd_saturate(g, host, cfg.checked);
    bool ok = nu(sat) == nu(g);
    for (const auto& [u, v] : g.edges()) ok = ok && sat.has_edge(u, v);
    for (const auto& [u, v] : sat.edges()) ok = ok && host.has_edge(u, v);
    const auto ge = ge_decompose(sat);
    for (const auto& [u, v] : host.edges()) {
      const bool cd = (set_contains(ge.C, u) && set_contains(ge.D, v)) ||
                      (set_contains(ge.C, v) && set_contains(ge.D, u));
      ok = ok && !cd;
    }
    const int c_size = static_cast<int>(ge.C.size());
    ok = ok && (c_size < s || c_size > n - 2 * s);
    if (!ok) note_failure(check, {{"n", n}, {"s", s}, {"trial", i}});
  }
  res.checks = {check};
  res.passed = check.failures == 0;
  return res;
}

SuiteResult isolate_suite(const SuiteConfig& cfg) {
  SuiteResult res{"isolate", false, cfg.seed, {}};
  SuiteCheck check{"isolation empties C, keeps A, and costs exactly |C|/2", 0, 0, {}};
  for (int i = 0; i < cfg.trials; ++i) {
    Rng rng(cfg.seed + i);
    std::uniform_int_distribution<int> np(1, 12);
    const Graph g = random_graph(np(rng), rng);
    ++check.instances;
    const auto ge = ge_decompose(g);
    const Graph out = c_isolate(g, cfg.checked);
    const auto after = ge_decompose(out);
    bool ok = after.C.empty() && after.A == ge.A;
    ok = ok && ge.C.size() % 2 == 0;
    ok = ok && nu(out) == nu(g) - static_cast<int>(ge.C.size()) / 2;
    if (!ok) note_failure(check, graph_note(g));
  }
  res.checks = {check};
  res.passed = check.failures == 0;
  return res;
}

SuiteResult sigma_suite(const SuiteConfig& cfg) {
  SuiteResult res{"sigma", false, cfg.seed, {}};
  SuiteCheck contains_a{"the chosen set contains every colour's A part", 0, 0, {}};
  SuiteCheck residual{"residual D-component pieces stay factor-critical", 0, 0, {}};
  SuiteCheck hyperforest{"uncolouring the chosen set decycles the D-components", 0, 0, {}};
  SuiteCheck maximal{"single-vertex extensions strictly lose", 0, 0, {}};
  for (int i = 0; i < cfg.trials; ++i) {
    Rng rng(cfg.seed + i);
    std::uniform_int_distribution<int> np(3, 12), qp(1, 3);
    const int n = np(rng);
    const int q = qp(rng);
    const auto cg = random_ad_pure(n, q, rng);
    const SigmaContext ctx(cg);
    const auto T = sigma_maximal(ctx);

    ++contains_a.instances;
    bool ok = true;
    for (int j = 1; j <= q; ++j)
      ok = ok && set_intersection(ctx.a_set(j), T) == ctx.a_set(j);
    if (!ok) note_failure(contains_a, {{"n", n}, {"q", q}, {"trial", i}});

    ++residual.instances;
    ok = true;
    for (const auto& comp : ctx.components()) {
      std::vector<int> rest = set_difference(comp.vertices, T);
      const auto sub = induced(cg.layer_graph(comp.colour), rest);
      for (const auto& piece : connected_components(sub.graph))
        ok = ok && is_factor_critical(induced(sub.graph, piece).graph);
    }
    if (!ok) note_failure(residual, {{"n", n}, {"q", q}, {"trial", i}});

    ++hyperforest.instances;
    if (!is_hyperforest(k_hypergraph(uncolour(cg, T))))
      note_failure(hyperforest, {{"n", n}, {"q", q}, {"trial", i}});

    ++maximal.instances;
    const int base = sigma_eval(ctx, T).sigma;
    ok = base >= 0;
    for (int v = 0; v < n && ok; ++v) {
      if (set_contains(T, v)) continue;
      auto ext = T;
      ext.push_back(v);
      ok = sigma_eval(ctx, ext).sigma < base;
    }
    if (!ok) note_failure(maximal, {{"n", n}, {"q", q}, {"trial", i}});
  }
  res.checks = {contains_a, residual, hyperforest, maximal};
  res.passed = contains_a.failures + residual.failures + hyperforest.failures +
                   maximal.failures ==
               0;
  return res;
}

SuiteResult decycle_suite(const SuiteConfig& cfg) {
  SuiteResult res{"decycle", false, cfg.seed, {}};
  SuiteCheck check{"decycling: per-colour drop, sum drop >= |T|, proper, pure, acyclic", 0, 0, {}};
  for (int i = 0; i < cfg.trials; ++i) {
    Rng rng(cfg.seed + 77777 + i);
    std::uniform_int_distribution<int> np(3, 12), qp(1, 3);
    const int n = np(rng);
    const int q = qp(rng);
    const auto cg = random_ad_pure(n, q, rng);
    ++check.instances;
    const auto dec = decycle(cg, cfg.checked);
    const auto before = nu_vector(cg);
    const auto after = nu_vector(dec.result);
    bool ok = true;
    for (int j = 0; j < q; ++j) ok = ok && after[j] <= before[j];
    ok = ok && std::accumulate(after.begin(), after.end(), 0) <=
                   std::accumulate(before.begin(), before.end(), 0) -
                       static_cast<int>(dec.T.size());
    ok = ok && dec.result.is_s_proper(dec.T);
    for (int j = 1; j <= q; ++j) {
      const auto ge = ge_decompose(dec.result.layer_graph(j));
      ok = ok && ge.C.empty() && ge.A.empty();
    }
    ok = ok && is_hyperforest(component_hypergraph(dec.result));
    if (!ok) note_failure(check, {{"n", n}, {"q", q}, {"trial", i}});
  }
  res.checks = {check};
  res.passed = check.failures == 0;
  return res;
}

SuiteResult distil_suite(const SuiteConfig& cfg) {
  SuiteResult res{"distil", false, cfg.seed, {}};
  SuiteCheck bounds{"distil: kappa bound, dominant colour, sum drop", 0, 0, {}};
  SuiteCheck core{"distil core is a fully-coloured acyclic colouring", 0, 0, {}};
  for (int i = 0; i < cfg.trials; ++i) {
    Rng rng(cfg.seed + 424242 + i);
    std::uniform_int_distribution<int> qp(2, 3), sp(1, 2);
    const int q = qp(rng);
    const int s = sp(rng);
    std::uniform_int_distribution<int> np(s == 1 ? 6 : 10, 12);
    const int n = np(rng);
    const auto [host, cg] = distil_instance(n, q, s, rng);

    ++bounds.instances;
    const auto r = distil(cg, s, cfg.checked);
    const auto nu_in = nu_vector(cg);
    const auto nu_out = nu_vector(r.result);
    bool ok = 2 * r.kappa >= n - static_cast<int>(r.T.size()) - (q + 13) * (s - 1) - 1;
    for (int j = 0; j < q; ++j) ok = ok && nu_out[j] <= nu_in[j];
    ok = ok && nu_out[r.eta - 1] >= r.kappa;
    ok = ok && std::accumulate(nu_in.begin(), nu_in.end(), 0) >=
                   std::accumulate(nu_out.begin(), nu_out.end(), 0) +
                       static_cast<int>(r.T.size());
    if (!ok) note_failure(bounds, {{"n", n}, {"q", q}, {"s", s}, {"trial", i}});

    ++core.instances;
    const auto dc = distil_core(cg, r);
    if (!dc.colouring.fully_coloured() ||
        !is_hyperforest(component_hypergraph(dc.colouring)))
      note_failure(core, {{"n", n}, {"q", q}, {"s", s}, {"trial", i}});
  }
  res.checks = {bounds, core};
  res.passed = bounds.failures + core.failures == 0;
  return res;
}

SuiteResult smallcomps_suite(const SuiteConfig& cfg) {
  SuiteResult res{"smallcomps", false, cfg.seed, {}};
  SuiteCheck check{"pipeline cores: dominant size bound, unique large component, bridges", 0, 0, {}};
  const int per_s = std::max(1, cfg.trials / 4);
  for (int s = 1; s <= 3; ++s) {
    for (int i = 0; i < per_s; ++i) {
      Rng rng(cfg.seed + 900000 + s * 10000 + i);
      const int n_min = s == 3 ? 16 : (s == 2 ? 10 : 6);
      std::uniform_int_distribution<int> np(n_min, 20), qp(2, 3);
      const int n = np(rng);
      const int q = s == 3 ? 2 : qp(rng);
      const auto [host, cg] = distil_instance(n, q, s, rng);
      ++check.instances;
      const auto r = distil(cg, s, cfg.checked);
      const auto dc = distil_core(cg, r);
      if (dc.colouring.vertex_count() == 0) continue;
      const auto rep = check_small_components(dc.colouring, s);
      if (!rep.all_ok())
        note_failure(check, {{"n", n},
                             {"q", q},
                             {"s", s},
                             {"trial", i},
                             {"outside", rep.outside},
                             {"oversized", rep.oversized_components}});
    }
  }
  res.checks = {check};
  res.passed = check.failures == 0;
  return res;
}

SuiteResult discussion_suite(const SuiteConfig& cfg) {
  SuiteResult res{"discussion", false, cfg.seed, {}};
  SuiteCheck triangle{"the triangle never beats the pigeonhole bound", 1, 0, {}};
  SuiteCheck bipartite{"bipartite graphs: rho = 1 and cover colourings refute", 0, 0, {}};
  SuiteCheck odd_cycles{"odd cycles beat the pigeonhole bound", 0, 0, {}};

  const auto r3 = rho(complete_graph(3), 2);
  if (!(r3.num == 1 && r3.den == 1)) note_failure(triangle, {{"num", r3.num}, {"den", r3.den}});

  for (const Graph& g : {path_graph(4), cycle_graph(6)}) {
    ++bipartite.instances;
    const auto r = rho(g, 2);
    bool ok = r.num == 1 && r.den == 1;
    // Every in-box target with enough pigeonhole budget must admit a cover
    // refutation.
    const int v = nu(g);
    for (int t1 = 1; t1 <= v + 1 && ok; ++t1)
      for (int t2 = 1; t2 <= v + 1 && ok; ++t2) {
        const TVector tv({t1, t2});
        if (tv.lambda() < v) continue;
        const auto refutation = konig_colouring(g, tv);
        const auto nus = nu_vector(refutation);
        ok = nus[0] <= t1 - 1 && nus[1] <= t2 - 1;
      }
    if (!ok) note_failure(bipartite, {{"n", g.vertex_count()}});
  }

  // C5 with targets (2,2); C7 with (2,3); the C5 ratio is exactly 3/2.
  ++odd_cycles.instances;
  if (!arrows(cycle_graph(5), TVector({2, 2})).arrows) note_failure(odd_cycles, {{"ell", 5}});
  ++odd_cycles.instances;
  if (!arrows(cycle_graph(7), TVector({2, 3})).arrows) note_failure(odd_cycles, {{"ell", 7}});
  ++odd_cycles.instances;
  const auto r5 = rho(cycle_graph(5), 2);
  if (!(r5.num == 3 && r5.den == 2)) note_failure(odd_cycles, {{"num", r5.num}, {"den", r5.den}});

  res.checks = {triangle, bipartite, odd_cycles};
  res.passed = triangle.failures + bipartite.failures + odd_cycles.failures == 0;
  return res;
}

SuiteResult theorem_suite(const SuiteConfig& cfg) {
  SuiteResult res{"theorem", false, cfg.seed, {}};
  const auto report =
      verify_theorem_main(TVector({1, 1}), 2, cfg.theorem_trials, cfg.seed);
  SuiteCheck check{"sampled adversaries always concede at the bound order", cfg.theorem_trials,
                   report.at("failures").get<int>(), report};
  res.checks = {check};
  res.passed = report.at("verdict").get<bool>();
  return res;
}

SuiteResult oracle_suite(const SuiteConfig& cfg) {
  SuiteResult res{"oracle", false, cfg.seed, {}};
  SuiteCheck agree{"pruned search agrees with plain enumeration", 0, 0, {}};
  const int trials = std::min(cfg.trials, 100);
  for (int i = 0; i < trials; ++i) {
    Rng rng(cfg.seed + 31337 + i);
    std::uniform_int_distribution<int> np(3, 10), mp(0, 12), tp(1, 4);
    const int n = np(rng);
    Graph base = random_graph(n, rng);
    auto edges = base.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(std::min<std::size_t>(edges.size(), mp(rng)));
    const Graph g(n, std::move(edges));
    const TVector t({tp(rng), tp(rng)});
    ++agree.instances;
    const auto fast = arrows(g, t);
    const auto slow = arrows_naive(g, t);
    bool ok = fast.arrows == slow.arrows;
    if (!fast.arrows) {
      const auto nus = nu_vector(*fast.witness);
      for (int j = 0; j < 2; ++j) ok = ok && nus[j] <= t.t[j] - 1;
    }
    if (!ok) note_failure(agree, {{"n", n}, {"m", g.edge_count()}, {"t", t.t}});
  }
  res.checks = {agree};
  res.passed = agree.failures == 0;
  return res;
}

SuiteResult connector_suite(const SuiteConfig& cfg) {
  SuiteResult res{"connector", false, cfg.seed, {}};
  SuiteCheck equiv{"connector test matches the bipartite independence number", 0, 0, {}};
  SuiteCheck monotone{"connectivity is monotone in s", 0, 0, {}};
  SuiteCheck crossing{"disjoint (s+l)-sets always carry an (l+1)-matching", 0, 0, {}};
  for (int i = 0; i < cfg.trials; ++i) {
    Rng rng(cfg.seed + 555 + i);
    std::uniform_int_distribution<int> np(2, 12);
    const int n = np(rng);
    const Graph g = random_graph(n, rng);
    const int astar = alpha_star(g);
    ++equiv.instances;
    ++monotone.instances;
    bool ok = true;
    bool prev = false;
    for (int s = 1; s <= n / 2 + 1; ++s) {
      const auto cert = is_s_connector(g, s, ConnectorGuard{24, 24});
      ok = ok && (cert.verdict == (astar <= s - 1));
      if (!cert.verdict && cert.witness.has_value()) {
        const auto& [x, y] = *cert.witness;
        ok = ok && static_cast<int>(x.size()) == s && static_cast<int>(y.size()) == s;
        ok = ok && set_intersection(x, y).empty();
        ok = ok && nu_between(g, x, y) == 0;
      }
      if (prev && !cert.verdict) note_failure(monotone, {{"n", n}, {"s", s}});
      prev = cert.verdict;
    }
    if (!ok) note_failure(equiv, {{"n", n}, {"alpha_star", astar}});
  }
  for (int i = 0; i < cfg.trials; ++i) {
    Rng rng(cfg.seed + 777000 + i);
    std::uniform_int_distribution<int> np(8, 14), sp(1, 2), lp(0, 2);
    const int n = np(rng);
    const int s = sp(rng);
    const int ell = lp(rng);
    if (2 * (s + ell) > n) continue;
    const Graph g = random_connector(n, s, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> x(perm.begin(), perm.begin() + s + ell);
    std::vector<int> y(perm.begin() + s + ell, perm.begin() + 2 * (s + ell));
    ++crossing.instances;
    if (nu_between(g, x, y) < ell + 1)
      note_failure(crossing, {{"n", n}, {"s", s}, {"l", ell}});
  }
  res.checks = {equiv, monotone, crossing};
  res.passed = equiv.failures + monotone.failures + crossing.failures == 0;
  return res;
}

}  // namespace

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"claim", c.claim},
                           {"instances", c.instances},
                           {"failures", c.failures},
                           {"detail", c.detail}});
  return {{"suite", name}, {"passed", passed}, {"seed", seed}, {"checks", checks_json}};
}

std::vector<std::string> suite_names() {
  return {"ge",     "cl",         "sharp",   "saturate", "isolate", "sigma", "decycle",
          "distil", "smallcomps", "discussion", "theorem", "oracle", "connector"};
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "ge") return ge_suite(config);
  if (name == "cl") return cl_suite(config);
  if (name == "sharp") return sharp_suite(config);
  if (name == "saturate") return saturate_suite(config);
  if (name == "isolate") return isolate_suite(config);
  if (name == "sigma") return sigma_suite(config);
  if (name == "decycle") return decycle_suite(config);
  if (name == "distil") return distil_suite(config);
  if (name == "smallcomps") return smallcomps_suite(config);
  if (name == "discussion") return discussion_suite(config);
  if (name == "theorem") return theorem_suite(config);
  if (name == "oracle") return oracle_suite(config);
  if (name == "connector") return connector_suite(config);
  throw PreconditionError("unknown suite: " + name);
}

}  // namespace matchram
