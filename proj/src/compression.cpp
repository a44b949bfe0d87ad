#include "matchram/compression.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "matchram/connector.hpp"
#include "matchram/errors.hpp"
#include "matchram/matching.hpp"

namespace matchram {

namespace {

void emit(Trace* trace, std::string stage, int colour, nlohmann::json detail) {
  if (trace) trace->push_back(TraceEvent{std::move(stage), colour, std::move(detail)});
}

std::vector<char> as_mask(const std::vector<int>& set, int n) {
  std::vector<char> mask(n, 0);
  for (int v : set) mask[v] = 1;
  return mask;
}

}  // namespace

Graph cd_saturate(const Graph& g, const Graph& host, bool checked, Trace* trace, int colour) {
  require(g.vertex_count() == host.vertex_count(),
          "cd_saturate: graph and host orders differ");
  for (const auto& [u, v] : g.edges())
    require(host.has_edge(u, v), "cd_saturate: graph is not a subgraph of the host");

  const int nu_before = nu(g);
  const int max_steps = host.edge_count() - g.edge_count();
  Graph current = g;
  int steps = 0;
  for (;;) {
    const auto ge = ge_decompose(current);
    const auto in_c = as_mask(ge.C, current.vertex_count());
    const auto in_d = as_mask(ge.D, current.vertex_count());
    Edge found{-1, -1};
    for (const auto& [u, v] : host.edges()) {
      if ((in_c[u] && in_d[v]) || (in_c[v] && in_d[u])) {
        found = {u, v};
        break;  // host edges are sorted, so this is the lexicographic minimum
      }
    }
    if (found.first < 0) break;
    current = with_edge(current, found.first, found.second);
    ++steps;
    emit(trace, "cd_saturate_add", colour, {{"edge", {found.first, found.second}}});
    contract(steps <= max_steps, "cd_saturate: exceeded the termination bound");
    if (checked)
      contract(nu(current) == nu_before,
               "cd_saturate: adding a C-D edge changed the matching number");
  }
  return current;
}

Graph c_isolate(const Graph& g, bool checked, Trace* trace, int colour) {
  const auto ge = ge_decompose(g);
  Graph result = without_edges_at(g, ge.C);
  emit(trace, "c_isolate", colour,
       {{"c", ge.C}, {"removed", g.edge_count() - result.edge_count()}});
  if (checked) {
    contract(ge.C.size() % 2 == 0, "c_isolate: C part has odd size");
    const auto after = ge_decompose(result);
    contract(after.C.empty(), "c_isolate: C part not empty afterwards");
    contract(after.A == ge.A, "c_isolate: A part changed");
    contract(nu(result) == nu(g) - static_cast<int>(ge.C.size()) / 2,
             "c_isolate: matching number did not drop by |C|/2");
  }
  return result;
}

DecycleResult decycle(const ColouredGraph& cg, bool checked, const SigmaGuard& sigma_guard) {
  require(cg.fully_coloured(), "decycle: input must be fully coloured");
  for (int j = 1; j <= cg.colour_count(); ++j)
    require(ge_decompose(cg.layer_graph(j)).C.empty(),
            "decycle: colour " + std::to_string(j) + " has a non-empty C part");

  const SigmaContext ctx(cg);
  const auto T = sigma_maximal(ctx, sigma_guard);
  ColouredGraph out = uncolour(cg, T);

  if (checked) {
    const auto before = nu_vector(cg);
    const auto after = nu_vector(out);
    for (int j = 0; j < cg.colour_count(); ++j)
      contract(after[j] <= before[j], "decycle: a colour's matching number grew");
    const int sum_before = std::accumulate(before.begin(), before.end(), 0);
    const int sum_after = std::accumulate(after.begin(), after.end(), 0);
    const auto sv = sigma_eval(ctx, T);
    contract(sv.sigma >= 0, "decycle: chosen set has negative sigma");
    contract(sum_after == sum_before - sv.r,
             "decycle: matching-number accounting identity failed");
    contract(out.is_s_proper(T), "decycle: output is not T-proper");
    for (int j = 1; j <= cg.colour_count(); ++j) {
      const auto ge = ge_decompose(out.layer_graph(j));
      contract(ge.C.empty() && ge.A.empty(), "decycle: output colour not D-pure");
    }
    contract(is_hyperforest(component_hypergraph(out)),
             "decycle: colour components still carry a cycle");
    contract(is_hyperforest(k_hypergraph(out)),
             "decycle: D-components still carry a cycle");
  }
  return DecycleResult{std::move(out), T};
}

namespace {

// Largest hyperedge; ties towards the earliest (edges are produced colour by
// colour, components ordered by smallest vertex).
const Hyperedge* largest_edge(const ComponentHypergraph& h) {
  const Hyperedge* best = nullptr;
  for (const auto& e : h.edges)
    if (!best || e.vertices.size() > best->vertices.size()) best = &e;
  return best;
}

}  // namespace

DistilResult distil(const ColouredGraph& cg, int s, bool checked,
                    const SigmaGuard& sigma_guard) {
  require(s >= 1, "distil: s must be positive");
  require(cg.fully_coloured(), "distil: colouring must be fully coloured");
  const Graph& host = cg.host();
  const int n = host.vertex_count();
  const int q = cg.colour_count();
  const auto nu_in = nu_vector(cg);
  for (int j = 1; j <= q; ++j)
    require(2 * nu_in[j - 1] <= n - 2 * s,
            "distil: colour " + std::to_string(j) +
                " has matching number above |V|/2 - s");
  if (checked)
    require(is_s_connector(host, s, ConnectorGuard{n, std::max(s, 5)}).verdict,
            "distil: host is not an s-connector");

  Trace trace;
  std::vector<int> c_star;
  std::vector<std::vector<Edge>> compressed(q + 1);
  for (int j = 1; j <= q; ++j) {
    const Graph saturated = cd_saturate(cg.layer_graph(j), host, checked, &trace, j);
    const auto ge = ge_decompose(saturated);
    if (checked)
      contract(static_cast<int>(ge.C.size()) < s,
               "distil: saturated colour kept a large C part");
    c_star = set_union(c_star, ge.C);
    compressed[j] = c_isolate(saturated, checked, &trace, j).edges();
  }

  // The compressed layers form a colouring of their own union.
  std::vector<Edge> union_edges;
  for (int j = 1; j <= q; ++j)
    union_edges.insert(union_edges.end(), compressed[j].begin(), compressed[j].end());
  std::sort(union_edges.begin(), union_edges.end());
  union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());
  const ColouredGraph compact(Graph(n, union_edges), std::move(compressed));

  auto dec = decycle(compact, checked, sigma_guard);
  const ColouredGraph& out = dec.result;
  const std::vector<int>& T = dec.T;
  emit(&trace, "decycle", 0, {{"T", T}});

  // Locate the dominant component among the remaining core vertices.
  std::vector<int> core_vertices;
  for (int v = 0; v < n; ++v)
    if (!set_contains(T, v) && !set_contains(c_star, v)) core_vertices.push_back(v);

  if (checked) {
    // Within the core no host edge was lost: deletions happened only at C*
    // (isolation) and T (uncolouring).
    const auto host_core = induced(host, core_vertices).graph;
    const auto compact_core = induced(out.host(), core_vertices).graph;
    contract(host_core == compact_core, "distil: core lost a host edge");
  }

  const auto core = induced(out.host(), core_vertices);
  std::vector<std::vector<Edge>> core_layers(q + 1);
  for (int j = 1; j <= q; ++j)
    for (const auto& [u, v] : out.layer(j))
      if (core.from_parent[u] >= 0 && core.from_parent[v] >= 0)
        core_layers[j].emplace_back(core.from_parent[u], core.from_parent[v]);
  const ColouredGraph core_colouring(core.graph, std::move(core_layers));

  const auto comps = component_hypergraph(core_colouring);
  const Hyperedge* largest = largest_edge(comps);
  int eta = 1;
  int kappa = 0;
  std::vector<int> k_star, k_prime;
  if (largest != nullptr) {
    eta = largest->colour;
    for (int v : largest->vertices) k_star.push_back(core.to_parent[v]);
    std::sort(k_star.begin(), k_star.end());
  } else if (!core_vertices.empty()) {
    // Every colour component in the core is a single vertex; any of them
    // serves as the (trivial) dominant component.
    k_star = {core_vertices.front()};
  }

  if (!k_star.empty()) {
    const Graph eta_layer = out.layer_graph(eta);
    for (const auto& comp : connected_components(eta_layer))
      if (set_contains(comp, k_star.front())) {
        k_prime = comp;
        break;
      }
    contract(set_intersection(k_prime, k_star) == k_star,
             "distil: dominant component split across components");
    contract(k_prime.size() % 2 == 1, "distil: dominant component has even order");
    kappa = (static_cast<int>(k_prime.size()) - 1) / 2;
  }
  emit(&trace, "dominant", eta, {{"k_star", k_star}, {"k_prime", k_prime}, {"kappa", kappa}});
  emit(&trace, "result", 0, {{"eta", eta}, {"kappa", kappa}, {"T", T}, {"c_star", c_star}});

  if (checked) {
    if (!k_prime.empty()) {
      const auto sub = induced(out.layer_graph(eta), k_prime);
      contract(is_factor_critical(sub.graph), "distil: dominant component not factor-critical");
      contract(nu(sub.graph) == kappa, "distil: kappa mismatch");
    }
    contract(2 * kappa >= n - static_cast<int>(T.size()) - (q + 13) * (s - 1) - 1,
             "distil: kappa below the size bound");
    const auto nu_out = nu_vector(out);
    for (int j = 1; j <= q; ++j)
      contract(nu_out[j - 1] <= nu_in[j - 1], "distil: a colour's matching number grew");
    contract(nu_out[eta - 1] >= kappa, "distil: dominant colour below kappa");
    const int sum_in = std::accumulate(nu_in.begin(), nu_in.end(), 0);
    const int sum_out = std::accumulate(nu_out.begin(), nu_out.end(), 0);
    contract(sum_in >= sum_out + static_cast<int>(T.size()),
             "distil: matching-number sum dropped by less than |T|");
    contract(sum_out >= kappa, "distil: matching-number sum below kappa");
  }
  return DistilResult{std::move(dec.result), std::move(dec.T), std::move(c_star),
                      eta,  kappa,           std::move(k_star),
                      std::move(k_prime),    std::move(trace)};
}

DistilCore distil_core(const ColouredGraph& cg, const DistilResult& r) {
  const int n = cg.host().vertex_count();
  std::vector<int> core_vertices;
  for (int v = 0; v < n; ++v)
    if (!set_contains(r.T, v) && !set_contains(r.c_star, v)) core_vertices.push_back(v);
  const auto core = induced(cg.host(), core_vertices);
  std::vector<std::vector<Edge>> layers(cg.colour_count() + 1);
  for (int j = 1; j <= cg.colour_count(); ++j)
    for (const auto& [u, v] : r.result.layer(j))
      if (core.from_parent[u] >= 0 && core.from_parent[v] >= 0)
        layers[j].emplace_back(core.from_parent[u], core.from_parent[v]);
  return DistilCore{ColouredGraph(core.graph, std::move(layers)), core.to_parent};
}

SmallComponentsReport check_small_components(const ColouredGraph& cg, int s) {
  require(s >= 1, "check_small_components: s must be positive");
  require(cg.fully_coloured(), "check_small_components: colouring must be fully coloured");
  const auto comps = component_hypergraph(cg);
  require(is_hyperforest(comps), "check_small_components: colouring is not acyclic");
  const int n = cg.vertex_count();
  require(is_s_connector(cg.host(), s, ConnectorGuard{n, std::max(s, 5)}).verdict,
          "check_small_components: host is not an s-connector");

  SmallComponentsReport rep;
  rep.s = s;
  if (const Hyperedge* k = largest_edge(comps)) {
    rep.largest = k->vertices;
  } else if (n >= 1) {
    rep.largest = {0};  // all layer components are single vertices
  }
  rep.outside = n - static_cast<int>(rep.largest.size());
  rep.size_bound_ok = rep.outside <= 13 * (s - 1);

  for (const auto& e : comps.edges)
    if (static_cast<int>(e.vertices.size()) > s + 1) ++rep.oversized_components;
  rep.unique_large_ok = rep.oversized_components <= 1;

  rep.pairwise_ok = true;
  for (std::size_t i = 0; i < comps.edges.size() && rep.pairwise_ok; ++i)
    for (std::size_t j = i + 1; j < comps.edges.size(); ++j) {
      const auto& a = comps.edges[i].vertices;
      const auto& b = comps.edges[j].vertices;
      if (set_intersection(a, b).size() > 1 || nu_between(cg.host(), a, b) > 1) {
        rep.pairwise_ok = false;
        break;
      }
    }
  return rep;
}

nlohmann::json trace_to_json(const Trace& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& ev : trace)
    out.push_back({{"stage", ev.stage}, {"colour", ev.colour}, {"detail", ev.detail}});
  return out;
}

std::string trace_to_jsonl(const Trace& trace) {
  std::ostringstream out;
  for (const auto& ev : trace)
    out << nlohmann::json{{"stage", ev.stage}, {"colour", ev.colour}, {"detail", ev.detail}}
               .dump()
        << '\n';
  return out.str();
}

}  // namespace matchram
