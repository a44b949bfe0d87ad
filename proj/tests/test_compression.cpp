#include <doctest.h>

#include <numeric>
#include <optional>

#include "matchram/compression.hpp"
#include "matchram/connector.hpp"
#include "matchram/errors.hpp"
#include "matchram/gallai_edmonds.hpp"
#include "matchram/matching.hpp"
#include "oracles.hpp"

using namespace matchram;

namespace {

// 4-cycle on {0..3} plus a 3-path on {4,5,6}
Graph c4_plus_p3() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}});
}

}  // namespace

TEST_CASE("saturation is the identity when the graph already fills its host") {
  const Graph g = cycle_graph(5);
  CHECK(cd_saturate(g, g) == g);
}

TEST_CASE("saturation is the identity when C is empty") {
  CHECK(cd_saturate(cycle_graph(5), complete_graph(5)) == cycle_graph(5));
}

TEST_CASE("saturation is the identity when D is empty") {
  // C4 plus an extra edge has a perfect matching and D = empty
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}});
  CHECK(cd_saturate(g, complete_graph(6)) == g);
}

TEST_CASE("saturation adds host edges until C and D are disconnected") {
  const Graph g = c4_plus_p3();
  const Graph host = complete_graph(7);
  REQUIRE(ge_decompose(g).C == std::vector<int>{0, 1, 2, 3});
  Trace trace;
  const Graph sat = cd_saturate(g, host, true, &trace, 1);
  CHECK(nu(sat) == nu(g));
  for (const auto& [u, v] : g.edges()) CHECK(sat.has_edge(u, v));
  const auto ge = ge_decompose(sat);
  for (const auto& [u, v] : host.edges()) {
    const bool cd = (set_contains(ge.C, u) && set_contains(ge.D, v)) ||
                    (set_contains(ge.C, v) && set_contains(ge.D, u));
    CHECK(!cd);
  }
  // K7 is a 1-connector: C is empty or nearly everything
  const int c = static_cast<int>(ge.C.size());
  CHECK((c < 1 || c > 5));
  CHECK(!trace.empty());
  CHECK(trace.front().stage == "cd_saturate_add");
}

TEST_CASE("saturation rejects non-subgraphs") {
  CHECK_THROWS_AS(cd_saturate(complete_graph(4), cycle_graph(4)), PreconditionError);
}

TEST_CASE("isolation of a graph without C is the identity") {
  CHECK(c_isolate(cycle_graph(5)) == cycle_graph(5));
}

TEST_CASE("isolation empties a perfectly matched cycle") {
  const Graph out = c_isolate(cycle_graph(4));
  CHECK(out.edge_count() == 0);
  CHECK(out.vertex_count() == 4);
}

TEST_CASE("isolation removes the cycle but keeps the path") {
  const Graph out = c_isolate(c4_plus_p3());
  CHECK(out.edges() == std::vector<Edge>{{4, 5}, {5, 6}});
  CHECK(ge_decompose(out).A == std::vector<int>{5});
}

TEST_CASE("decycling requires a fully coloured input with empty C parts") {
  const Graph host = cycle_graph(4);
  CHECK_THROWS_AS(decycle(ColouredGraph(host, {{}, host.edges()})), PreconditionError);
  const Graph p = path_graph(3);
  CHECK_THROWS_AS(decycle(ColouredGraph(p, {{{0, 1}}, {{1, 2}}})), PreconditionError);
}

TEST_CASE("decycling a factor-critical cycle changes nothing") {
  const Graph host = cycle_graph(5);
  const auto dec = decycle(ColouredGraph(host, {{}, host.edges()}));
  CHECK(dec.T.empty());
  CHECK(dec.result.layer(1) == host.edges());
}

TEST_CASE("decycling a 3-path removes the centre's edges") {
  const Graph host = path_graph(3);
  const ColouredGraph cg(host, {{}, host.edges()});
  const auto dec = decycle(cg);
  CHECK(dec.T == std::vector<int>{1});
  CHECK(dec.result.layer(1).empty());
  CHECK(dec.result.layer(0) == host.edges());
  CHECK(nu_sigma(cg) - nu_sigma(dec.result) >= 1);
}

TEST_CASE("decycling kills the shared-pair cycle") {
  const Graph host(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const ColouredGraph cg(host,
                         {{}, {{0, 1}, {0, 2}, {1, 2}}, {{1, 2}, {1, 3}, {2, 3}}});
  REQUIRE(!is_hyperforest(k_hypergraph(cg)));
  const auto dec = decycle(cg);
  CHECK(is_hyperforest(k_hypergraph(dec.result)));
  CHECK(is_hyperforest(component_hypergraph(dec.result)));
  CHECK(dec.result.is_s_proper(dec.T));
}

TEST_CASE("distil rejects a colour with too many matched edges") {
  const Graph host = complete_graph(5);
  const ColouredGraph cg(host, {{}, host.edges()});
  CHECK_THROWS_AS(distil(cg, 1), PreconditionError);
}

TEST_CASE("distil on the padded extremal colouring of K7") {
  const auto built = cl_extremal(TVector({3, 3}));
  REQUIRE(built.graph == complete_graph(7));
  REQUIRE(nu_vector(built.colouring) == std::vector<int>{2, 2});
  const auto r = distil(built.colouring, 1);
  CHECK(r.eta >= 1);
  CHECK(r.eta <= 2);
  CHECK(2 * r.kappa >= 7 - static_cast<int>(r.T.size()) - 15 * 0 - 1);
  const auto nus = nu_vector(r.result);
  CHECK(nus[r.eta - 1] >= r.kappa);
  CHECK(nu_sigma(built.colouring) >= nu_sigma(r.result) + static_cast<int>(r.T.size()));
}

TEST_CASE("distil invariants on randomized valid two-colourings") {
  // Random colourings of dense hosts rarely keep both colours under
  // |V|/2 - s, so the instances mix permuted block colourings of K12 with
  // rejection-sampled cover-guided colourings of verified 2-connectors.
  int done = 0;
  for (int i = 0; i < 60; ++i) {
    std::mt19937_64 rng(24000 + i);
    const int n = 12;
    const int s = 2;
    std::optional<ColouredGraph> instance;
    if (i % 2 == 0) {
      const auto base = cl_extremal(TVector(i % 4 == 0 ? std::vector<int>{5, 4}
                                                       : std::vector<int>{4, 4, 3}));
      REQUIRE(base.graph.vertex_count() == n);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::vector<Edge>> layers(base.colouring.colour_count() + 1);
      for (int j = 1; j <= base.colouring.colour_count(); ++j)
        for (const auto& [u, v] : base.colouring.layer(j))
          layers[j].push_back(make_edge(perm[u], perm[v]));
      instance = ColouredGraph(complete_graph(n), std::move(layers));
    } else {
      const Graph host = complement(gen_gnp(n, 0.10, rng()));
      if (!is_s_connector(host, s).verdict) continue;
      std::uniform_int_distribution<int> cpick(0, 2), rpick(1, 2);
      std::vector<int> cover(n);
      for (auto& c : cover) c = cpick(rng);
      std::vector<std::vector<Edge>> layers(3);
      for (const auto& [u, v] : host.edges()) {
        const int cu = cover[u] == 0 ? 3 : cover[u];
        const int cv = cover[v] == 0 ? 3 : cover[v];
        const int c = std::min(cu, cv);
        layers[c <= 2 ? c : rpick(rng)].emplace_back(u, v);
      }
      instance = ColouredGraph(host, std::move(layers));
    }
    bool valid = true;
    for (int x : nu_vector(*instance)) valid = valid && 2 * x <= n - 2 * s;
    if (!valid) continue;
    ++done;
    // checked mode asserts every stage contract; re-check the bundle here
    const auto r = distil(*instance, s);
    const auto nu_in = nu_vector(*instance);
    const auto nu_out = nu_vector(r.result);
    const int q = instance->colour_count();
    CAPTURE(i);
    REQUIRE(2 * r.kappa >=
            n - static_cast<int>(r.T.size()) - (q + 13) * (s - 1) - 1);
    for (int j = 0; j < q; ++j) REQUIRE(nu_out[j] <= nu_in[j]);
    REQUIRE(nu_out[r.eta - 1] >= r.kappa);
    REQUIRE(nu_sigma(*instance) >= nu_sigma(r.result) + static_cast<int>(r.T.size()));
  }
  CHECK(done >= 20);
}

TEST_CASE("identical inputs produce identical traces") {
  const auto built = cl_extremal(TVector({3, 3}));
  const auto a = distil(built.colouring, 1);
  const auto b = distil(built.colouring, 1);
  CHECK(trace_to_jsonl(a.trace) == trace_to_jsonl(b.trace));
  CHECK(a.T == b.T);
  CHECK(a.eta == b.eta);
  CHECK(a.kappa == b.kappa);
}

TEST_CASE("golden trace of the K7 extremal run") {
  // The two-block extremal colouring of K7: the pipeline uncolours the small
  // block (the only A part) and keeps the K5 block as the dominant component,
  // meeting the kappa bound with equality.
  const auto built = cl_extremal(TVector({3, 3}));
  const auto r = distil(built.colouring, 1);
  CHECK(trace_to_jsonl(r.trace) ==
        "{\"colour\":1,\"detail\":{\"c\":[],\"removed\":0},\"stage\":\"c_isolate\"}\n"
        "{\"colour\":2,\"detail\":{\"c\":[],\"removed\":0},\"stage\":\"c_isolate\"}\n"
        "{\"colour\":0,\"detail\":{\"T\":[5,6]},\"stage\":\"decycle\"}\n"
        "{\"colour\":1,\"detail\":{\"k_prime\":[0,1,2,3,4],\"k_star\":[0,1,2,3,4],"
        "\"kappa\":2},\"stage\":\"dominant\"}\n"
        "{\"colour\":0,\"detail\":{\"T\":[5,6],\"c_star\":[],\"eta\":1,\"kappa\":2},"
        "\"stage\":\"result\"}\n");
}

TEST_CASE("the distilled core is a fully coloured acyclic colouring") {
  const auto built = cl_extremal(TVector({3, 3}));
  const auto r = distil(built.colouring, 1);
  const auto core = distil_core(built.colouring, r);
  CHECK(core.colouring.fully_coloured());
  CHECK(is_hyperforest(component_hypergraph(core.colouring)));
}

TEST_CASE("small-component report on a monochromatic complete host") {
  const Graph host = complete_graph(6);
  const ColouredGraph cg(host, {{}, host.edges()});
  const auto rep = check_small_components(cg, 1);
  CHECK(rep.largest == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(rep.outside == 0);
  CHECK(rep.all_ok());
}

TEST_CASE("small-component report on pipeline cores") {
  const auto built = cl_extremal(TVector({4, 3}));  // K9, per-colour nu (3,2)
  REQUIRE(built.graph.vertex_count() == 9);
  const auto r = distil(built.colouring, 1);
  const auto core = distil_core(built.colouring, r);
  const auto rep = check_small_components(core.colouring, 1);
  CHECK(rep.all_ok());
  CHECK(rep.outside == 0);  // s = 1 forces a single dominant component
}

TEST_CASE("small-component preconditions") {
  const Graph host = complete_graph(4);
  // triangle colours make a component cycle: not acyclic
  const ColouredGraph bad(host, {{}, {{0, 1}}, {{1, 2}}, {{0, 2}}});
  CHECK_THROWS_AS(check_small_components(bad, 1), PreconditionError);
  const ColouredGraph partial(host, {{{0, 1}}, {{1, 2}}, {}, {}});
  CHECK_THROWS_AS(check_small_components(partial, 1), PreconditionError);
}

TEST_CASE("trace serialisation is JSON lines") {
  Trace trace;
  trace.push_back({"stage_a", 1, {{"x", 1}}});
  trace.push_back({"stage_b", 0, {{"y", {1, 2}}}});
  const auto text = trace_to_jsonl(trace);
  CHECK(text ==
        "{\"colour\":1,\"detail\":{\"x\":1},\"stage\":\"stage_a\"}\n"
        "{\"colour\":0,\"detail\":{\"y\":[1,2]},\"stage\":\"stage_b\"}\n");
}
