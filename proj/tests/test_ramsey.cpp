#include <doctest.h>

#include <map>

#include "matchram/errors.hpp"
#include "matchram/matching.hpp"
#include "matchram/ramsey.hpp"
#include "oracles.hpp"

using namespace matchram;

TEST_CASE("a single edge arrows (1,1)") {
  const auto v = arrows(complete_graph(2), TVector({1, 1}));
  CHECK(v.arrows);
}

TEST_CASE("an edgeless graph never arrows") {
  const auto v = arrows(empty_graph(3), TVector({1, 1}));
  CHECK(!v.arrows);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->fully_coloured());
}

TEST_CASE("K5 arrows (2,2) and K4 does not") {
  CHECK(arrows(complete_graph(5), TVector({2, 2})).arrows);
  const auto below = arrows(complete_graph(4), TVector({2, 2}));
  CHECK(!below.arrows);
  REQUIRE(below.witness.has_value());
  const auto nus = nu_vector(*below.witness);
  CHECK(nus[0] <= 1);
  CHECK(nus[1] <= 1);
  // the extremal construction is an equally good witness
  CHECK(nu_vector(cl_extremal(TVector({2, 2})).colouring) == std::vector<int>{1, 1});
}

TEST_CASE("the 5-cycle arrows (2,2)") {
  CHECK(arrows(cycle_graph(5), TVector({2, 2})).arrows);
  CHECK(oracles::arrows_by_enumeration(cycle_graph(5), TVector({2, 2})));
}

TEST_CASE("single-colour arrowing is a matching-number test") {
  for (int n = 2; n <= 7; ++n)
    for (int t1 = 1; t1 <= 4; ++t1)
      CHECK(arrows(complete_graph(n), TVector({t1})).arrows == (n / 2 >= t1));
}

TEST_CASE("the edge guard is enforced and overridable") {
  CHECK_THROWS_AS(arrows(complete_graph(9), TVector({2, 2})), GuardError);
  CHECK(arrows(complete_graph(9), TVector({2, 2}), ArrowGuard{36}).arrows);
}

TEST_CASE("search agrees with plain enumeration on random instances") {
  for (int i = 0; i < 60; ++i) {
    std::mt19937_64 rng(140000 + i);
    std::uniform_int_distribution<int> np(3, 8), tp(1, 3);
    const int n = np(rng);
    Graph base = oracles::random_graph(n, 0.5, rng());
    auto edges = base.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(std::min<std::size_t>(edges.size(), 10));
    const Graph g(n, std::move(edges));
    const TVector t({tp(rng), tp(rng)});
    CAPTURE(i);
    REQUIRE(arrows(g, t).arrows == oracles::arrows_by_enumeration(g, t));
  }
}

TEST_CASE("the pigeonhole test and its relation to the oracle") {
  CHECK(!pigeonhole_arrows(complete_graph(5), TVector({2, 2})));  // at the threshold
  CHECK(arrows(complete_graph(5), TVector({2, 2})).arrows);       // yet it arrows
  CHECK(pigeonhole_arrows(complete_graph(7), TVector({3})));
  CHECK(!pigeonhole_arrows(empty_graph(5), TVector({1, 1})));
  for (int i = 0; i < 40; ++i) {
    std::mt19937_64 rng(73000 + i);
    std::uniform_int_distribution<int> np(3, 7), tp(1, 3);
    Graph base = oracles::random_graph(np(rng), 0.5, rng());
    auto edges = base.edges();
    edges.resize(std::min<std::size_t>(edges.size(), 10));
    const Graph g(base.vertex_count(), std::move(edges));
    const TVector t({tp(rng), tp(rng)});
    if (pigeonhole_arrows(g, t)) {
      CAPTURE(i);
      REQUIRE(arrows(g, t).arrows);
    }
  }
}

TEST_CASE("arrowing is antitone in the target") {
  for (int i = 0; i < 25; ++i) {
    std::mt19937_64 rng(98000 + i);
    Graph base = oracles::random_graph(6, 0.6, rng());
    auto edges = base.edges();
    edges.resize(std::min<std::size_t>(edges.size(), 10));
    const Graph g(6, std::move(edges));
    for (int t1 = 1; t1 <= 3; ++t1)
      for (int t2 = 1; t2 <= 3; ++t2) {
        if (!arrows(g, TVector({t1, t2})).arrows) continue;
        for (int s1 = 1; s1 <= t1; ++s1)
          for (int s2 = 1; s2 <= t2; ++s2) {
            CAPTURE(i);
            REQUIRE(arrows(g, TVector({s1, s2})).arrows);
          }
      }
  }
}

TEST_CASE("exactness of the complete-graph threshold for small targets") {
  // q = 1 and q = 2, thresholds up to 6 here; the acceptance suite goes to 7
  for (int t1 = 1; t1 <= 3; ++t1) {
    const TVector t({t1});
    const int bound = t.tmax() + t.lambda() + 1;
    if (bound > 6) continue;
    CHECK(arrows(complete_graph(bound), t).arrows);
    CHECK(!arrows(complete_graph(bound - 1), t).arrows);
  }
  for (int t1 = 1; t1 <= 3; ++t1)
    for (int t2 = 1; t2 <= 3; ++t2) {
      const TVector t({t1, t2});
      const int bound = t.tmax() + t.lambda() + 1;
      if (bound > 6) continue;
      CAPTURE(t1);
      CAPTURE(t2);
      REQUIRE(arrows(complete_graph(bound), t).arrows);
      REQUIRE(!arrows(complete_graph(bound - 1), t).arrows);
    }
}

TEST_CASE("the triangle never beats the pigeonhole bound") {
  const auto r = rho(complete_graph(3), 2);
  CHECK(r.num == 1);
  CHECK(r.den == 1);
  CHECK(!is_weakly_cl(complete_graph(3), 2));
}

TEST_CASE("the 5-cycle beats it by exactly one half") {
  const auto r = rho(cycle_graph(5), 2);
  CHECK(r.num == 3);
  CHECK(r.den == 2);
  CHECK(r.achieving_t.t == std::vector<int>{2, 2});
  CHECK(is_weakly_cl(cycle_graph(5), 2));
}

TEST_CASE("paths and even cycles never beat it") {
  for (const Graph& g : {path_graph(4), cycle_graph(6)}) {
    const auto r = rho(g, 2);
    CHECK(r.num == 1);
    CHECK(r.den == 1);
  }
}

TEST_CASE("longer odd cycles stay weakly extremal, monotonically in q") {
  // C_l with targets (floor(k/2)+1, ceil(k/2)+1) for l = 2k+1
  CHECK(arrows(cycle_graph(5), TVector({2, 2})).arrows);
  CHECK(arrows(cycle_graph(7), TVector({2, 3})).arrows);
  CHECK(arrows(cycle_graph(9), TVector({3, 3})).arrows);
  CHECK(is_weakly_cl(cycle_graph(7), 2));
  CHECK(is_weakly_cl(cycle_graph(7), 3));  // monotone in the colour count
}

TEST_CASE("balanced complete bipartite and split graphs are not weakly extremal") {
  CHECK(!is_weakly_cl(complete_bipartite(3, 3), 3));
  CHECK(!is_weakly_cl(gen_complete_split(3, 3), 2));
}

TEST_CASE("rho rejects edgeless graphs") {
  CHECK_THROWS_AS(rho(empty_graph(4), 2), PreconditionError);
}

TEST_CASE("threshold arithmetic") {
  CHECK(theorem_bound(TVector({2, 2}), 1) == 5);
  CHECK(theorem_bound(TVector({1, 1}), 2) == 23);
  CHECK(theorem_bound(TVector({2}), 1) == 4);
  CHECK_THROWS_AS(theorem_bound(TVector({2}), 0), PreconditionError);
}

TEST_CASE("exhaustive regime of the threshold verifier") {
  const auto report = verify_theorem_main(TVector({2, 2}), 1, 0, 0);
  CHECK(report.at("method") == "exhaustive");
  CHECK(report.at("verdict").get<bool>());
  const auto single = verify_theorem_main(TVector({2}), 1, 0, 0);
  CHECK(single.at("verdict").get<bool>());
}

TEST_CASE("decision procedure on one colouring: single colour on a complete graph") {
  const Graph g = complete_graph(4);
  const ColouredGraph cg(g, {{}, g.edges()});
  const auto report = verify_main_plus(TVector({2}), {0}, g, cg, 1);
  CHECK(report.at("certified").get<bool>());
  CHECK(report.at("path") == "large_colour");
  CHECK(report.at("matching").size() == 2);
}

TEST_CASE("decision procedure certifies every colouring of K5 at (2,2)") {
  const Graph g = complete_graph(5);
  const auto& edges = g.edges();
  std::map<std::string, int> paths;
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::vector<Edge>> layers(3);
    for (int i = 0; i < 10; ++i) layers[(mask >> i & 1) + 1].push_back(edges[i]);
    const ColouredGraph cg(g, std::move(layers));
    const auto report = verify_main_plus(TVector({2, 2}), {0, 0}, g, cg, 1);
    REQUIRE(report.at("certified").get<bool>());
    REQUIRE(report.at("matching").size() == 2);
    ++paths[report.at("path").get<std::string>()];
    // the certified matching really is monochromatic and disjoint
    const int colour = report.at("colour").get<int>();
    std::vector<int> seen;
    for (const auto& e : report.at("matching")) {
      const Edge edge = make_edge(e[0].get<int>(), e[1].get<int>());
      const auto& layer = cg.layer(colour);
      REQUIRE(std::binary_search(layer.begin(), layer.end(), edge));
      seen.push_back(edge.first);
      seen.push_back(edge.second);
    }
    REQUIRE(normalize_set(seen).size() == 4);
  }
  CHECK(paths.size() >= 1);
}

TEST_CASE("decision procedure on sampled near-complete hosts at the threshold order") {
  int certified = 0;
  for (int i = 0; i < 3; ++i) {
    std::mt19937_64 rng(5000 + i);
    Graph g = complement(gen_gnp(23, 0.04, rng()));
    if (!is_s_connector(g, 2).verdict) continue;
    std::uniform_int_distribution<int> pick(1, 2);
    std::vector<std::vector<Edge>> layers(3);
    for (const auto& e : g.edges()) layers[pick(rng)].push_back(e);
    const ColouredGraph cg(g, std::move(layers));
    const auto report = verify_main_plus(TVector({8, 8}), {7, 7}, g, cg, 2);
    REQUIRE(report.at("certified").get<bool>());
    ++certified;
  }
  CHECK(certified > 0);
}

TEST_CASE("decision procedure validates its hypotheses") {
  const Graph g = complete_graph(4);
  const ColouredGraph cg(g, {{}, g.edges()});
  CHECK_THROWS_AS(verify_main_plus(TVector({2}), {0, 0}, g, cg, 1), PreconditionError);
  CHECK_THROWS_AS(verify_main_plus(TVector({3}), {0}, g, cg, 1), PreconditionError);
  CHECK_THROWS_AS(verify_main_plus(TVector({2}), {0}, g, cg, 2), PreconditionError);
}

TEST_CASE("sampled regime smoke run") {
  const auto report = verify_theorem_main(TVector({1, 1}), 2, 25, 12345);
  CHECK(report.at("method") == "sampled");
  CHECK(report.at("trials") == 25);
  CHECK(report.at("failures") == 0);
  CHECK(report.at("verdict").get<bool>());
}
