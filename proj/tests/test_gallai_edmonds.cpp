#include <doctest.h>

#include "matchram/gallai_edmonds.hpp"
#include "matchram/matching.hpp"
#include "oracles.hpp"

using namespace matchram;

TEST_CASE("decomposition of a 3-path: ends inessential, centre dominating") {
  const auto ge = ge_decompose(path_graph(3));
  CHECK(ge.D == std::vector<int>{0, 2});
  CHECK(ge.A == std::vector<int>{1});
  CHECK(ge.C.empty());
  CHECK(ge.d_components == std::vector<std::vector<int>>{{0}, {2}});
}

TEST_CASE("decomposition of a 4-cycle: every vertex essential") {
  const auto ge = ge_decompose(cycle_graph(4));
  CHECK(ge.D.empty());
  CHECK(ge.A.empty());
  CHECK(ge.C == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("decomposition of a 5-cycle: everything inessential") {
  const auto ge = ge_decompose(cycle_graph(5));
  CHECK(ge.D == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(ge.A.empty());
  CHECK(ge.C.empty());
  REQUIRE(ge.d_components.size() == 1);
}

TEST_CASE("factor-critical basics") {
  CHECK(is_factor_critical(cycle_graph(5)));
  CHECK(is_factor_critical(empty_graph(1)));
  CHECK(!is_factor_critical(path_graph(3)));
  CHECK(!is_factor_critical(empty_graph(2)));
  CHECK(!is_factor_critical(empty_graph(0)));
  CHECK(!is_factor_critical(complete_graph(4)));
  CHECK(is_factor_critical(complete_graph(5)));
}

TEST_CASE("decomposition agrees with the enumeration oracle on every graph up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    const int m = static_cast<int>(all.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      std::vector<Edge> edges;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) edges.push_back(all[i]);
      const Graph g(n, std::move(edges));
      const auto fast = ge_decompose(g);
      const auto slow = oracles::ge(g);
      CAPTURE(n);
      CAPTURE(mask);
      REQUIRE(fast.C == slow.C);
      REQUIRE(fast.A == slow.A);
      REQUIRE(fast.D == slow.D);
      REQUIRE(fast.d_components == slow.d_components);
    }
  }
}

TEST_CASE("decomposition agrees with the enumeration oracle on random graphs") {
  for (int i = 0; i < 200; ++i) {
    const int n = 5 + i % 5;
    const Graph g = oracles::random_graph(n, 0.2 + 0.1 * (i % 6), 777 + i);
    const auto fast = ge_decompose(g);
    const auto slow = oracles::ge(g);
    CAPTURE(i);
    REQUIRE(fast.D == slow.D);
    REQUIRE(fast.A == slow.A);
    REQUIRE(fast.C == slow.C);
  }
}

TEST_CASE("decomposition on blossom-heavy structures") {
  // a triangle flower is factor-critical: the petals can match internally and
  // leave the hub exposed, so every vertex is inessential
  for (int petals = 2; petals <= 5; ++petals) {
    std::vector<Edge> edges;
    const int n = 1 + 2 * petals;
    for (int p = 0; p < petals; ++p) {
      const int a = 1 + 2 * p, b = 2 + 2 * p;
      edges.push_back(make_edge(0, a));
      edges.push_back(make_edge(0, b));
      edges.push_back(make_edge(a, b));
    }
    const Graph g(n, std::move(edges));
    const auto fast = ge_decompose(g);
    const auto slow = oracles::ge(g);
    CAPTURE(petals);
    REQUIRE(fast.D == slow.D);
    REQUIRE(fast.A == slow.A);
    REQUIRE(fast.C == slow.C);
    REQUIRE(static_cast<int>(fast.D.size()) == n);
    REQUIRE(is_factor_critical(g));
  }
}

TEST_CASE("factor-critical agrees with the definitional brute force up to 9 vertices") {
  for (int i = 0; i < 150; ++i) {
    const int n = 3 + i % 7;
    const Graph g = oracles::random_graph(n, 0.3 + 0.1 * (i % 6), 31000 + i);
    CAPTURE(i);
    REQUIRE(is_factor_critical(g) == oracles::factor_critical(g));
  }
}

TEST_CASE("structure of random maximum matchings around the decomposition") {
  // Every maximum matching: perfect on C, near-perfect on each D-component,
  // and matches A into distinct D-components.
  const Graph g = oracles::random_graph(10, 0.3, 2024);
  const auto ge = ge_decompose(g);
  for (int k = 0; k < 100; ++k) {
    const auto m = oracles::random_max_matching(g, 6000 + k);
    REQUIRE(m.size() == nu(g));
    std::vector<int> mate(g.vertex_count(), -1);
    for (const auto& [u, v] : m.edges) {
      mate[u] = v;
      mate[v] = u;
    }
    for (int c : ge.C) {
      REQUIRE(mate[c] != -1);
      REQUIRE(set_contains(ge.C, mate[c]));
    }
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ge.d_components.size(); ++i)
      for (int v : ge.d_components[i]) comp_of[v] = static_cast<int>(i);
    for (std::size_t i = 0; i < ge.d_components.size(); ++i) {
      int inside = 0;
      for (const auto& [u, v] : m.edges)
        if (comp_of[u] == static_cast<int>(i) && comp_of[v] == static_cast<int>(i)) ++inside;
      REQUIRE(2 * inside == static_cast<int>(ge.d_components[i].size()) - 1);
    }
    std::vector<char> used_comp(ge.d_components.size(), 0);
    for (int a : ge.A) {
      REQUIRE(mate[a] != -1);
      REQUIRE(comp_of[mate[a]] >= 0);
      REQUIRE(!used_comp[comp_of[mate[a]]]);
      used_comp[comp_of[mate[a]]] = 1;
    }
  }
}

TEST_CASE("deficiency identity on random graphs") {
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 10;
    const Graph g = oracles::random_graph(n, 0.1 + 0.08 * (i % 10), 123 + i);
    const auto ge = ge_decompose(g);
    CAPTURE(i);
    REQUIRE(static_cast<int>(ge.d_components.size()) - static_cast<int>(ge.A.size()) ==
            n - 2 * nu(g));
  }
}

TEST_CASE("deleting a dominating vertex shifts only A") {
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracles::random_graph(8, 0.35, 85000 + i);
    const auto ge = ge_decompose(g);
    for (int v : ge.A) {
      const auto sub = remove_vertex(g, v);
      const auto after = ge_decompose(sub.graph);
      std::vector<int> c2, a2, d2;
      for (int x : after.C) c2.push_back(sub.to_parent[x]);
      for (int x : after.A) a2.push_back(sub.to_parent[x]);
      for (int x : after.D) d2.push_back(sub.to_parent[x]);
      CAPTURE(i);
      CAPTURE(v);
      REQUIRE(normalize_set(c2) == ge.C);
      REQUIRE(normalize_set(a2) == set_difference(ge.A, {v}));
      REQUIRE(normalize_set(d2) == ge.D);
    }
  }
}
