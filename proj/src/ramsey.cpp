#include "matchram/ramsey.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "matchram/compression.hpp"
#include "matchram/errors.hpp"
#include "matchram/matching.hpp"

namespace matchram {

namespace {

// Mutable matching state for one colour during the refutation search.
struct ColourState {
  std::vector<std::vector<int>> adj;
  std::vector<int> mate;
  int nu = 0;

  explicit ColourState(int n) : adj(n), mate(n, -1) {}

  // Adds {u,v} and reports the new matching number. The previous matching was
  // maximum, so one augmentation round settles it.
  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    if (mate[u] == -1 && mate[v] == -1) {
      mate[u] = v;
      mate[v] = u;
      ++nu;
      return;
    }
    for (int r = 0; r < static_cast<int>(adj.size()); ++r)
      if (mate[r] == -1 && blossom_augment(adj, mate, r)) {
        ++nu;
        return;
      }
  }

  void pop_edge(int u, int v) {
    adj[u].pop_back();
    adj[v].pop_back();
  }
};

struct ArrowSearch {
  const Graph& g;
  const TVector& t;
  std::vector<Edge> order;
  std::vector<int> assignment;  // colour per ordered edge, 1-based
  std::vector<ColourState> colours;
  std::uint64_t nodes = 0;
  bool refuted = false;

  ArrowSearch(const Graph& g_, const TVector& t_) : g(g_), t(t_) {
    order = g.edges();
    std::stable_sort(order.begin(), order.end(), [this](const Edge& a, const Edge& b) {
      return g.degree(a.first) + g.degree(a.second) >
             g.degree(b.first) + g.degree(b.second);
    });
    assignment.assign(order.size(), 0);
    colours.assign(t.q(), ColourState(g.vertex_count()));
  }

  void dfs(std::size_t i) {
    if (refuted) return;
    if (i == order.size()) {
      refuted = true;
      return;
    }
    const auto [u, v] = order[i];
    for (int j = 0; j < t.q() && !refuted; ++j) {
      ++nodes;
      ColourState& st = colours[j];
      const auto saved_mate = st.mate;
      const int saved_nu = st.nu;
      st.add_edge(u, v);
      if (st.nu < t.t[j]) {  // colour j can still avoid a t_j matching
        assignment[i] = j + 1;
        dfs(i + 1);
      }
      if (!refuted) {
        st.pop_edge(u, v);
        st.mate = saved_mate;
        st.nu = saved_nu;
      }
    }
  }
};

}  // namespace

ArrowVerdict arrows(const Graph& g, const TVector& t, const ArrowGuard& guard) {
  if (g.edge_count() > guard.max_edges)
    throw GuardError("arrows: " + std::to_string(g.edge_count()) +
                     " edges exceed the search guard of " + std::to_string(guard.max_edges) +
                     "; raise with --guard-edges");
  ArrowSearch search(g, t);
  search.dfs(0);
  ArrowVerdict verdict;
  verdict.nodes_explored = search.nodes;
  verdict.arrows = !search.refuted;
  if (search.refuted) {
    std::vector<std::vector<Edge>> layers(t.q() + 1);
    for (std::size_t i = 0; i < search.order.size(); ++i)
      layers[search.assignment[i]].push_back(search.order[i]);
    verdict.witness = ColouredGraph(g, std::move(layers));
    const auto check = nu_vector(*verdict.witness);
    for (int j = 0; j < t.q(); ++j)
      contract(check[j] <= t.t[j] - 1, "arrows: refutation witness fails verification");
  }
  return verdict;
}

bool pigeonhole_arrows(const Graph& g, const TVector& t) { return nu(g) > t.lambda(); }

RhoResult rho(const Graph& g, int q, const ArrowGuard& guard) {
  require(q >= 1, "rho: q must be positive");
  const int v = nu(g);
  require(v >= 1, "rho: graph has no edge");

  // All targets in the box [1, nu+1]^q, with coordinatewise dominance to
  // avoid repeated oracle calls (arrowing is antitone in t).
  std::vector<std::vector<int>> arrowing, failing;
  const auto dominated_by = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };

  long long best_lambda = -1;
  std::vector<int> best_t;
  std::vector<int> cur(q, 1);
  for (;;) {
    bool known_arrow = false, known_fail = false;
    for (const auto& a : arrowing)
      if (dominated_by(cur, a)) {
        known_arrow = true;
        break;
      }
    if (!known_arrow)
      for (const auto& f : failing)
        if (dominated_by(f, cur)) {
          known_fail = true;
          break;
        }
    bool cur_arrows;
    if (known_arrow) {
      cur_arrows = true;
    } else if (known_fail) {
      cur_arrows = false;
    } else {
      cur_arrows = arrows(g, TVector(cur), guard).arrows;
      (cur_arrows ? arrowing : failing).push_back(cur);
    }
    if (cur_arrows) {
      contract(*std::max_element(cur.begin(), cur.end()) <= v,
               "rho: a target above the matching number arrowed");
      long long lam = 0;
      for (int x : cur) lam += x - 1;
      if (lam > best_lambda) {
        best_lambda = lam;
        best_t = cur;
      }
    }
    // next vector in the box
    int i = q - 1;
    while (i >= 0 && cur[i] == v + 1) --i;
    if (i < 0) break;
    ++cur[i];
    std::fill(cur.begin() + i + 1, cur.end(), 1);
  }
  contract(best_lambda >= 0, "rho: no arrowing target found");

  RhoResult out;
  out.num = best_lambda + 1;
  out.den = v;
  const long long g_ = std::gcd(out.num, out.den);
  out.num /= g_;
  out.den /= g_;
  out.achieving_t = TVector(best_t);
  contract(out.num >= out.den, "rho: ratio below one");
  return out;
}

bool is_weakly_cl(const Graph& g, int q, const ArrowGuard& guard) {
  return rho(g, q, guard).greater_than_one();
}

int theorem_bound(const TVector& t, int s) {
  require(s >= 1, "theorem_bound: s must be positive");
  return t.tmax() + t.lambda() + 1 + 7 * (t.q() + 1) * (s - 1);
}

namespace {

std::vector<Edge> lift_edges(const std::vector<Edge>& edges, const std::vector<int>& to_parent) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) out.push_back(make_edge(to_parent[u], to_parent[v]));
  std::sort(out.begin(), out.end());
  return out;
}

// Explicit matching of the requested size from a colour layer, in parent ids.
std::vector<Edge> extract_matching(const ColouredGraph& cg, int colour, int size,
                                   const std::vector<int>& to_parent) {
  auto m = max_matching(cg.layer_graph(colour));
  contract(static_cast<int>(m.edges.size()) >= size,
           "extract_matching: layer matching smaller than certified");
  m.edges.resize(size);
  return lift_edges(m.edges, to_parent);
}

}  // namespace

nlohmann::json verify_main_plus(const TVector& t, const std::vector<int>& z, const Graph& g,
                                const ColouredGraph& colouring, int s,
                                const SigmaGuard& sigma_guard) {
  const int q = t.q();
  require(static_cast<int>(z.size()) == q, "verify_main_plus: z length mismatch");
  require(s >= 1, "verify_main_plus: s must be positive");
  for (int x : z) require(x >= 0, "verify_main_plus: z entries must be non-negative");
  const int zmin = *std::min_element(z.begin(), z.end());
  long long z1 = std::accumulate(z.begin(), z.end(), 0LL);
  require(zmin >= s - 1, "verify_main_plus: min z below s-1");
  require(z1 + zmin >= static_cast<long long>(q + 13) * (s - 1),
          "verify_main_plus: z budget below (q+13)(s-1)");
  const int n0 = t.tmax() + t.lambda() + 1;
  require(g.vertex_count() >= n0, "verify_main_plus: graph order below tmax+lambda+1");
  require(colouring.host() == g, "verify_main_plus: colouring host mismatch");
  require(colouring.fully_coloured(), "verify_main_plus: colouring must be fully coloured");
  require(is_s_connector(g, s, ConnectorGuard{g.vertex_count(), std::max(s, 5)}).verdict,
          "verify_main_plus: graph is not an s-connector");

  std::vector<int> target(q);
  for (int j = 0; j < q; ++j) target[j] = std::max(t.t[j] - z[j], 0);

  nlohmann::json report;
  report["claim"] = "main_plus";
  report["params"] = {{"t", t.t}, {"z", z}, {"s", s}, {"n", n0}};

  // Work on an induced subgraph of the exact threshold order; it inherits the
  // connectivity property.
  std::vector<int> keep(n0);
  std::iota(keep.begin(), keep.end(), 0);
  const auto sub = induced(g, keep);
  std::vector<std::vector<Edge>> layers(q + 1);
  for (int j = 1; j <= q; ++j)
    for (const auto& [u, v] : colouring.layer(j))
      if (sub.from_parent[u] >= 0 && sub.from_parent[v] >= 0)
        layers[j].emplace_back(sub.from_parent[u], sub.from_parent[v]);
  const ColouredGraph cg(sub.graph, std::move(layers));

  const auto nus = nu_vector(cg);
  report["nu"] = nus;

  const auto certify = [&](const char* path, int colour_1based) {
    report["path"] = path;
    report["colour"] = colour_1based;
    report["target"] = target[colour_1based - 1];
    report["matching"] =
        extract_matching(cg, colour_1based, target[colour_1based - 1], sub.to_parent);
    report["certified"] = true;
  };

  // Vacuous targets first: a zero-size matching needs no search.
  for (int j = 0; j < q; ++j)
    if (target[j] == 0) {
      certify("vacuous", j + 1);
      return report;
    }

  for (int j = 0; j < q; ++j)
    if (2 * nus[j] > n0 - 2 * s) {
      // n0 >= 2 t_j, so this colour already beats t_j - s + 1 >= target.
      contract(nus[j] >= target[j], "verify_main_plus: large colour below target");
      certify("large_colour", j + 1);
      return report;
    }

  const auto distilled = distil(cg, s, /*checked=*/true, sigma_guard);
  report["kappa"] = distilled.kappa;
  report["T_size"] = distilled.T.size();
  if (distilled.kappa >= target[distilled.eta - 1]) {
    contract(nus[distilled.eta - 1] >= target[distilled.eta - 1],
             "verify_main_plus: distilled colour below its own kappa");
    certify("kappa", distilled.eta);
    return report;
  }

  // kappa fell short, so the counting identity forces some colour to meet its
  // target; scan for it directly.
  for (int j = 0; j < q; ++j)
    if (nus[j] >= target[j]) {
      certify("direct", j + 1);
      return report;
    }

  // Reaching this point would refute the underlying counting argument.
  report["path"] = "counterexample";
  report["certified"] = false;
  return report;
}

namespace {

// Hosts for the sampled regime: nearly-complete graphs with an exactly
// verified connectivity certificate.
Graph sample_connector(int n, int s, std::uint64_t seed) {
  const ConnectorGuard guard{std::max(n, 24), std::max(s, 5)};
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::uint64_t a_seed = seed * 1000003ULL + attempt;
    Graph g = attempt % 2 == 0 ? complement(gen_gnp(n, 0.04, a_seed))
                               : complement(gen_random_regular(n, n % 2 ? 2 : 1, a_seed));
    if (is_s_connector(g, s, guard).verdict) return g;
  }
  throw PreconditionError("sample_connector: no s-connector found");
}

ColouredGraph sample_colouring(const Graph& g, int q, int flavour, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = g.vertex_count();
  std::vector<std::vector<Edge>> layers(q + 1);
  if (flavour == 0) {
    // uniform random colour per edge
    std::uniform_int_distribution<int> pick(1, q);
    for (const auto& e : g.edges()) layers[pick(rng)].push_back(e);
  } else if (flavour == 1) {
    // Cover-guided adversary: small random vertex sets claim their incident
    // edges, leftovers get random colours. Keeps per-colour matchings low.
    std::uniform_int_distribution<int> size_pick(2, std::max(2, n / 3));
    std::vector<int> cover_colour(n, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    int at = 0;
    for (int j = 1; j <= q; ++j) {
      const int size = size_pick(rng);
      for (int k = 0; k < size && at < n; ++k) cover_colour[perm[at++]] = j;
    }
    std::uniform_int_distribution<int> pick(1, q);
    for (const auto& [u, v] : g.edges()) {
      const int cu = cover_colour[u] == 0 ? q + 1 : cover_colour[u];
      const int cv = cover_colour[v] == 0 ? q + 1 : cover_colour[v];
      const int c = std::min(cu, cv);
      layers[c <= q ? c : pick(rng)].emplace_back(u, v);
    }
  } else {
    // Block-split adversary in the shape of the extremal colourings: an odd
    // block keeps colour 1 internally, every edge leaving it takes the colour
    // of the least later block. Per-colour matchings stay near the floor, so
    // these colourings drive the full pipeline rather than the early exit.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    // first block of ~3n/4 (odd), remaining vertices spread over the colours
    std::uniform_int_distribution<int> shrink(0, n / 8);
    int first = 3 * n / 4 - shrink(rng);
    if (first % 2 == 0) --first;
    first = std::max(first, 1);
    std::vector<int> block_of(n, 0);
    for (int i = first; i < n; ++i) block_of[perm[i]] = 1 + (i - first) % std::max(q - 1, 1);
    for (int i = 0; i < first; ++i) block_of[perm[i]] = 0;
    for (const auto& [u, v] : g.edges()) {
      const int bu = std::min(block_of[u], block_of[v]);
      const int bv = std::max(block_of[u], block_of[v]);
      const int block = bu >= 1 ? bu : (bv == 0 ? 0 : bv);
      layers[block == 0 ? 1 : std::min(block + 1, q)].push_back({u, v});
    }
  }
  return ColouredGraph(g, std::move(layers));
}

}  // namespace

nlohmann::json verify_theorem_main(const TVector& t, int s, int trials, std::uint64_t seed,
                                   const ArrowGuard& guard, const SigmaGuard& sigma_guard) {
  require(s >= 1, "verify_theorem_main: s must be positive");
  const int bound = theorem_bound(t, s);
  nlohmann::json report;
  report["claim"] = "arrow_bound";
  report["params"] = {{"t", t.t}, {"s", s}, {"q", t.q()}, {"bound", bound}};

  if (s == 1) {
    report["method"] = "exhaustive";
    report["trials"] = 0;
    report["seed"] = nullptr;
    const auto at_bound = arrows(complete_graph(bound), t, guard);
    const auto below = arrows(complete_graph(bound - 1), t, guard);
    // The extremal colouring must independently witness the lower bound.
    const auto extremal = cl_extremal(t);
    bool witness_ok = extremal.graph.vertex_count() == bound - 1;
    const auto nus = nu_vector(extremal.colouring);
    for (int j = 0; j < t.q(); ++j) witness_ok = witness_ok && nus[j] <= t.t[j] - 1;
    report["arrows_at_bound"] = at_bound.arrows;
    report["arrows_below"] = below.arrows;
    report["witness_ok"] = witness_ok;
    report["nodes"] = at_bound.nodes_explored + below.nodes_explored;
    report["verdict"] = at_bound.arrows && !below.arrows && witness_ok;
    return report;
  }

  report["method"] = "sampled";
  report["trials"] = trials;
  report["seed"] = seed;
  const std::vector<int> z(t.q(), 7 * (s - 1));
  TVector lifted = t;
  for (int j = 0; j < t.q(); ++j) lifted.t[j] += z[j];

  int failures = 0;
  int guard_skips = 0;
  std::map<std::string, int> paths;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
    const Graph host = sample_connector(bound, s, trial_seed);
    // The block-split adversary is only generated for two colours, where its
    // compressed form provably stays inside the sigma search guard.
    const int flavour =
        trial % 5 == 4 && t.q() <= 2 ? 2 : (trial % 5 >= 3 ? 1 : 0);
    const auto colouring = sample_colouring(host, t.q(), flavour, trial_seed);

    // Every adversarial attempt must concede a colour at its target.
    const auto nus = nu_vector(colouring);
    bool conceded = false;
    for (int j = 0; j < t.q(); ++j) conceded = conceded || nus[j] >= t.t[j];

    try {
      const auto plus = verify_main_plus(lifted, z, host, colouring, s, sigma_guard);
      ++paths[plus.at("path").get<std::string>()];
      if (!conceded || !plus.at("certified").get<bool>()) ++failures;
    } catch (const GuardError&) {
      // An over-entangled instance is beyond desk-scale certification; it is
      // reported, and it blocks the verdict.
      ++guard_skips;
    }
  }
  report["failures"] = failures;
  report["guard_skips"] = guard_skips;
  report["paths"] = paths;
  report["verdict"] = failures == 0 && guard_skips == 0;
  return report;
}

}  // namespace matchram
