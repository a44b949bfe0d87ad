#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "matchram/coloured.hpp"
#include "matchram/connector.hpp"
#include "matchram/graph.hpp"

namespace matchram {

/// Exact answer to "does every q-colouring of g contain a colour-j matching
/// of size t_j for some j". When the answer is no, the witness is a
/// fully-coloured refutation with every colour-j matching below t_j.
struct ArrowVerdict {
  bool arrows = false;
  std::optional<ColouredGraph> witness;
  std::uint64_t nodes_explored = 0;
};

struct ArrowGuard {
  int max_edges = 28;
};

/// Branch-and-bound over single-colour-per-edge assignments (sufficient: any
/// refuting multicolouring restricts to a refuting simple colouring). Edges
/// are ordered by descending degree sum; a partial assignment dies as soon as
/// some colour reaches a t_j matching. Witnesses are re-verified before they
/// are returned.
ArrowVerdict arrows(const Graph& g, const TVector& t, const ArrowGuard& guard = {});

/// The pigeonhole sufficient condition: nu(g) > lambda(t).
bool pigeonhole_arrows(const Graph& g, const TVector& t);

/// Best pigeonhole-beating ratio (lambda+1)/nu over arrowing targets, as an
/// exact reduced fraction. The search box is t_j <= nu(g)+1: a colour-j
/// target above nu(g) never arrows (colour everything j), and the box edge
/// doubles as an empirical check of that fact.
struct RhoResult {
  long long num = 0;
  long long den = 1;
  TVector achieving_t;
  bool greater_than_one() const { return num > den; }
};

RhoResult rho(const Graph& g, int q, const ArrowGuard& guard = {});

/// True iff some target with lambda >= nu(g) still arrows, i.e. rho > 1.
bool is_weakly_cl(const Graph& g, int q, const ArrowGuard& guard = {});

/// tmax + lambda + 1 + 7(q+1)(s-1).
int theorem_bound(const TVector& t, int s);

/// Runs the arrowing guarantee as a decision procedure on one concrete
/// colouring: either some colour already has a matching above |V|/2 - s, or
/// the distil pipeline produces a dominant colour eta with kappa >= t_eta -
/// z_eta, or a direct per-colour scan finds the promised matching. The report
/// records the path taken and an explicit monochromatic matching of size
/// max(t_j - z_j, 0) for the certified colour. Hypotheses: g is an
/// s-connector of order >= tmax + lambda + 1, min z_j >= s-1 and
/// ||z||_1 + min z_j >= (q+13)(s-1), colouring fully coloured.
nlohmann::json verify_main_plus(const TVector& t, const std::vector<int>& z, const Graph& g,
                                const ColouredGraph& colouring, int s,
                                const SigmaGuard& sigma_guard = {});

/// Regime-split verification of the arrowing bound. For s=1 the oracle
/// decides K_bound exactly and the extremal colouring witnesses bound-1. For
/// s>=2 the colouring space is out of reach, so sampled s-connectors at the
/// bound order are attacked with random and construction-guided adversarial
/// colourings; every trial must concede a colour-j matching of size t_j and
/// verify_main_plus must certify it.
nlohmann::json verify_theorem_main(const TVector& t, int s, int trials, std::uint64_t seed,
                                   const ArrowGuard& guard = {},
                                   const SigmaGuard& sigma_guard = {});

}  // namespace matchram
