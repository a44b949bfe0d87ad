#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matchram/coloured.hpp"
#include "matchram/graph.hpp"

namespace matchram {

/// Target vector for matching Ramsey questions: q positive entries, t_j being
/// the monochromatic matching size sought in colour j.
struct TVector {
  std::vector<int> t;

  TVector() = default;
  explicit TVector(std::vector<int> entries);

  int q() const { return static_cast<int>(t.size()); }
  /// sum of (t_j - 1), the pigeonhole budget
  int lambda() const;
  int tmax() const;
};

/// Result of the exact connectivity test. When the verdict is negative the
/// witness holds two disjoint size-s sets with no crossing edge.
struct ConnectorCertificate {
  int s = 0;
  bool verdict = false;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

struct ConnectorGuard {
  int max_n = 24;
  int max_s = 5;
};

/// Exact: true iff every two disjoint size-s vertex sets have a crossing
/// edge. Enumerates size-s sets X and checks whether s vertices avoid both X
/// and its neighbourhood; vacuously true when 2s exceeds the order.
ConnectorCertificate is_s_connector(const Graph& g, int s, const ConnectorGuard& guard = {});

struct AlphaStarGuard {
  int max_n = 18;
};

/// Bipartite independence number: the largest t with two disjoint size-t sets
/// and no crossing edge (0 for complete graphs). Exponential; guarded.
int alpha_star(const Graph& g, const AlphaStarGuard& guard = {});

// ---- seeded generators ----

Graph gen_gnp(int n, double p, std::uint64_t seed);
/// Pairing model with whole-attempt rejection of loops and multi-edges.
Graph gen_random_regular(int n, int d, std::uint64_t seed);
Graph gen_complete_split(int clique_size, int independent_size);
Graph gen_odd_cycle(int ell);

// ---- explicit constructions and adversarial colourings ----

struct ColouredConstruction {
  Graph graph;
  ColouredGraph colouring;
};

/// The extremal colouring of the complete graph on tmax + lambda vertices:
/// with colours ordered by descending t_j, a block of 2*t_(1)-1 vertices is a
/// clique in the first colour, and each later block of t_(j)-1 vertices claims
/// its remaining incident edges. Every colour-j matching has size < t_j.
ColouredConstruction cl_extremal(const TVector& t);

/// cl_extremal plus s-1 isolated vertices: an s-connector of order
/// tmax + lambda + s - 1 whose colouring has no colour-j matching of size t_j.
ColouredConstruction sharp_construction(const TVector& t, int s);

/// Complete split graph with clique c_1..c_q joined to 2s-1 independent
/// vertices; each edge takes the least colour j with c_j as an endpoint, so
/// every colour class is a star.
ColouredConstruction split_star_colouring(int q, int s);

/// For bipartite g with lambda >= nu(g): computes a minimum vertex cover via
/// Koenig's theorem, splits it into parts of size < t_j, and colours each
/// edge by the least colour whose part covers it. Every colour-j matching
/// then has size < t_j.
ColouredGraph konig_colouring(const Graph& g, const TVector& t);

/// The sparse-random adversary: colours the largest component plus all other
/// cyclic components with the colour of the largest t_j, then refutes on the
/// remaining forest via konig_colouring with the reduced target. Forest
/// inputs go straight to konig_colouring. Returns nothing when the cyclic
/// part already carries a matching of size max t_j.
std::optional<ColouredGraph> gnp_adversary_colouring(const Graph& g, const TVector& t);

}  // namespace matchram
