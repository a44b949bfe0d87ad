#pragma once

#include <vector>

#include "matchram/graph.hpp"

namespace matchram {

/// Gallai-Edmonds decomposition of a graph. D is the set of inessential
/// vertices (missed by some maximum matching), A their outside neighbourhood,
/// C the rest. d_components lists the connected components of G[D]; each one
/// is factor-critical, and |V| - 2*nu = k(D) - |A|.
struct GEDecomposition {
  std::vector<int> C, A, D;
  std::vector<std::vector<int>> d_components;
};

/// Computes the decomposition. A vertex v is inessential iff deleting it
/// preserves the matching number; each test is a single augmenting-path
/// search against one fixed maximum matching.
GEDecomposition ge_decompose(const Graph& g);

/// True iff deleting any one vertex leaves a perfectly matchable graph.
/// False for even orders; a single vertex is factor-critical.
bool is_factor_critical(const Graph& g);

}  // namespace matchram
