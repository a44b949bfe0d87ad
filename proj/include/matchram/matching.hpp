#pragma once

#include <vector>

#include "matchram/graph.hpp"

namespace matchram {

/// A matching: pairwise vertex-disjoint edges of some host graph.
struct Matching {
  std::vector<Edge> edges;  // sorted
  std::vector<int> covered() const;
  int size() const { return static_cast<int>(edges.size()); }
};

/// Tries to extend `mate` with one augmenting path from `root`, contracting
/// blossoms as needed. `dead` vertices (if given) are treated as deleted.
/// Returns true and augments in place on success. Deterministic: neighbours
/// are scanned in sorted order.
bool blossom_augment(const std::vector<std::vector<int>>& adj, std::vector<int>& mate,
                     int root, const std::vector<char>* dead = nullptr);

/// Maximum matching as a mate array (-1 = unmatched); returns its size.
/// Deterministic for a fixed input: greedy seed over the sorted edge list,
/// then augmentation from exposed vertices in increasing order.
int max_matching_mates(const Graph& g, std::vector<int>& mate);

Matching max_matching(const Graph& g);

/// Matching number.
int nu(const Graph& g);

/// Matching number of g with the vertices marked in `removed` deleted.
int nu_excluding(const Graph& g, const std::vector<char>& removed);

/// Maximum matching using only edges with one endpoint in X and the other in
/// Y (X and Y need not be disjoint). Bipartite augmentation is used when they
/// are disjoint, general matching on the eligible subgraph otherwise.
int nu_between(const Graph& g, const std::vector<int>& X, const std::vector<int>& Y);

}  // namespace matchram
