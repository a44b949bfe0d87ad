#pragma once

#include <cstdint>
#include <vector>

#include "matchram/gallai_edmonds.hpp"
#include "matchram/graph.hpp"

namespace matchram {

/// A q-multicolouring of a host graph: q+1 edge layers, layer 0 holding the
/// uncoloured edges. Every layer is a subset of the host's edges; an edge may
/// carry several colours. Layers j >= 1 need not cover the host (the
/// compression pipeline deletes colour edges).
class ColouredGraph {
 public:
  ColouredGraph(Graph host, int q);
  ColouredGraph(Graph host, std::vector<std::vector<Edge>> layers);

  const Graph& host() const { return host_; }
  int colour_count() const { return q_; }
  int vertex_count() const { return host_.vertex_count(); }
  /// Layer j for j in 0..q, canonically sorted.
  const std::vector<Edge>& layer(int j) const;
  Graph layer_graph(int j) const;

  /// Layer 0 empty and the coloured layers cover every host edge.
  bool fully_coloured() const;
  /// Layer 0 equals exactly the host edges incident to S, and is disjoint
  /// from every coloured layer.
  bool is_s_proper(const std::vector<int>& S) const;


  bool operator==(const ColouredGraph& other) const {
    return host_ == other.host_ && layers_ == other.layers_;
  }

 private:
  Graph host_;
  int q_;
  std::vector<std::vector<Edge>> layers_;
};

/// Per-colour matching numbers (colours 1..q; layer 0 never counts).
std::vector<int> nu_vector(const ColouredGraph& cg);
int nu_sigma(const ColouredGraph& cg);

/// Moves every host edge incident to S into layer 0 and out of all colours.
ColouredGraph uncolour(const ColouredGraph& cg, const std::vector<int>& S);

// ---- component hypergraphs ----

struct Hyperedge {
  std::vector<int> vertices;  // sorted
  int colour;                 // 1..q
  enum class Origin { kColourComponent, kDComponent } origin;
};

/// Multihypergraph on the host's vertex set.
struct ComponentHypergraph {
  int n = 0;
  std::vector<Hyperedge> edges;
};

/// Connected components of the coloured layers, one hyperedge per component
/// that contains at least one edge (isolated vertices of a layer are skipped).
ComponentHypergraph component_hypergraph(const ColouredGraph& cg);

/// Components of G_j[D_j] for the per-colour decompositions, singletons
/// included.
ComponentHypergraph k_hypergraph(const ColouredGraph& cg);

/// Berge-acyclicity: the bipartite vertex/hyperedge incidence graph is a
/// forest. Checked by union-find over the incidence pairs.
bool is_hyperforest(const ComponentHypergraph& h);

// ---- the sigma machinery ----

/// Frozen per-colour decomposition data: the A_j sets and the components of
/// each G_j[D_j] with their matching numbers. Immutable once built.
class SigmaContext {
 public:
  struct Component {
    int colour;                 // 1..q
    std::vector<int> vertices;  // in host ids, sorted
    Graph graph;                // induced, local ids
    std::vector<int> local_of;  // host id -> local id or -1
    int nu;
  };

  explicit SigmaContext(const ColouredGraph& cg);

  int vertex_count() const { return n_; }
  int colour_count() const { return q_; }
  const std::vector<int>& a_set(int colour) const { return a_sets_[colour - 1]; }
  const std::vector<Component>& components() const { return components_; }
  /// Union of the A_j.
  const std::vector<int>& forced_set() const { return forced_; }

 private:
  int n_;
  int q_;
  std::vector<std::vector<int>> a_sets_;
  std::vector<Component> components_;
  std::vector<int> forced_;
};

struct SigmaValue {
  int r;
  int sigma;
};

/// r(T) = sum_j |A_j ∩ T| + sum of per-component matching-number drops;
/// sigma = r - |T|.
SigmaValue sigma_eval(const SigmaContext& ctx, const std::vector<int>& T);

struct SigmaGuard {
  /// Per search part, the number of vertices shared between several coloured
  /// components may not exceed this.
  int max_shared = 22;
};

/// A sigma-maximal set: globally maximises sigma, and every strict superset
/// has strictly smaller sigma. Exhaustive over the vertices that can matter
/// (forced A-vertices, then the vertices of components with at least one
/// edge), decomposed into independent interaction parts; vertices private to
/// one component are attached by a closure that only adds unit-drop vertices.
std::vector<int> sigma_maximal(const SigmaContext& ctx, const SigmaGuard& guard = {});

}  // namespace matchram
