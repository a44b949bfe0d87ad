#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace matchram {

/// Undirected edge, stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// no self-loops, no duplicate edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Edges may arrive in any order/orientation; duplicates are rejected.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Canonically sorted edge list (u < v, lexicographic).
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// ---- vertex-set helpers (sets are sorted, duplicate-free int vectors) ----

std::vector<int> normalize_set(std::vector<int> s);
bool set_contains(const std::vector<int>& s, int v);
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b);

// ---- derived graphs ----

Graph with_edge(const Graph& g, int u, int v);
/// Removes every edge with an endpoint in S (vertices stay).
Graph without_edges_at(const Graph& g, const std::vector<int>& S);
Graph complement(const Graph& g);

/// An induced subgraph together with the vertex relabelling, so sets found in
/// the subgraph can be mapped back to the parent.
struct Relabelling {
  Graph graph;
  std::vector<int> to_parent;    // new id -> old id
  std::vector<int> from_parent;  // old id -> new id, or -1 if dropped
};

Relabelling induced(const Graph& g, const std::vector<int>& keep);
Relabelling remove_vertex(const Graph& g, int v);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_forest(const Graph& g);
/// Two-colouring by BFS; empty result if some component has an odd cycle.
std::optional<std::array<std::vector<int>, 2>> bipartition(const Graph& g);

// ---- small builders used throughout the tests and the CLI ----

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

}  // namespace matchram
