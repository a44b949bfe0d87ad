#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "matchram/coloured.hpp"
#include "matchram/graph.hpp"

namespace matchram {

/// One pipeline event, serialisable as a JSON-lines record.
struct TraceEvent {
  std::string stage;
  int colour = 0;  // 0 when not colour-specific
  nlohmann::json detail;
};

using Trace = std::vector<TraceEvent>;

/// Adds host edges between the C and D parts of g's decomposition, one at a
/// time (lexicographically smallest first), recomputing the decomposition
/// after each addition, until no such host edge remains. The matching number
/// never changes. With `checked`, that invariant and the termination bound
/// are asserted.
Graph cd_saturate(const Graph& g, const Graph& host, bool checked = true,
                  Trace* trace = nullptr, int colour = 0);

/// Deletes every edge incident to the C part. Afterwards C is empty, A is
/// unchanged and the matching number has dropped by exactly |C|/2 (asserted
/// when `checked`).
Graph c_isolate(const Graph& g, bool checked = true, Trace* trace = nullptr, int colour = 0);

struct DecycleResult {
  ColouredGraph result;
  std::vector<int> T;
};

/// Uncolours a sigma-maximal set. Input must be fully coloured with every
/// colour's C part empty. With `checked`, asserts: per-colour matching
/// numbers do not grow; their sum drops by at least |T|; the output is
/// T-proper; every colour becomes D-pure; and both component hypergraphs of
/// the output are hyperforests.
DecycleResult decycle(const ColouredGraph& cg, bool checked = true,
                      const SigmaGuard& sigma_guard = {});

/// Output bundle of the distil pipeline.
struct DistilResult {
  ColouredGraph result;       // the decycled colouring over the compressed host
  std::vector<int> T;         // uncoloured set
  std::vector<int> c_star;    // union of the per-colour C parts after saturation
  int eta = 0;                // colour of the dominant component (1..q)
  int kappa = 0;              // (|K'| - 1) / 2 for that component
  std::vector<int> k_star;    // dominant component within the core
  std::vector<int> k_prime;   // its component in the full decycled colouring
  Trace trace;
};

/// The full pipeline: per-colour saturation against the host, per-colour C
/// isolation, then decycling; finally locates the dominant component among
/// the vertices outside T and C*. Preconditions: the host is an s-connector,
/// the colouring is fully coloured, and each colour's matching number is at
/// most |V|/2 - s. With `checked`, every stage's contract plus the three
/// output bounds are asserted:
///   kappa >= (|V| - |T| - (q+13)(s-1) - 1) / 2,
///   per-colour matching numbers dominate kappa * e_eta and never grew,
///   sum of matching numbers dropped by at least |T|.
DistilResult distil(const ColouredGraph& cg, int s, bool checked = true,
                    const SigmaGuard& sigma_guard = {});

/// The core of a distil result: the decycled colouring restricted to the
/// vertices outside T and C*, with the relabelling back to the parent.
struct DistilCore {
  ColouredGraph colouring;
  std::vector<int> to_parent;
};
DistilCore distil_core(const ColouredGraph& cg, const DistilResult& r);

/// Structural report on a fully-coloured acyclic colouring of an
/// s-connector: the largest colour component K misses at most 13(s-1)
/// vertices, at most one component exceeds s+1 vertices, and distinct
/// components meet in at most one vertex and are joined by at most one
/// independent host edge.
struct SmallComponentsReport {
  int s = 0;
  std::vector<int> largest;        // K
  int outside = 0;                 // |V \ K|
  bool size_bound_ok = false;      // outside <= 13(s-1)
  int oversized_components = 0;    // components larger than s+1
  bool unique_large_ok = false;    // at most one of those
  bool pairwise_ok = false;        // |K1 ∩ K2| <= 1 and nu(K1,K2) <= 1
  bool all_ok() const { return size_bound_ok && unique_large_ok && pairwise_ok; }
};

SmallComponentsReport check_small_components(const ColouredGraph& cg, int s);

nlohmann::json trace_to_json(const Trace& trace);
std::string trace_to_jsonl(const Trace& trace);

}  // namespace matchram
