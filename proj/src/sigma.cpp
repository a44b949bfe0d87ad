#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>

#include "matchram/coloured.hpp"
#include "matchram/errors.hpp"
#include "matchram/matching.hpp"

namespace matchram {

namespace {

// One coloured component taking part in the search, with memoised
// matching-number drops per subset of deleted local vertices.
struct CompState {
  const SigmaContext::Component* comp;
  std::uint64_t base_mask = 0;  // forced vertices (A-union members) inside
  std::uint64_t cur_mask = 0;
  int base_drop = 0;
  int cur_drop = 0;
  std::unordered_map<std::uint64_t, int> memo;

  int drop(std::uint64_t mask) {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<char> removed(comp->graph.vertex_count(), 0);
    for (int i = 0; i < comp->graph.vertex_count(); ++i)
      if (mask & (std::uint64_t{1} << i)) removed[i] = 1;
    const int d = comp->nu - nu_excluding(comp->graph, removed);
    memo.emplace(mask, d);
    return d;
  }
};

// Exhaustive search over one interaction part's shared vertices. Finds the
// best delta relative to including only the forced set, preferring larger
// vertex sets on ties (that choice is what makes the final set
// inclusion-maximal among the maximisers).
struct PartSearch {
  std::vector<int> shared;                  // host ids, branch order
  std::vector<std::vector<int>> comps_of;   // per shared vertex: CompState indices
  std::vector<int> bound;                   // per shared vertex: max positive marginal
  std::vector<int> suffix_bound;
  std::vector<CompState>* states;

  int best_delta = 0;  // S = empty is always feasible with delta 0
  std::uint64_t best_pick = 0;
  int best_size = 0;
  bool have_best = false;

  // Upper bound on future gains that accounts for drained components: once a
  // component's remaining matching is gone it cannot pay for any vertex, so
  // every later state bounds below the current one.
  int dynamic_bound(std::size_t i) const {
    int total = 0;
    for (std::size_t k = i; k < shared.size(); ++k) {
      int undrained = 0;
      for (int si : comps_of[k])
        if ((*states)[si].cur_drop < (*states)[si].comp->nu) ++undrained;
      total += std::max(0, undrained - 1);
    }
    return total;
  }

  void dfs(std::size_t i, int delta, std::uint64_t pick, int size) {
    if (i == shared.size()) {
      if (!have_best || delta > best_delta ||
          (delta == best_delta && size > best_size)) {
        have_best = true;
        best_delta = delta;
        best_pick = pick;
        best_size = size;
      }
      return;
    }
    if (delta + suffix_bound[i] < best_delta) return;  // cannot reach the optimum
    if (delta + dynamic_bound(i) < best_delta) return;
    const int v = shared[i];
    // include v
    int gained = -1;
    std::vector<std::pair<int, int>> saved;  // state idx, previous drop
    for (int si : comps_of[i]) {
      auto& st = (*states)[si];
      const std::uint64_t bit = std::uint64_t{1} << st.comp->local_of[v];
      saved.emplace_back(si, st.cur_drop);
      st.cur_mask |= bit;
      const int nd = st.drop(st.cur_mask);
      gained += nd - st.cur_drop;
      st.cur_drop = nd;
    }
    dfs(i + 1, delta + gained, pick | (std::uint64_t{1} << i), size + 1);
    for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
      auto& st = (*states)[it->first];
      st.cur_mask &= ~(std::uint64_t{1} << st.comp->local_of[shared[i]]);
      st.cur_drop = it->second;
    }
    // exclude v
    dfs(i + 1, delta, pick, size);
  }
};

}  // namespace

std::vector<int> sigma_maximal(const SigmaContext& ctx, const SigmaGuard& guard) {
  const std::vector<int>& forced = ctx.forced_set();

  // Components that can contribute a matching-number drop.
  std::vector<const SigmaContext::Component*> edged;
  for (const auto& c : ctx.components())
    if (c.nu >= 1) edged.push_back(&c);

  // Free vertices: members of edged components outside the forced set.
  std::vector<int> free_verts;
  for (const auto* c : edged)
    for (int v : c->vertices)
      if (!set_contains(forced, v)) free_verts.push_back(v);
  free_verts = normalize_set(std::move(free_verts));

  std::unordered_map<int, int> free_index;
  for (int i = 0; i < static_cast<int>(free_verts.size()); ++i)
    free_index.emplace(free_verts[i], i);

  // Interaction parts: free vertices sharing a component must be searched
  // together.
  std::vector<int> part_of(free_verts.size());
  std::iota(part_of.begin(), part_of.end(), 0);
  const auto find_part = [&part_of](int x) {
    while (part_of[x] != x) x = part_of[x] = part_of[part_of[x]];
    return x;
  };
  std::vector<std::vector<int>> comp_free(edged.size());  // free-vertex indices per comp
  std::vector<int> comp_count(free_verts.size(), 0);
  for (std::size_t ci = 0; ci < edged.size(); ++ci) {
    contract(edged[ci]->graph.vertex_count() <= 63,
             "sigma_maximal: component too large for subset masks");
    for (int v : edged[ci]->vertices) {
      auto it = free_index.find(v);
      if (it == free_index.end()) continue;
      comp_free[ci].push_back(it->second);
      ++comp_count[it->second];
    }
    for (std::size_t k = 1; k < comp_free[ci].size(); ++k) {
      int a = find_part(comp_free[ci][0]);
      int b = find_part(comp_free[ci][k]);
      if (a != b) part_of[a] = b;
    }
  }

  // Component search states with the forced vertices pre-deleted.
  std::vector<CompState> states(edged.size());
  for (std::size_t ci = 0; ci < edged.size(); ++ci) {
    states[ci].comp = edged[ci];
    std::uint64_t base = 0;
    for (int v : set_intersection(edged[ci]->vertices, forced))
      base |= std::uint64_t{1} << edged[ci]->local_of[v];
    states[ci].base_mask = base;
    states[ci].base_drop = states[ci].drop(base);
    states[ci].cur_mask = base;
    states[ci].cur_drop = states[ci].base_drop;
  }
  std::vector<std::vector<int>> states_of(free_verts.size());
  for (std::size_t ci = 0; ci < edged.size(); ++ci)
    for (int fi : comp_free[ci]) states_of[fi].push_back(static_cast<int>(ci));

  std::vector<int> result = forced;

  // Group free vertices by part id.
  std::unordered_map<int, std::vector<int>> parts;
  for (int fi = 0; fi < static_cast<int>(free_verts.size()); ++fi)
    parts[find_part(fi)].push_back(fi);
  std::vector<int> part_keys;
  for (const auto& [k, _] : parts) part_keys.push_back(k);
  std::sort(part_keys.begin(), part_keys.end());

  for (int key : part_keys) {
    const auto& members = parts[key];
    PartSearch search;
    search.states = &states;
    std::vector<int> privates;
    for (int fi : members) {
      if (comp_count[fi] >= 2)
        search.shared.push_back(free_verts[fi]);
      else
        privates.push_back(fi);
    }
    if (static_cast<int>(search.shared.size()) > guard.max_shared)
      throw GuardError("sigma_maximal: " + std::to_string(search.shared.size()) +
                       " interacting vertices exceed the search guard of " +
                       std::to_string(guard.max_shared) +
                       " (raise with --guard-sigma)");
    contract(search.shared.size() <= 63, "sigma_maximal: search mask overflow");
    // Branch on vertices touching many components first.
    std::sort(search.shared.begin(), search.shared.end(), [&](int a, int b) {
      const int ca = comp_count[free_index.at(a)];
      const int cb = comp_count[free_index.at(b)];
      return ca != cb ? ca > cb : a < b;
    });
    search.comps_of.resize(search.shared.size());
    search.bound.resize(search.shared.size());
    for (std::size_t i = 0; i < search.shared.size(); ++i) {
      search.comps_of[i] = states_of[free_index.at(search.shared[i])];
      search.bound[i] = static_cast<int>(search.comps_of[i].size()) - 1;
    }
    search.suffix_bound.assign(search.shared.size() + 1, 0);
    for (int i = static_cast<int>(search.shared.size()) - 1; i >= 0; --i)
      search.suffix_bound[i] = search.suffix_bound[i + 1] + search.bound[i];
    search.dfs(0, 0, 0, 0);

    // Fix the chosen shared vertices in the component states.
    std::vector<int> chosen;
    for (std::size_t i = 0; i < search.shared.size(); ++i)
      if (search.best_pick & (std::uint64_t{1} << i)) chosen.push_back(search.shared[i]);
    for (int v : chosen)
      for (int si : states_of[free_index.at(v)]) {
        auto& st = states[si];
        st.cur_mask |= std::uint64_t{1} << st.comp->local_of[v];
        st.cur_drop = st.drop(st.cur_mask);
      }
    result.insert(result.end(), chosen.begin(), chosen.end());

    // Closure over private vertices: repeatedly add any vertex whose deletion
    // still costs its component a full matching edge. These additions keep
    // sigma constant and no superset can (shown by the unit-rate argument).
    std::sort(privates.begin(), privates.end(),
              [&](int a, int b) { return free_verts[a] < free_verts[b]; });
    bool changed = true;
    std::vector<char> taken(privates.size(), 0);
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < privates.size(); ++k) {
        if (taken[k]) continue;
        const int v = free_verts[privates[k]];
        auto& st = states[states_of[privates[k]].front()];
        const std::uint64_t bit = std::uint64_t{1} << st.comp->local_of[v];
        const int nd = st.drop(st.cur_mask | bit);
        if (nd == st.cur_drop + 1) {
          st.cur_mask |= bit;
          st.cur_drop = nd;
          taken[k] = 1;
          result.push_back(v);
          changed = true;
        }
      }
    }
  }

  return normalize_set(std::move(result));
}

}  // namespace matchram
