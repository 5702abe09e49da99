#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "dkl/capacity.hpp"
#include "dkl/generators.hpp"
#include "dkl/graph.hpp"
#include "dkl/predicates.hpp"
#include "dkl/problems.hpp"

namespace test {

inline dkl::Graph complete(int n) {
  std::vector<dkl::Edge> edges;
  for (dkl::Node u = 0; u < n; ++u)
    for (dkl::Node v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return dkl::Graph(n, edges);
}

/// Center 0 with leaves 1..leaves.
inline dkl::Graph star(int leaves) {
  std::vector<dkl::Edge> edges;
  for (dkl::Node v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return dkl::Graph(leaves + 1, edges);
}

inline dkl::Graph path(int n) {
  std::vector<dkl::Edge> edges;
  for (dkl::Node v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return dkl::Graph(n, edges);
}

/// G(n, p).
inline dkl::Graph random_graph(int n, double p, std::uint64_t seed) {
  dkl::Rng rng(seed);
  std::vector<dkl::Edge> edges;
  for (dkl::Node u = 0; u < n; ++u)
    for (dkl::Node v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return dkl::Graph(n, edges);
}

/// The graph on n labelled nodes whose edge set is the bitmask over all
/// pairs in lexicographic order.
inline dkl::Graph graph_from_mask(int n, unsigned mask) {
  std::vector<dkl::Edge> edges;
  int bit = 0;
  for (dkl::Node u = 0; u < n; ++u)
    for (dkl::Node v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) edges.emplace_back(u, v);
  return dkl::Graph(n, edges);
}

// Naive unpruned references. Node subsets are bitmasks, so n <= 31.

inline std::vector<dkl::Node> members(unsigned mask) {
  std::vector<dkl::Node> out;
  for (dkl::Node v = 0; mask >> v; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

/// Smallest |S| over all subsets passing `accept`, or -1.
template <typename Accept>
int naive_min_subset(int n, Accept accept) {
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (best != -1 && size >= best) continue;
    if (accept(members(mask))) best = size;
  }
  return best;
}

inline int naive_min_ds(const dkl::Graph& g) {
  return naive_min_subset(g.node_count(),
                          [&](const std::vector<dkl::Node>& s) { return dkl::is_dominating_set(g, s); });
}

inline int naive_min_ids(const dkl::Graph& g) {
  return naive_min_subset(g.node_count(), [&](const std::vector<dkl::Node>& s) {
    return dkl::is_independent_set(g, s) && dkl::is_dominating_set(g, s);
  });
}

inline int naive_min_convc(const dkl::Graph& g) {
  return naive_min_subset(g.node_count(), [&](const std::vector<dkl::Node>& s) {
    return dkl::is_vertex_cover(g, s) && dkl::is_connected_induced(g, s);
  });
}

inline int naive_min_capvc(const dkl::CapVcInstance& inst) {
  return naive_min_subset(inst.graph.node_count(), [&](const std::vector<dkl::Node>& s) {
    return dkl::is_vertex_cover(inst.graph, s) &&
           dkl::cap_assignment_feasible(inst.graph, s, inst.capacities);
  });
}

/// Largest induced matching over all edge subsets.
inline int naive_max_im(const dkl::Graph& g) {
  const int m = g.edge_count();
  int best = 0;
  std::vector<dkl::Edge> chosen;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    int size = std::popcount(mask);
    if (size <= best || 2 * size > g.node_count()) continue;
    chosen.clear();
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) chosen.push_back(g.edges()[e]);
    if (dkl::is_induced_matching(g, chosen)) best = size;
  }
  return best;
}

/// RBDS by dynamic programming over covered-blue masks: fewest reds needed
/// to reach each mask. Independent of the branch-and-bound search.
inline bool rbds_by_dp(const dkl::RbdsInstance& inst) {
  const int b = inst.blue_count;
  std::vector<unsigned> cover(inst.red_count, 0);
  for (auto [r, x] : inst.edges) cover[r] |= 1u << x;
  const unsigned full = (1u << b) - 1;
  std::vector<int> fewest(1u << b, INT32_MAX);
  fewest[0] = 0;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (fewest[mask] == INT32_MAX) continue;
    for (unsigned c : cover) {
      unsigned next = mask | c;
      fewest[next] = std::min(fewest[next], fewest[mask] + 1);
    }
  }
  return fewest[full] <= inst.k;
}

inline bool mpm_by_enumeration(const dkl::MpmInstance& inst) {
  const int m = static_cast<int>(inst.graph.edges().size());
  const int half = inst.graph.node_count() / 2;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != half) continue;
    std::vector<int> ids;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) ids.push_back(e);
    if (dkl::is_multicolored_perfect_matching(inst, ids)) return true;
  }
  return false;
}

inline bool x3c_by_enumeration(const dkl::X3cInstance& inst) {
  const int m = static_cast<int>(inst.sets.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> ids;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) ids.push_back(e);
    if (dkl::is_exact_cover(inst, ids)) return true;
  }
  return false;
}

inline bool mcc_by_enumeration(const dkl::MccInstance& inst, int k) {
  const int n = inst.graph.node_count();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    if (dkl::is_multicolored_clique(inst, members(mask))) return true;
  }
  return false;
}

inline bool setcover_by_enumeration(const dkl::SetCoverInstance& inst) {
  const int m = static_cast<int>(inst.sets.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > inst.k) continue;
    std::vector<int> ids;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) ids.push_back(e);
    if (dkl::is_set_cover(inst, ids)) return true;
  }
  return false;
}

}  // namespace test
