#pragma once

#include <span>
#include <string>
#include <vector>

#include "dkl/graph.hpp"
#include "dkl/problems.hpp"

namespace dkl {

// Each reduction output carries one label per output node naming its origin.
// Label strings:
//   rbds_to_ds         red(r) blue(b) apex apex' pad(i)
//   mpm_simplify       x(v) y(v,e)
//   setcover_to_capvc  elem(u) set(j) leaf(u)

struct DsReduction {
  Graph graph;
  int k = 0;
  std::vector<std::string> labels;
};

/// Reds, then blues, then the apex r (adjacent to every red and to r') and
/// r'. k' = k + 1. A blue with no red neighbor makes the source trivially NO;
/// such sources map to k + 2 isolated pad nodes with the same k'.
DsReduction rbds_to_ds(const RbdsInstance& inst);

/// Red ids of an RBDS solution recovered from a dominating set of
/// rbds_to_ds(inst): apex nodes are dropped, each blue is replaced by its
/// lowest red neighbor. ContractError if `ds` does not dominate the output
/// graph within k'.
std::vector<int> rbds_witness_from_ds(const RbdsInstance& inst, std::span<const Node> ds);

struct MpmReduction {
  MpmInstance instance;
  std::vector<std::string> labels;
};

/// Simple-graph MPM instance on x(v) for every node, then y(u,e), y(v,e)
/// for every edge e = {u < v} in id order. Edge e yields output edges
/// 3e (y-y, color e), 3e+1 (x_u y(u,e), color m + col(e)) and
/// 3e+2 (x_v y(v,e), color e).
MpmReduction mpm_simplify(const MpmInstance& inst);

/// Output matching for a source matching: both x-y edges of matched edges,
/// the y-y edge of the rest. Sorted edge ids.
std::vector<int> mpm_simplify_lift(const MpmInstance& source, const std::vector<int>& matching);

/// Source edges whose y-y edge is not in the output matching.
std::vector<int> mpm_simplify_back(const MpmInstance& source, const std::vector<int>& matching);

/// literal: every capacity is degree - 1. corrected: set nodes get their
/// degree d instead.
enum class CapacityVariant { literal, corrected };

/// Elements, then sets, then one leaf per element. Edges: element-set
/// incidence and element-leaf. Budget (d+1)k. InputError unless
/// universe_size == d k.
CapVcInstance setcover_to_capvc(const SetCoverInstance& inst, CapacityVariant variant);
std::vector<std::string> setcover_to_capvc_labels(const SetCoverInstance& inst);

/// Set indices of the set nodes in `cover`.
std::vector<int> setcover_witness_from_capvc(const SetCoverInstance& inst,
                                             std::span<const Node> cover);

}  // namespace dkl
