#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dkl/graph.hpp"

namespace dkl {

/// Multicolored Perfect Matching: colors[id] in 0..n/2-1 for every edge id.
struct MpmInstance {
  MultiGraph graph;
  std::vector<int> colors;

  friend bool operator==(const MpmInstance&, const MpmInstance&) = default;
};

/// 3-Exact Set Cover over universe 0..universe_size-1.
struct X3cInstance {
  int universe_size = 0;
  std::vector<std::array<int, 3>> sets;

  friend bool operator==(const X3cInstance&, const X3cInstance&) = default;
};

/// Multicolored Clique; node_colors[v] in 1..num_colors.
struct MccInstance {
  Graph graph;
  std::vector<int> node_colors;
  int num_colors = 0;

  friend bool operator==(const MccInstance&, const MccInstance&) = default;
};

/// d-Set Cover: cover 0..universe_size-1 by at most k of the given sets.
struct SetCoverInstance {
  int universe_size = 0;
  int d = 0;
  int k = 0;
  std::vector<std::vector<int>> sets;

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

/// Capacitated Vertex Cover with budget k.
struct CapVcInstance {
  Graph graph;
  std::vector<int> capacities;
  int k = 0;

  friend bool operator==(const CapVcInstance&, const CapVcInstance&) = default;
};

/// Red-Blue Dominating Set. Edges are (red id, blue id) pairs in the separate
/// id spaces 0..red_count-1 and 0..blue_count-1.
struct RbdsInstance {
  int red_count = 0;
  int blue_count = 0;
  std::vector<std::pair<int, int>> edges;
  int k = 0;

  friend bool operator==(const RbdsInstance&, const RbdsInstance&) = default;
};

/// The bipartite RBDS graph on unified ids: reds 0..R-1, blues R..R+B-1.
Graph rbds_graph(const RbdsInstance& inst);

/// Extra checks that only apply to composition inputs: n divisible by 3 for
/// X3C, bichromatic edges for MCC.
enum class Strictness { basic, composition };

// Each returns one human-readable message per violated invariant; an empty
// list means the instance is well formed.
std::vector<std::string> validate(const MpmInstance& inst);
std::vector<std::string> validate(const X3cInstance& inst,
                                  Strictness strictness = Strictness::basic);
std::vector<std::string> validate(const MccInstance& inst,
                                  Strictness strictness = Strictness::basic);
std::vector<std::string> validate(const SetCoverInstance& inst);
std::vector<std::string> validate(const CapVcInstance& inst);
std::vector<std::string> validate(const RbdsInstance& inst);

/// Throws InputError listing the violations, if any.
template <typename Instance, typename... Extra>
void require_valid(const Instance& inst, Extra... extra);

/// Is `matching` (edge ids) a perfect matching of inst with distinct colors?
bool is_multicolored_perfect_matching(const MpmInstance& inst, const std::vector<int>& matching);
/// Are the chosen set indices pairwise disjoint and covering the universe?
bool is_exact_cover(const X3cInstance& inst, const std::vector<int>& chosen);
/// Is `nodes` a clique with pairwise distinct colors?
bool is_multicolored_clique(const MccInstance& inst, const std::vector<Node>& nodes);
bool is_set_cover(const SetCoverInstance& inst, const std::vector<int>& chosen);
/// Do the chosen reds dominate every blue?
bool is_red_blue_dominating(const RbdsInstance& inst, const std::vector<int>& reds);

}  // namespace dkl

#include "dkl/errors.hpp"

template <typename Instance, typename... Extra>
void dkl::require_valid(const Instance& inst, Extra... extra) {
  auto violations = validate(inst, extra...);
  if (violations.empty()) return;
  std::string message = "invalid instance:";
  for (const auto& v : violations) message += " " + v + ";";
  throw InputError(message);
}
