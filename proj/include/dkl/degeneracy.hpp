#pragma once

#include <span>
#include <vector>

#include "dkl/graph.hpp"

namespace dkl {

struct DegeneracyResult {
  int degeneracy = 0;
  /// Removal order; every node has at most `degeneracy` neighbors after it.
  std::vector<Node> ordering;
};

/// Exact degeneracy by repeated minimum-degree peeling. Among nodes of
/// minimum remaining degree the lowest id is removed first.
DegeneracyResult degeneracy_ordering(const Graph& g);

/// Largest number of neighbors any node has later in `ordering`.
/// Throws InputError unless `ordering` is a permutation of the nodes.
int max_right_degree(const Graph& g, std::span<const Node> ordering);

}  // namespace dkl
