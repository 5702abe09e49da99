#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dkl/graph.hpp"

namespace dkl {

/// Assigns every edge of g to an endpoint in `cover` so that node v receives
/// at most capacity[v] edges. Returns the chosen endpoint per edge index, or
/// nullopt if no such assignment exists.
///
/// Decided exactly as a bipartite b-matching (edges on one side, cover nodes
/// with multiplicity capacity[v] on the other) by augmenting paths.
/// Throws ContractError if `cover` is not a vertex cover and InputError if
/// `capacity` does not have one entry per node or has negative entries.
std::optional<std::vector<Node>> capacitated_assignment(const Graph& g,
                                                        std::span<const Node> cover,
                                                        std::span<const int> capacity);

bool cap_assignment_feasible(const Graph& g, std::span<const Node> cover,
                             std::span<const int> capacity);

}  // namespace dkl
