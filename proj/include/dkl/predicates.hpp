#pragma once

#include <span>
#include <vector>

#include "dkl/graph.hpp"

namespace dkl {

// Solution predicates. Node sets are spans of ids; duplicates are allowed
// and ignored. Every id must be a node of g, otherwise InputError.

/// N[s] == V.
bool is_dominating_set(const Graph& g, std::span<const Node> s);
bool is_independent_set(const Graph& g, std::span<const Node> s);
/// Every edge has an endpoint in s.
bool is_vertex_cover(const Graph& g, std::span<const Node> s);
/// G[s] is connected. The empty set and singletons count as connected.
bool is_connected_induced(const Graph& g, std::span<const Node> s);

/// Pairwise disjoint edges with no edge of g joining endpoints of two
/// distinct members. Throws InputError if an edge is not in g.
bool is_induced_matching(const Graph& g, std::span<const Edge> m);
/// Same, with edges given as indices into g.edges().
bool is_induced_matching_by_index(const Graph& g, std::span<const int> edge_indices);

/// Classes of nodes with identical open neighborhoods, each sorted, ordered
/// by their lowest member.
std::vector<std::vector<Node>> twin_partition(const Graph& g);

/// Checks |b| <= d|a| where d is the peeling degeneracy of g. Requires a and
/// b to partition the nodes, b to be independent and every node of b to have
/// degree > d; ContractError otherwise. Edges inside a are allowed, which
/// covers the bipartite case.
bool bipartite_degenerate_bound_check(const Graph& g, std::span<const Node> a,
                                      std::span<const Node> b);

/// Membership mask; InputError on out-of-range ids.
std::vector<bool> node_mask(const Graph& g, std::span<const Node> s);

}  // namespace dkl
