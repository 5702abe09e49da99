#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace dkl {

using Node = std::int32_t;
inline constexpr Node kRemoved = -1;

/// Undirected edge, stored with u < v.
struct Edge {
  Node u = 0;
  Node v = 0;

  Edge() = default;
  Edge(Node a, Node b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense ids 0..n-1. Immutable once built.
///
/// Edges are kept both as a lexicographically sorted list (the edge index
/// used by edge-valued witnesses) and as sorted per-node neighbor lists.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(int node_count, std::span<const Edge> edges);
  Graph(int node_count, std::initializer_list<std::pair<Node, Node>> edges);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Node> neighbors(Node v) const { return adjacency_[v]; }
  int degree(Node v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(Node a, Node b) const;

  /// Index of edge {a,b} in edges(), or -1.
  int edge_index(Node a, Node b) const;

  bool contains(Node v) const { return v >= 0 && v < node_count(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adjacency_;
};

/// Builds a graph from an edge list that may contain duplicates.
Graph graph_from_edges_dedup(int node_count, std::vector<Edge> edges);

/// Result of deleting nodes: the induced graph on the survivors plus the
/// old-id -> new-id table (kRemoved for deleted nodes).
struct Relabeled {
  Graph graph;
  std::vector<Node> old_to_new;
};

/// Keeps nodes with keep[v] == true, preserving their relative order.
Relabeled induced_subgraph(const Graph& g, const std::vector<bool>& keep);

struct MultiEdge {
  int id = 0;
  Node u = 0;
  Node v = 0;

  friend auto operator<=>(const MultiEdge&, const MultiEdge&) = default;
};

/// Undirected multigraph; parallel edges are distinguished by id. Edge ids
/// are exactly 0..m-1 and edges()[i].id == i.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Edges are given as endpoint pairs; the i-th pair receives id i.
  MultiGraph(int node_count, std::span<const std::pair<Node, Node>> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  const MultiEdge& edge(int id) const { return edges_[id]; }
  /// Ids of the edges incident to v, ascending.
  std::span<const int> incident(Node v) const { return incident_[v]; }

  bool is_simple() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<MultiEdge> edges_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace dkl
