#include "dkl/graph.hpp"

#include <algorithm>
#include <string>

#include "dkl/errors.hpp"

namespace dkl {

namespace {

std::string edge_text(Node a, Node b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

Graph::Graph(int node_count, std::span<const Edge> edges) {
  if (node_count < 0) throw InputError("negative node count");
  adjacency_.resize(node_count);
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= node_count)
      throw InputError("edge " + edge_text(e.u, e.v) + " out of range for n=" +
                       std::to_string(node_count));
    if (e.u == e.v) throw InputError("self-loop at node " + std::to_string(e.u));
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InputError("duplicate edge " + edge_text(dup->u, dup->v));
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph::Graph(int node_count, std::initializer_list<std::pair<Node, Node>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw InputError("self-loop at node " + std::to_string(a));
    list.emplace_back(a, b);
  }
  *this = Graph(node_count, list);
}

bool Graph::has_edge(Node a, Node b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

int Graph::edge_index(Node a, Node b) const {
  if (a == b) return -1;
  Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph graph_from_edges_dedup(int node_count, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(node_count, edges);
}

Relabeled induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  if (static_cast<int>(keep.size()) != g.node_count())
    throw InputError("keep mask size does not match node count");
  Relabeled out;
  out.old_to_new.assign(g.node_count(), kRemoved);
  Node next = 0;
  for (Node v = 0; v < g.node_count(); ++v)
    if (keep[v]) out.old_to_new[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (keep[e.u] && keep[e.v]) edges.emplace_back(out.old_to_new[e.u], out.old_to_new[e.v]);
  out.graph = Graph(next, edges);
  return out;
}

MultiGraph::MultiGraph(int node_count, std::span<const std::pair<Node, Node>> edges)
    : node_count_(node_count) {
  if (node_count < 0) throw InputError("negative node count");
  incident_.resize(node_count);
  edges_.reserve(edges.size());
  int id = 0;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count)
      throw InputError("multigraph edge " + edge_text(a, b) + " out of range for n=" +
                       std::to_string(node_count));
    if (a == b) throw InputError("self-loop at node " + std::to_string(a));
    edges_.push_back({id, std::min(a, b), std::max(a, b)});
    incident_[a].push_back(id);
    incident_[b].push_back(id);
    ++id;
  }
}

bool MultiGraph::is_simple() const {
  std::vector<std::pair<Node, Node>> pairs;
  pairs.reserve(edges_.size());
  for (const auto& e : edges_) pairs.emplace_back(e.u, e.v);
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

}  // namespace dkl
