#include "dkl/predicates.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dkl/degeneracy.hpp"
#include "dkl/errors.hpp"

namespace dkl {

std::vector<bool> node_mask(const Graph& g, std::span<const Node> s) {
  std::vector<bool> mask(g.node_count(), false);
  for (Node v : s) {
    if (!g.contains(v)) throw InputError("node id " + std::to_string(v) + " out of range");
    mask[v] = true;
  }
  return mask;
}

bool is_dominating_set(const Graph& g, std::span<const Node> s) {
  auto in = node_mask(g, s);
  for (Node v = 0; v < g.node_count(); ++v) {
    if (in[v]) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Node w) { return in[w]; })) return false;
  }
  return true;
}

bool is_independent_set(const Graph& g, std::span<const Node> s) {
  auto in = node_mask(g, s);
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return in[e.u] && in[e.v]; });
}

bool is_vertex_cover(const Graph& g, std::span<const Node> s) {
  auto in = node_mask(g, s);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

bool is_connected_induced(const Graph& g, std::span<const Node> s) {
  auto in = node_mask(g, s);
  int members = static_cast<int>(std::count(in.begin(), in.end(), true));
  if (members <= 1) return true;
  Node start = static_cast<Node>(std::find(in.begin(), in.end(), true) - in.begin());
  std::vector<bool> seen(g.node_count(), false);
  std::vector<Node> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (Node w : g.neighbors(v)) {
      if (!in[w] || seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == members;
}

bool is_induced_matching(const Graph& g, std::span<const Edge> m) {
  std::vector<int> owner(g.node_count(), -1);
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    const Edge& e = m[i];
    if (!g.has_edge(e.u, e.v))
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} is not in the graph");
    for (Node x : {e.u, e.v}) {
      if (owner[x] != -1) return false;
      owner[x] = i;
    }
  }
  for (const Edge& e : g.edges()) {
    if (owner[e.u] != -1 && owner[e.v] != -1 && owner[e.u] != owner[e.v]) return false;
  }
  return true;
}

bool is_induced_matching_by_index(const Graph& g, std::span<const int> edge_indices) {
  std::vector<Edge> m;
  m.reserve(edge_indices.size());
  for (int i : edge_indices) {
    if (i < 0 || i >= g.edge_count())
      throw InputError("edge index " + std::to_string(i) + " out of range");
    m.push_back(g.edges()[i]);
  }
  return is_induced_matching(g, m);
}

std::vector<std::vector<Node>> twin_partition(const Graph& g) {
  std::map<std::vector<Node>, int> class_of;
  std::vector<std::vector<Node>> classes;
  for (Node v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    std::vector<Node> key(nb.begin(), nb.end());
    auto [it, inserted] = class_of.try_emplace(std::move(key), static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

bool bipartite_degenerate_bound_check(const Graph& g, std::span<const Node> a,
                                      std::span<const Node> b) {
  auto in_a = node_mask(g, a);
  auto in_b = node_mask(g, b);
  for (Node v = 0; v < g.node_count(); ++v) {
    if (in_a[v] == in_b[v])
      throw ContractError("node " + std::to_string(v) + " is not in exactly one side");
  }
  for (const Edge& e : g.edges()) {
    if (in_b[e.u] && in_b[e.v]) throw ContractError("edge inside B");
  }
  const int d = degeneracy_ordering(g).degeneracy;
  for (Node v : b) {
    if (g.degree(v) <= d)
      throw ContractError("node " + std::to_string(v) + " in B has degree <= degeneracy " +
                          std::to_string(d));
  }
  auto count_a = std::count(in_a.begin(), in_a.end(), true);
  auto count_b = std::count(in_b.begin(), in_b.end(), true);
  return count_b <= static_cast<long>(d) * count_a;
}

}  // namespace dkl
