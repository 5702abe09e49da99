#include "dkl/degeneracy.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dkl/errors.hpp"

namespace dkl {

DegeneracyResult degeneracy_ordering(const Graph& g) {
  const int n = g.node_count();
  DegeneracyResult result;
  result.ordering.reserve(n);

  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  std::set<std::pair<int, Node>> queue;
  for (Node v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  while (!queue.empty()) {
    auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    result.degeneracy = std::max(result.degeneracy, deg);
    result.ordering.push_back(v);
    for (Node w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      --degree[w];
      queue.emplace(degree[w], w);
    }
  }
  return result;
}

int max_right_degree(const Graph& g, std::span<const Node> ordering) {
  const int n = g.node_count();
  if (static_cast<int>(ordering.size()) != n) throw InputError("ordering is not a permutation");
  std::vector<int> position(n, -1);
  for (int p = 0; p < n; ++p) {
    Node v = ordering[p];
    if (!g.contains(v) || position[v] != -1)
      throw InputError("ordering is not a permutation (node " + std::to_string(v) + ")");
    position[v] = p;
  }
  int worst = 0;
  for (Node v = 0; v < n; ++v) {
    int later = 0;
    for (Node w : g.neighbors(v))
      if (position[w] > position[v]) ++later;
    worst = std::max(worst, later);
  }
  return worst;
}

}  // namespace dkl
