#include "dkl/problems.hpp"

#include <algorithm>
#include <set>

namespace dkl {

namespace {

std::string at(const char* what, size_t index) {
  return std::string(what) + " " + std::to_string(index) + ": ";
}

}  // namespace

Graph rbds_graph(const RbdsInstance& inst) {
  std::vector<Edge> edges;
  edges.reserve(inst.edges.size());
  for (auto [r, b] : inst.edges) edges.emplace_back(r, inst.red_count + b);
  return Graph(inst.red_count + inst.blue_count, edges);
}

std::vector<std::string> validate(const MpmInstance& inst) {
  std::vector<std::string> out;
  const int n = inst.graph.node_count();
  if (n % 2 != 0) out.push_back("n odd (" + std::to_string(n) + ")");
  if (static_cast<int>(inst.colors.size()) != inst.graph.edge_count()) {
    out.push_back("expected " + std::to_string(inst.graph.edge_count()) + " edge colors, got " +
                  std::to_string(inst.colors.size()));
    return out;
  }
  for (size_t e = 0; e < inst.colors.size(); ++e) {
    int c = inst.colors[e];
    if (c < 0 || c >= n / 2)
      out.push_back(at("edge", e) + "color " + std::to_string(c) + " outside 0.." +
                    std::to_string(n / 2 - 1));
  }
  return out;
}

std::vector<std::string> validate(const X3cInstance& inst, Strictness strictness) {
  std::vector<std::string> out;
  const int n = inst.universe_size;
  if (n < 0) out.push_back("negative universe size");
  if (strictness == Strictness::composition && n % 3 != 0)
    out.push_back("universe size " + std::to_string(n) + " not divisible by 3");
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    const auto& s = inst.sets[i];
    for (int x : s)
      if (x < 0 || x >= n) out.push_back(at("set", i) + "element " + std::to_string(x) + " out of range");
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
      out.push_back(at("set", i) + "elements not distinct");
  }
  return out;
}

std::vector<std::string> validate(const MccInstance& inst, Strictness strictness) {
  std::vector<std::string> out;
  const int n = inst.graph.node_count();
  if (inst.num_colors < 1) out.push_back("num_colors must be positive");
  if (static_cast<int>(inst.node_colors.size()) != n) {
    out.push_back("expected " + std::to_string(n) + " node colors, got " +
                  std::to_string(inst.node_colors.size()));
    return out;
  }
  for (int v = 0; v < n; ++v) {
    int c = inst.node_colors[v];
    if (c < 1 || c > inst.num_colors)
      out.push_back(at("node", v) + "color " + std::to_string(c) + " outside 1.." +
                    std::to_string(inst.num_colors));
  }
  if (strictness == Strictness::composition) {
    for (const Edge& e : inst.graph.edges())
      if (inst.node_colors[e.u] == inst.node_colors[e.v])
        out.push_back("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} is monochromatic");
  }
  return out;
}

std::vector<std::string> validate(const SetCoverInstance& inst) {
  std::vector<std::string> out;
  if (inst.universe_size < 0) out.push_back("negative universe size");
  if (inst.d < 1) out.push_back("d must be positive");
  if (inst.k < 0) out.push_back("negative k");
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    const auto& s = inst.sets[i];
    if (static_cast<int>(s.size()) != inst.d)
      out.push_back(at("set", i) + "has " + std::to_string(s.size()) + " elements, expected " +
                    std::to_string(inst.d));
    std::set<int> seen;
    for (int x : s) {
      if (x < 0 || x >= inst.universe_size)
        out.push_back(at("set", i) + "element " + std::to_string(x) + " out of range");
      if (!seen.insert(x).second) out.push_back(at("set", i) + "repeated element " + std::to_string(x));
    }
  }
  return out;
}

std::vector<std::string> validate(const CapVcInstance& inst) {
  std::vector<std::string> out;
  const int n = inst.graph.node_count();
  if (inst.k < 0) out.push_back("negative k");
  if (static_cast<int>(inst.capacities.size()) != n) {
    out.push_back("expected " + std::to_string(n) + " capacities, got " +
                  std::to_string(inst.capacities.size()));
    return out;
  }
  for (int v = 0; v < n; ++v)
    if (inst.capacities[v] < 0) out.push_back(at("node", v) + "negative capacity");
  return out;
}

std::vector<std::string> validate(const RbdsInstance& inst) {
  std::vector<std::string> out;
  if (inst.red_count < 0 || inst.blue_count < 0) out.push_back("negative side size");
  if (inst.k < 0) out.push_back("negative k");
  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < inst.edges.size(); ++i) {
    auto [r, b] = inst.edges[i];
    if (r < 0 || r >= inst.red_count) out.push_back(at("edge", i) + "red id out of range");
    if (b < 0 || b >= inst.blue_count) out.push_back(at("edge", i) + "blue id out of range");
    if (!seen.insert(inst.edges[i]).second) out.push_back(at("edge", i) + "duplicate");
  }
  return out;
}

bool is_multicolored_perfect_matching(const MpmInstance& inst, const std::vector<int>& matching) {
  const int n = inst.graph.node_count();
  if (static_cast<int>(matching.size()) * 2 != n) return false;
  std::vector<bool> covered(n, false);
  std::vector<bool> color_used(std::max(n / 2, 1), false);
  for (int id : matching) {
    if (id < 0 || id >= inst.graph.edge_count()) return false;
    const auto& e = inst.graph.edge(id);
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = true;
    int c = inst.colors[id];
    if (c < 0 || c >= n / 2 || color_used[c]) return false;
    color_used[c] = true;
  }
  return true;
}

bool is_exact_cover(const X3cInstance& inst, const std::vector<int>& chosen) {
  std::vector<bool> covered(inst.universe_size, false);
  int count = 0;
  for (int i : chosen) {
    if (i < 0 || i >= static_cast<int>(inst.sets.size())) return false;
    for (int x : inst.sets[i]) {
      if (x < 0 || x >= inst.universe_size || covered[x]) return false;
      covered[x] = true;
      ++count;
    }
  }
  return count == inst.universe_size;
}

bool is_multicolored_clique(const MccInstance& inst, const std::vector<Node>& nodes) {
  std::set<int> colors;
  for (Node v : nodes) {
    if (!inst.graph.contains(v)) return false;
    if (!colors.insert(inst.node_colors[v]).second) return false;
  }
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (!inst.graph.has_edge(nodes[i], nodes[j])) return false;
  return true;
}

bool is_set_cover(const SetCoverInstance& inst, const std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) > inst.k) return false;
  std::vector<bool> covered(inst.universe_size, false);
  for (int i : chosen) {
    if (i < 0 || i >= static_cast<int>(inst.sets.size())) return false;
    for (int x : inst.sets[i])
      if (x >= 0 && x < inst.universe_size) covered[x] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

bool is_red_blue_dominating(const RbdsInstance& inst, const std::vector<int>& reds) {
  std::vector<bool> chosen(inst.red_count, false);
  for (int r : reds) {
    if (r < 0 || r >= inst.red_count) return false;
    chosen[r] = true;
  }
  std::vector<bool> dominated(inst.blue_count, false);
  for (auto [r, b] : inst.edges)
    if (chosen[r]) dominated[b] = true;
  return std::all_of(dominated.begin(), dominated.end(), [](bool c) { return c; });
}

}  // namespace dkl
