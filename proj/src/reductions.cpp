#include "dkl/reductions.hpp"

#include <algorithm>

#include "dkl/errors.hpp"
#include "dkl/predicates.hpp"

namespace dkl {

namespace {

std::string call(const char* name, std::initializer_list<int> args) {
  std::string out = name;
  out += '(';
  bool first = true;
  for (int a : args) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + ')';
}

bool has_blue_without_red(const RbdsInstance& inst) {
  std::vector<bool> seen(inst.blue_count, false);
  for (auto [r, b] : inst.edges) seen[b] = true;
  return std::find(seen.begin(), seen.end(), false) != seen.end();
}

}  // namespace

DsReduction rbds_to_ds(const RbdsInstance& inst) {
  require_valid(inst);
  DsReduction out;
  out.k = inst.k + 1;
  if (has_blue_without_red(inst)) {
    out.graph = Graph(inst.k + 2, std::span<const Edge>{});
    for (int i = 0; i < inst.k + 2; ++i) out.labels.push_back(call("pad", {i}));
    return out;
  }
  const int R = inst.red_count, B = inst.blue_count;
  const Node apex = R + B, apex2 = R + B + 1;
  std::vector<Edge> edges;
  for (auto [r, b] : inst.edges) edges.emplace_back(r, R + b);
  for (Node r = 0; r < R; ++r) edges.emplace_back(apex, r);
  edges.emplace_back(apex, apex2);
  std::sort(edges.begin(), edges.end());
  out.graph = Graph(R + B + 2, edges);
  for (int r = 0; r < R; ++r) out.labels.push_back(call("red", {r}));
  for (int b = 0; b < B; ++b) out.labels.push_back(call("blue", {b}));
  out.labels.push_back("apex");
  out.labels.push_back("apex'");
  return out;
}

std::vector<int> rbds_witness_from_ds(const RbdsInstance& inst, std::span<const Node> ds) {
  auto reduced = rbds_to_ds(inst);
  std::vector<Node> distinct(ds.begin(), ds.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (static_cast<int>(distinct.size()) > reduced.k || !is_dominating_set(reduced.graph, distinct))
    throw ContractError("not a dominating set of size <= k+1 of the reduced graph");
  // Pad outputs are NO instances: no set of size k+1 dominates k+2 isolated nodes.
  const int R = inst.red_count;
  std::vector<int> reds;
  for (Node v : distinct) {
    if (v < R) {
      reds.push_back(v);
    } else if (v < R + inst.blue_count) {
      int best = R;
      for (Node w : reduced.graph.neighbors(v))
        if (w < R) best = std::min(best, static_cast<int>(w));
      reds.push_back(best);
    }
  }
  std::sort(reds.begin(), reds.end());
  reds.erase(std::unique(reds.begin(), reds.end()), reds.end());
  if (!is_red_blue_dominating(inst, reds) || static_cast<int>(reds.size()) > inst.k)
    throw ContractError("recovered reds do not solve the source instance");
  return reds;
}

MpmReduction mpm_simplify(const MpmInstance& inst) {
  require_valid(inst);
  const int n = inst.graph.node_count(), m = inst.graph.edge_count();
  MpmReduction out;
  std::vector<std::pair<Node, Node>> edges;
  std::vector<int> colors;
  for (int v = 0; v < n; ++v) out.labels.push_back(call("x", {v}));
  for (const auto& e : inst.graph.edges()) {
    const Node yu = n + 2 * e.id, yv = yu + 1;
    out.labels.push_back(call("y", {e.u, e.id}));
    out.labels.push_back(call("y", {e.v, e.id}));
    edges.emplace_back(yu, yv);
    colors.push_back(e.id);
    edges.emplace_back(e.u, yu);
    colors.push_back(m + inst.colors[e.id]);
    edges.emplace_back(e.v, yv);
    colors.push_back(e.id);
  }
  out.instance = {MultiGraph(n + 2 * m, edges), std::move(colors)};
  return out;
}

std::vector<int> mpm_simplify_lift(const MpmInstance& source, const std::vector<int>& matching) {
  if (!is_multicolored_perfect_matching(source, matching))
    throw ContractError("not a multicolored perfect matching of the source");
  std::vector<bool> in(source.graph.edge_count(), false);
  for (int e : matching) in[e] = true;
  std::vector<int> out;
  for (int e = 0; e < source.graph.edge_count(); ++e) {
    if (in[e]) {
      out.push_back(3 * e + 1);
      out.push_back(3 * e + 2);
    } else {
      out.push_back(3 * e);
    }
  }
  return out;
}

std::vector<int> mpm_simplify_back(const MpmInstance& source, const std::vector<int>& matching) {
  const auto reduced = mpm_simplify(source);
  if (!is_multicolored_perfect_matching(reduced.instance, matching))
    throw ContractError("not a multicolored perfect matching of the simplified instance");
  std::vector<bool> yy(source.graph.edge_count(), false);
  for (int id : matching)
    if (id % 3 == 0) yy[id / 3] = true;
  std::vector<int> out;
  for (int e = 0; e < source.graph.edge_count(); ++e)
    if (!yy[e]) out.push_back(e);
  return out;
}

CapVcInstance setcover_to_capvc(const SetCoverInstance& inst, CapacityVariant variant) {
  require_valid(inst);
  if (inst.universe_size != inst.d * inst.k)
    throw InputError("universe size " + std::to_string(inst.universe_size) + " != d*k = " +
                     std::to_string(inst.d * inst.k));
  const int U = inst.universe_size, S = static_cast<int>(inst.sets.size());
  std::vector<Edge> edges;
  for (int j = 0; j < S; ++j)
    for (int u : inst.sets[j]) edges.emplace_back(u, U + j);
  for (int u = 0; u < U; ++u) edges.emplace_back(u, U + S + u);
  std::sort(edges.begin(), edges.end());
  CapVcInstance out{Graph(2 * U + S, edges), {}, (inst.d + 1) * inst.k};
  for (Node v = 0; v < out.graph.node_count(); ++v) {
    bool set_node = v >= U && v < U + S;
    int deg = out.graph.degree(v);
    out.capacities.push_back(set_node && variant == CapacityVariant::corrected ? deg : deg - 1);
  }
  return out;
}

std::vector<std::string> setcover_to_capvc_labels(const SetCoverInstance& inst) {
  std::vector<std::string> out;
  for (int u = 0; u < inst.universe_size; ++u) out.push_back(call("elem", {u}));
  for (int j = 0; j < static_cast<int>(inst.sets.size()); ++j) out.push_back(call("set", {j}));
  for (int u = 0; u < inst.universe_size; ++u) out.push_back(call("leaf", {u}));
  return out;
}

std::vector<int> setcover_witness_from_capvc(const SetCoverInstance& inst,
                                             std::span<const Node> cover) {
  const int U = inst.universe_size, S = static_cast<int>(inst.sets.size());
  std::vector<int> out;
  for (Node v : cover) {
    if (v < 0 || v >= 2 * U + S) throw InputError("node " + std::to_string(v) + " out of range");
    if (v >= U && v < U + S) out.push_back(v - U);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dkl
