#include "dkl/kernels.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <string>

#include "dkl/errors.hpp"

namespace dkl {

namespace {

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  return a > INT64_MAX - b ? INT64_MAX : a + b;
}

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > INT64_MAX / b ? INT64_MAX : a * b;
}

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) {
    // out * (n - r + i) / i stays integral at every step.
    if (out > INT64_MAX / (n - r + i)) return INT64_MAX;
    out = out * (n - r + i) / i;
  }
  return out;
}

void check_kd(int k, int d) {
  if (k < 0) throw InputError("k must be >= 0");
  if (d < 1) throw InputError("d must be >= 1");
}

// Removal-only view of the input: nodes die, surviving adjacency is the
// original adjacency restricted to live nodes.
class Shrinking {
 public:
  explicit Shrinking(const Graph& g) : g_(g), alive_(g.node_count(), true) {}

  bool alive(Node v) const { return alive_[v]; }
  void remove(Node v) { alive_[v] = false; }

  std::vector<Node> live_neighbors(Node v) const {
    std::vector<Node> out;
    for (Node w : g_.neighbors(v))
      if (alive_[w]) out.push_back(w);
    return out;
  }

  std::optional<Node> lowest_isolated() const {
    for (Node v = 0; v < g_.node_count(); ++v)
      if (alive_[v] && live_neighbors(v).empty()) return v;
    return std::nullopt;
  }

  // Twin classes of live nodes with their common neighborhood, ordered by
  // lowest member.
  std::vector<std::pair<std::vector<Node>, std::vector<Node>>> twin_classes() const {
    std::map<std::vector<Node>, int> index;
    std::vector<std::pair<std::vector<Node>, std::vector<Node>>> out;
    for (Node v = 0; v < g_.node_count(); ++v) {
      if (!alive_[v]) continue;
      auto nb = live_neighbors(v);
      auto [it, inserted] = index.try_emplace(nb, static_cast<int>(out.size()));
      if (inserted) out.push_back({{}, nb});
      out[it->second].first.push_back(v);
    }
    return out;
  }

  Relabeled result() const { return induced_subgraph(g_, alive_); }

 private:
  const Graph& g_;
  std::vector<bool> alive_;
};

std::int64_t count_alive(const std::vector<Node>& old_to_new) {
  return std::count_if(old_to_new.begin(), old_to_new.end(), [](Node v) { return v != kRemoved; });
}

ConvcKernel finish_convc(const Shrinking& state, int k, int d, RuleTrace trace) {
  auto [graph, old_to_new] = state.result();
  ConvcKernel out{std::move(graph), k, std::move(old_to_new), std::move(trace),
                  convc_size_bound(k, d), false};
  out.within_bound = out.graph.node_count() <= out.size_bound;
  return out;
}

CapvcKernel finish_capvc(const Shrinking& state, const CapVcInstance& inst, int d,
                         const std::vector<int>& capacity, RuleTrace trace) {
  auto [graph, old_to_new] = state.result();
  std::vector<int> caps(graph.node_count());
  for (Node v = 0; v < static_cast<Node>(old_to_new.size()); ++v)
    if (old_to_new[v] != kRemoved) caps[old_to_new[v]] = capacity[v];
  CapvcKernel out;
  out.instance = {std::move(graph), std::move(caps), inst.k};
  out.old_to_new = std::move(old_to_new);
  out.trace = std::move(trace);
  out.size_bound = capvc_size_bound(inst.k, d);
  out.within_bound = count_alive(out.old_to_new) <= out.size_bound;
  out.precondition_holds = inst.k + 1 > d;
  return out;
}

CapvcKernel canonical_no(const CapVcInstance& inst, int d, RuleTrace trace) {
  CapvcKernel out;
  out.instance = {Graph(2, {{0, 1}}), {0, 0}, inst.k};
  out.old_to_new.assign(inst.graph.node_count(), kRemoved);
  out.trace = std::move(trace);
  out.size_bound = capvc_size_bound(inst.k, d);
  out.within_bound = 2 <= out.size_bound;
  out.precondition_holds = inst.k + 1 > d;
  out.canonical_no = true;
  return out;
}

template <typename Classes>
void order_classes(Classes& classes, RuleOrder order) {
  if (order == RuleOrder::highest_first) std::reverse(classes.begin(), classes.end());
}

}  // namespace

std::int64_t convc_size_bound(int k, int d) {
  std::int64_t total = saturating_add(k, saturating_mul(d, k));
  for (int i = 1; i <= d; ++i) total = saturating_add(total, saturating_mul(i, binomial(k, i)));
  return total;
}

std::int64_t capvc_size_bound(int k, int d) {
  std::int64_t total = saturating_add(k, saturating_mul(d, k));
  for (int i = 1; i <= d; ++i)
    total = saturating_add(total, saturating_mul(k + 1, binomial(k, i)));
  return total;
}

ConvcKernel convc_kernelize(const Graph& g, int k, int d, RuleOrder order) {
  check_kd(k, d);
  Shrinking state(g);
  RuleTrace trace;
  for (;;) {
    if (auto v = state.lowest_isolated()) {
      state.remove(*v);
      trace.push_back(IsolatedRemoved{*v});
      continue;
    }
    auto classes = state.twin_classes();
    order_classes(classes, order);
    bool changed = false;
    for (auto& [members, common] : classes) {
      const int q = static_cast<int>(common.size());
      if (q > d || static_cast<int>(members.size()) <= q) continue;
      Node victim = order == RuleOrder::lowest_first ? members.back() : members.front();
      state.remove(victim);
      trace.push_back(TwinRemoved{members, victim});
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return finish_convc(state, k, d, std::move(trace));
}

CapvcKernel capvc_kernelize(const CapVcInstance& inst, int d, RuleOrder order) {
  require_valid(inst);
  check_kd(inst.k, d);
  Shrinking state(inst.graph);
  std::vector<int> capacity = inst.capacities;
  RuleTrace trace;
  for (;;) {
    if (auto v = state.lowest_isolated()) {
      state.remove(*v);
      trace.push_back(IsolatedRemoved{*v});
      continue;
    }
    auto classes = state.twin_classes();
    order_classes(classes, order);
    bool changed = false;
    for (auto& [members, common] : classes) {
      if (static_cast<int>(common.size()) > d ||
          static_cast<int>(members.size()) < inst.k + 2)
        continue;
      Node victim = members.front();
      for (Node v : members)
        if (capacity[v] < capacity[victim]) victim = v;
      state.remove(victim);
      bool negative = false;
      for (Node w : common) negative |= --capacity[w] < 0;
      trace.push_back(CapTwinRemoved{members, victim, common});
      if (negative) return canonical_no(inst, d, std::move(trace));
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return finish_capvc(state, inst, d, capacity, std::move(trace));
}

namespace {

// Checks that `members` is exactly a live twin class with common
// neighborhood `common`, and that `removed` belongs to it.
void check_class(const Shrinking& state, int n, const std::vector<Node>& members, Node removed,
                 std::vector<Node>& common) {
  if (members.empty()) throw ContractError("trace: empty twin class");
  for (Node v : members)
    if (v < 0 || v >= n || !state.alive(v)) throw ContractError("trace: class member not live");
  common = state.live_neighbors(members.front());
  for (Node v : members)
    if (state.live_neighbors(v) != common) throw ContractError("trace: members are not twins");
  for (Node v = 0; v < n; ++v)
    if (state.alive(v) && state.live_neighbors(v) == common &&
        !std::binary_search(members.begin(), members.end(), v))
      throw ContractError("trace: twin class is incomplete");
  if (!std::binary_search(members.begin(), members.end(), removed))
    throw ContractError("trace: removed node is not a class member");
}

void apply_isolated(Shrinking& state, int n, Node v) {
  if (v < 0 || v >= n || !state.alive(v) || !state.live_neighbors(v).empty())
    throw ContractError("trace: node " + std::to_string(v) + " is not a live isolated node");
  state.remove(v);
}

}  // namespace

ConvcKernel replay_convc(const Graph& g, int k, int d, const RuleTrace& trace) {
  check_kd(k, d);
  const int n = g.node_count();
  Shrinking state(g);
  for (const auto& event : trace) {
    if (auto* e = std::get_if<IsolatedRemoved>(&event)) {
      apply_isolated(state, n, e->node);
    } else if (auto* e = std::get_if<TwinRemoved>(&event)) {
      std::vector<Node> common;
      check_class(state, n, e->members, e->removed, common);
      if (static_cast<int>(common.size()) > d ||
          static_cast<int>(e->members.size()) <= static_cast<int>(common.size()))
        throw ContractError("trace: twin rule does not apply");
      state.remove(e->removed);
    } else {
      throw ContractError("trace: capacitated event in a connected vertex cover trace");
    }
  }
  return finish_convc(state, k, d, trace);
}

CapvcKernel replay_capvc(const CapVcInstance& inst, int d, const RuleTrace& trace) {
  require_valid(inst);
  check_kd(inst.k, d);
  const int n = inst.graph.node_count();
  Shrinking state(inst.graph);
  std::vector<int> capacity = inst.capacities;
  for (size_t i = 0; i < trace.size(); ++i) {
    const auto& event = trace[i];
    if (auto* e = std::get_if<IsolatedRemoved>(&event)) {
      apply_isolated(state, n, e->node);
    } else if (auto* e = std::get_if<CapTwinRemoved>(&event)) {
      std::vector<Node> common;
      check_class(state, n, e->members, e->removed, common);
      if (common != e->decremented) throw ContractError("trace: wrong decremented set");
      if (static_cast<int>(common.size()) > d ||
          static_cast<int>(e->members.size()) < inst.k + 2)
        throw ContractError("trace: capacitated twin rule does not apply");
      for (Node v : e->members)
        if (capacity[v] < capacity[e->removed])
          throw ContractError("trace: removed node does not have minimum capacity");
      state.remove(e->removed);
      bool negative = false;
      for (Node w : common) negative |= --capacity[w] < 0;
      if (negative) {
        if (i + 1 != trace.size()) throw ContractError("trace: events after a NO short-circuit");
        return canonical_no(inst, d, trace);
      }
    } else {
      throw ContractError("trace: uncapacitated twin event in a capacitated trace");
    }
  }
  return finish_capvc(state, inst, d, capacity, trace);
}

}  // namespace dkl
