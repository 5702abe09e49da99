#include "dkl/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>

#include "dkl/capacity.hpp"
#include "dkl/errors.hpp"
#include "dkl/predicates.hpp"

namespace dkl {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("DKL_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultBudget;
}

namespace {

using Witness = std::vector<int>;

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void tick() {
    if (used_.fetch_add(1, std::memory_order_relaxed) >= limit_)
      throw BudgetExceeded("oracle work budget of " + std::to_string(limit_) +
                           " search nodes exceeded");
  }

 private:
  std::atomic<std::uint64_t> used_{0};
  std::uint64_t limit_;
};

// The root of a search tree: either already decided, or a list of branches
// explored in order. Branch i's subtree is searched completely before branch
// i+1, so the first successful branch index fixes the witness.
struct Root {
  enum class Kind { solved, failed, branching } kind = Kind::failed;
  Witness witness;
  int branches = 0;

  static Root solved(Witness w) { return {Kind::solved, std::move(w), 0}; }
  static Root failed() { return {Kind::failed, {}, 0}; }
  static Root branching(int count) {
    return count == 0 ? failed() : Root{Kind::branching, {}, count};
  }
};

// Search must provide `Root root() const` and
// `std::optional<Witness> run(int branch, Budget&) const`.
template <typename Search>
std::optional<Witness> drive(const Search& search, const SolverOptions& options) {
  Budget budget(options.budget);
  budget.tick();
  Root root = search.root();
  if (root.kind == Root::Kind::solved) return root.witness;
  if (root.kind == Root::Kind::failed) return std::nullopt;

  if (options.execution == Execution::serial) {
    for (int b = 0; b < root.branches; ++b)
      if (auto w = search.run(b, budget)) return w;
    return std::nullopt;
  }

  std::vector<std::optional<Witness>> found(root.branches);
  std::atomic<int> best{INT_MAX};
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int b = 0; b < root.branches; ++b) {
    if (b > best.load(std::memory_order_relaxed)) continue;
    try {
      found[b] = search.run(b, budget);
      if (found[b]) {
        int current = best.load();
        while (b < current && !best.compare_exchange_weak(current, b)) {
        }
      }
    } catch (...) {
#pragma omp critical(dkl_oracle_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  int winner = best.load();
  // A budget failure only matters if it could hide an earlier solution.
  if (failure && winner == INT_MAX) std::rethrow_exception(failure);
  if (failure) {
    for (int b = 0; b < winner; ++b)
      if (!found[b]) std::rethrow_exception(failure);
  }
  if (winner == INT_MAX) return std::nullopt;
  return found[winner];
}

Witness sorted(Witness w) {
  std::sort(w.begin(), w.end());
  return w;
}

SolveResult finish(std::optional<Witness> w) {
  if (!w) return {};
  return {true, sorted(std::move(*w))};
}

// Closed neighborhoods, sorted.
std::vector<std::vector<Node>> closed_neighborhoods(const Graph& g) {
  std::vector<std::vector<Node>> out(g.node_count());
  for (Node v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    out[v].assign(nb.begin(), nb.end());
    out[v].insert(std::upper_bound(out[v].begin(), out[v].end(), v), v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Covering searches: pick k "choices" so that every "target" is hit. Targets
// are hit by choices through `hitters[target]` / `hits[choice]`. Branches on
// the unhit target with the fewest usable hitters (lowest id on ties).
// Optionally, chosen choices must be pairwise non-conflicting (IDS).

struct CoverProblem {
  int choices = 0;
  std::vector<std::vector<int>> hitters;  // per target: choices hitting it
  std::vector<std::vector<int>> hits;     // per choice: targets it hits
  std::vector<std::vector<int>> conflicts;  // per choice: choices it excludes
  int k = 0;
};

class CoverSearch {
 public:
  explicit CoverSearch(const CoverProblem& p) : p_(p) {
    for (const auto& h : p_.hits) max_hits_ = std::max(max_hits_, static_cast<int>(h.size()));
  }

  Root root() const {
    State s(p_);
    int target = s.pick_target(p_);
    if (target == -1) return Root::solved({});
    if (p_.k == 0) return Root::failed();
    return Root::branching(static_cast<int>(s.options(p_, target).size()));
  }

  std::optional<Witness> run(int branch, Budget& budget) const {
    State s(p_);
    int target = s.pick_target(p_);
    int choice = s.options(p_, target)[branch];
    s.add(p_, choice);
    if (search(s, budget)) return s.chosen;
    return std::nullopt;
  }

 private:
  struct State {
    explicit State(const CoverProblem& p)
        : hit_count(p.hitters.size(), 0),
          blocked(p.choices, 0),
          unhit(static_cast<int>(p.hitters.size())) {}

    std::vector<int> hit_count;
    std::vector<int> blocked;
    std::vector<int> chosen;
    int unhit;

    bool usable(int c) const { return blocked[c] == 0; }

    std::vector<int> options(const CoverProblem& p, int target) const {
      std::vector<int> out;
      for (int c : p.hitters[target])
        if (usable(c)) out.push_back(c);
      return out;
    }

    int pick_target(const CoverProblem& p) const {
      int best = -1;
      int best_count = INT_MAX;
      for (int t = 0; t < static_cast<int>(p.hitters.size()); ++t) {
        if (hit_count[t] > 0) continue;
        int count = 0;
        for (int c : p.hitters[t]) count += usable(c) ? 1 : 0;
        if (count < best_count) {
          best = t;
          best_count = count;
          if (count == 0) break;
        }
      }
      return best;
    }

    void add(const CoverProblem& p, int c) {
      chosen.push_back(c);
      ++blocked[c];
      for (int t : p.hits[c])
        if (hit_count[t]++ == 0) --unhit;
      if (!p.conflicts.empty())
        for (int o : p.conflicts[c]) ++blocked[o];
    }

    void remove(const CoverProblem& p, int c) {
      chosen.pop_back();
      --blocked[c];
      for (int t : p.hits[c])
        if (--hit_count[t] == 0) ++unhit;
      if (!p.conflicts.empty())
        for (int o : p.conflicts[c]) --blocked[o];
    }
  };

  bool search(State& s, Budget& budget) const {
    budget.tick();
    if (s.unhit == 0) return true;
    int remaining = p_.k - static_cast<int>(s.chosen.size());
    if (remaining <= 0) return false;
    if (static_cast<long>(s.unhit) > static_cast<long>(remaining) * max_hits_) return false;
    int target = s.pick_target(p_);
    for (int c : s.options(p_, target)) {
      s.add(p_, c);
      if (search(s, budget)) return true;
      s.remove(p_, c);
    }
    return false;
  }

  const CoverProblem& p_;
  int max_hits_ = 0;
};

CoverProblem dominating_problem(const Graph& g, int k) {
  CoverProblem p;
  p.choices = g.node_count();
  p.hitters = closed_neighborhoods(g);
  p.hits = p.hitters;
  p.k = k;
  return p;
}

// ---------------------------------------------------------------------------
// Vertex-cover enumeration in id order: each node is either left out (all its
// neighbors forced in) or taken. "Out" is tried first. Every cover of size
// <= k reaches a leaf, where `accept` decides.

template <typename Accept>
class CoverEnumeration {
 public:
  CoverEnumeration(const Graph& g, int k, Accept accept)
      : g_(g), k_(k), accept_(std::move(accept)), prefix_(std::min(g.node_count(), 4)) {}

  Root root() const { return Root::branching(1 << prefix_); }

  std::optional<Witness> run(int branch, Budget& budget) const {
    State s(g_.node_count());
    for (int i = 0; i < prefix_; ++i) {
      bool take = (branch >> (prefix_ - 1 - i)) & 1;
      if (!decide(s, i, take)) return std::nullopt;
    }
    if (search(s, prefix_, budget)) return s.members();
    return std::nullopt;
  }

 private:
  struct State {
    explicit State(int n) : status(n, 0), out_neighbors(n, 0) {}
    std::vector<int> status;  // 0 undecided, 1 in, 2 out
    std::vector<int> out_neighbors;
    int in_count = 0;
    int forced_pending = 0;  // undecided nodes with an out-neighbor

    Witness members() const {
      Witness w;
      for (int v = 0; v < static_cast<int>(status.size()); ++v)
        if (status[v] == 1) w.push_back(v);
      return w;
    }
  };

  // Applies the decision for node v; false if infeasible.
  bool decide(State& s, Node v, bool take) const {
    if (s.out_neighbors[v] > 0) {
      if (!take) return false;
      --s.forced_pending;
    }
    if (take) {
      s.status[v] = 1;
      ++s.in_count;
    } else {
      s.status[v] = 2;
      for (Node w : g_.neighbors(v)) {
        if (s.status[w] == 2) return false;
        if (s.status[w] == 0 && s.out_neighbors[w]++ == 0) ++s.forced_pending;
      }
    }
    return s.in_count + s.forced_pending <= k_;
  }

  void undo(State& s, Node v, bool take) const {
    if (take) {
      --s.in_count;
    } else {
      for (Node w : g_.neighbors(v))
        if (s.status[w] == 0 && --s.out_neighbors[w] == 0) --s.forced_pending;
    }
    s.status[v] = 0;
    if (s.out_neighbors[v] > 0) ++s.forced_pending;
  }

  bool search(State& s, Node v, Budget& budget) const {
    budget.tick();
    if (v == g_.node_count()) return accept_(s.members());
    for (bool take : {false, true}) {
      // decide() may bail out half way; undo() mirrors exactly what it did
      // only on success, so work on a copy for the infeasible case.
      if (take || s.out_neighbors[v] == 0) {
        bool conflict = false;
        if (!take)
          for (Node w : g_.neighbors(v)) conflict = conflict || s.status[w] == 2;
        if (conflict) continue;
        if (!decide(s, v, take)) {
          undo(s, v, take);
          continue;
        }
        if (search(s, v + 1, budget)) return true;
        undo(s, v, take);
      }
    }
    return false;
  }

  const Graph& g_;
  int k_;
  Accept accept_;
  int prefix_;
};

// ---------------------------------------------------------------------------

class InducedMatchingSearch {
 public:
  InducedMatchingSearch(const Graph& g, int k) : g_(g), k_(k) {}

  Root root() const {
    if (k_ <= 0) return Root::solved({});
    State s(g_.node_count());
    Node v = pick(s);
    if (v == kRemoved) return Root::failed();
    return Root::branching(static_cast<int>(partners(s, v).size()) + 1);
  }

  std::optional<Witness> run(int branch, Budget& budget) const {
    State s(g_.node_count());
    Node v = pick(s);
    auto options = partners(s, v);
    if (branch < static_cast<int>(options.size())) {
      take(s, v, options[branch], +1);
      s.edges.push_back(g_.edge_index(v, options[branch]));
    } else {
      s.skipped[v] = true;
    }
    if (search(s, budget)) return s.edges;
    return std::nullopt;
  }

 private:
  struct State {
    explicit State(int n) : blocked(n, 0), skipped(n, false) {}
    std::vector<int> blocked;
    std::vector<bool> skipped;
    Witness edges;
  };

  bool available(const State& s, Node v) const { return s.blocked[v] == 0 && !s.skipped[v]; }

  std::vector<Node> partners(const State& s, Node v) const {
    std::vector<Node> out;
    for (Node w : g_.neighbors(v))
      if (available(s, w)) out.push_back(w);
    return out;
  }

  Node pick(const State& s) const {
    for (Node v = 0; v < g_.node_count(); ++v) {
      if (!available(s, v)) continue;
      for (Node w : g_.neighbors(v))
        if (available(s, w)) return v;
    }
    return kRemoved;
  }

  int live_nodes(const State& s) const {
    int count = 0;
    for (Node v = 0; v < g_.node_count(); ++v) {
      if (!available(s, v)) continue;
      for (Node w : g_.neighbors(v)) {
        if (available(s, w)) {
          ++count;
          break;
        }
      }
    }
    return count;
  }

  void take(State& s, Node a, Node b, int delta) const {
    for (Node x : {a, b}) {
      s.blocked[x] += delta;
      for (Node w : g_.neighbors(x)) s.blocked[w] += delta;
    }
  }

  bool search(State& s, Budget& budget) const {
    budget.tick();
    int have = static_cast<int>(s.edges.size());
    if (have >= k_) return true;
    if (have + live_nodes(s) / 2 < k_) return false;
    Node v = pick(s);
    if (v == kRemoved) return false;
    for (Node w : partners(s, v)) {
      take(s, v, w, +1);
      s.edges.push_back(g_.edge_index(v, w));
      if (search(s, budget)) return true;
      s.edges.pop_back();
      take(s, v, w, -1);
    }
    s.skipped[v] = true;
    if (search(s, budget)) return true;
    s.skipped[v] = false;
    return false;
  }

  const Graph& g_;
  int k_;
};

// ---------------------------------------------------------------------------

class MpmSearch {
 public:
  explicit MpmSearch(const MpmInstance& inst) : inst_(inst) {}

  Root root() const {
    State s(inst_);
    Node v = pick(s);
    if (v == kRemoved) return Root::solved({});
    return Root::branching(static_cast<int>(options(s, v).size()));
  }

  std::optional<Witness> run(int branch, Budget& budget) const {
    State s(inst_);
    Node v = pick(s);
    int e = options(s, v)[branch];
    apply(s, e, true);
    if (search(s, budget)) return s.chosen;
    return std::nullopt;
  }

 private:
  struct State {
    explicit State(const MpmInstance& inst)
        : matched(inst.graph.node_count(), false),
          color_used(std::max(inst.graph.node_count() / 2, 1), false) {}
    std::vector<bool> matched;
    std::vector<bool> color_used;
    Witness chosen;
  };

  std::vector<int> options(const State& s, Node v) const {
    std::vector<int> out;
    for (int id : inst_.graph.incident(v)) {
      const auto& e = inst_.graph.edge(id);
      Node other = e.u == v ? e.v : e.u;
      if (!s.matched[other] && !s.color_used[inst_.colors[id]]) out.push_back(id);
    }
    return out;
  }

  // Unmatched node with the fewest usable edges.
  Node pick(const State& s) const {
    Node best = kRemoved;
    size_t best_count = SIZE_MAX;
    for (Node v = 0; v < inst_.graph.node_count(); ++v) {
      if (s.matched[v]) continue;
      size_t count = options(s, v).size();
      if (count < best_count) {
        best = v;
        best_count = count;
        if (count == 0) break;
      }
    }
    return best;
  }

  void apply(State& s, int id, bool on) const {
    const auto& e = inst_.graph.edge(id);
    s.matched[e.u] = s.matched[e.v] = on;
    s.color_used[inst_.colors[id]] = on;
    if (on)
      s.chosen.push_back(id);
    else
      s.chosen.pop_back();
  }

  bool search(State& s, Budget& budget) const {
    budget.tick();
    Node v = pick(s);
    if (v == kRemoved) return true;
    for (int id : options(s, v)) {
      apply(s, id, true);
      if (search(s, budget)) return true;
      apply(s, id, false);
    }
    return false;
  }

  const MpmInstance& inst_;
};

// ---------------------------------------------------------------------------

class CliqueSearch {
 public:
  CliqueSearch(const MccInstance& inst, int k) : inst_(inst), k_(k) {}

  Root root() const {
    if (k_ <= 0) return Root::solved({});
    if (k_ > inst_.num_colors) return Root::failed();
    return Root::branching(inst_.graph.node_count());
  }

  std::optional<Witness> run(int branch, Budget& budget) const {
    Witness chosen{branch};
    std::vector<Node> candidates;
    for (Node w : inst_.graph.neighbors(branch))
      if (w > branch && inst_.node_colors[w] != inst_.node_colors[branch]) candidates.push_back(w);
    if (search(chosen, candidates, budget)) return chosen;
    return std::nullopt;
  }

 private:
  int distinct_colors(const std::vector<Node>& nodes) const {
    std::vector<bool> seen(inst_.num_colors + 1, false);
    int count = 0;
    for (Node v : nodes)
      if (!seen[inst_.node_colors[v]]) {
        seen[inst_.node_colors[v]] = true;
        ++count;
      }
    return count;
  }

  bool search(Witness& chosen, const std::vector<Node>& candidates, Budget& budget) const {
    budget.tick();
    if (static_cast<int>(chosen.size()) == k_) return true;
    if (static_cast<int>(chosen.size()) + distinct_colors(candidates) < k_) return false;
    for (size_t i = 0; i < candidates.size(); ++i) {
      Node v = candidates[i];
      std::vector<Node> next;
      for (size_t j = i + 1; j < candidates.size(); ++j) {
        Node w = candidates[j];
        if (inst_.node_colors[w] != inst_.node_colors[v] && inst_.graph.has_edge(v, w))
          next.push_back(w);
      }
      chosen.push_back(v);
      if (search(chosen, next, budget)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const MccInstance& inst_;
  int k_;
};

void check_k(int k) {
  if (k < 0) throw InputError("k must be nonnegative");
}

}  // namespace

SolveResult solve_ds(const Graph& g, int k, const SolverOptions& options) {
  check_k(k);
  auto problem = dominating_problem(g, k);
  auto result = finish(drive(CoverSearch(problem), options));
  if (result.answer && !is_dominating_set(g, result.witness))
    throw ContractError("internal: DS witness failed verification");
  return result;
}

SolveResult solve_ids(const Graph& g, int k, const SolverOptions& options) {
  check_k(k);
  auto problem = dominating_problem(g, k);
  problem.conflicts.resize(g.node_count());
  for (Node v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    problem.conflicts[v].assign(nb.begin(), nb.end());
  }
  auto result = finish(drive(CoverSearch(problem), options));
  if (result.answer &&
      !(is_dominating_set(g, result.witness) && is_independent_set(g, result.witness)))
    throw ContractError("internal: IDS witness failed verification");
  return result;
}

SolveResult solve_rbds(const RbdsInstance& inst, const SolverOptions& options) {
  require_valid(inst);
  CoverProblem p;
  p.choices = inst.red_count;
  p.hitters.resize(inst.blue_count);
  p.hits.resize(inst.red_count);
  p.k = inst.k;
  for (auto [r, b] : inst.edges) {
    p.hitters[b].push_back(r);
    p.hits[r].push_back(b);
  }
  for (auto& h : p.hitters) std::sort(h.begin(), h.end());
  auto result = finish(drive(CoverSearch(p), options));
  if (result.answer && !is_red_blue_dominating(inst, result.witness))
    throw ContractError("internal: RBDS witness failed verification");
  return result;
}

SolveResult solve_x3c(const X3cInstance& inst, const SolverOptions& options) {
  require_valid(inst);
  CoverProblem p;
  const int m = static_cast<int>(inst.sets.size());
  p.choices = m;
  p.hitters.resize(inst.universe_size);
  p.hits.resize(m);
  p.conflicts.resize(m);
  p.k = inst.universe_size / 3 + (inst.universe_size % 3 != 0 ? 1 : 0);
  for (int i = 0; i < m; ++i)
    for (int x : inst.sets[i]) {
      p.hitters[x].push_back(i);
      p.hits[i].push_back(x);
    }
  // Overlapping sets exclude each other.
  for (int x = 0; x < inst.universe_size; ++x)
    for (int a : p.hitters[x])
      for (int b : p.hitters[x])
        if (a != b) p.conflicts[a].push_back(b);
  auto result = finish(drive(CoverSearch(p), options));
  if (result.answer && !is_exact_cover(inst, result.witness))
    throw ContractError("internal: X3C witness failed verification");
  return result;
}

SolveResult solve_setcover(const SetCoverInstance& inst, const SolverOptions& options) {
  require_valid(inst);
  CoverProblem p;
  const int m = static_cast<int>(inst.sets.size());
  p.choices = m;
  p.hitters.resize(inst.universe_size);
  p.hits.resize(m);
  p.k = inst.k;
  for (int i = 0; i < m; ++i)
    for (int x : inst.sets[i]) {
      p.hitters[x].push_back(i);
      p.hits[i].push_back(x);
    }
  auto result = finish(drive(CoverSearch(p), options));
  if (result.answer && !is_set_cover(inst, result.witness))
    throw ContractError("internal: set cover witness failed verification");
  return result;
}

SolveResult solve_convc(const Graph& g, int k, const SolverOptions& options) {
  check_k(k);
  auto accept = [&g](const Witness& cover) { return is_connected_induced(g, cover); };
  auto result = finish(drive(CoverEnumeration(g, k, accept), options));
  if (result.answer && !(is_vertex_cover(g, result.witness) &&
                         is_connected_induced(g, result.witness) &&
                         static_cast<int>(result.witness.size()) <= k))
    throw ContractError("internal: ConVC witness failed verification");
  return result;
}

SolveResult solve_capvc(const CapVcInstance& inst, const SolverOptions& options) {
  require_valid(inst);
  const Graph& g = inst.graph;
  auto accept = [&](const Witness& cover) {
    return cap_assignment_feasible(g, cover, inst.capacities);
  };
  auto result = finish(drive(CoverEnumeration(g, inst.k, accept), options));
  if (result.answer && !(static_cast<int>(result.witness.size()) <= inst.k &&
                         cap_assignment_feasible(g, result.witness, inst.capacities)))
    throw ContractError("internal: CapVC witness failed verification");
  return result;
}

SolveResult solve_im(const Graph& g, int k, const SolverOptions& options) {
  check_k(k);
  auto result = finish(drive(InducedMatchingSearch(g, k), options));
  if (result.answer && !(static_cast<int>(result.witness.size()) == k &&
                         is_induced_matching_by_index(g, result.witness)))
    throw ContractError("internal: IM witness failed verification");
  return result;
}

SolveResult solve_mpm(const MpmInstance& inst, const SolverOptions& options) {
  require_valid(inst);
  if (inst.graph.node_count() % 2 != 0) return {};
  auto result = finish(drive(MpmSearch(inst), options));
  if (result.answer && !is_multicolored_perfect_matching(inst, result.witness))
    throw ContractError("internal: MPM witness failed verification");
  return result;
}

SolveResult solve_mcc(const MccInstance& inst, int k, const SolverOptions& options) {
  check_k(k);
  require_valid(inst);
  auto result = finish(drive(CliqueSearch(inst, k), options));
  if (result.answer && !(static_cast<int>(result.witness.size()) == k &&
                         is_multicolored_clique(inst, result.witness)))
    throw ContractError("internal: MCC witness failed verification");
  return result;
}

int max_induced_matching_size(const Graph& g, const SolverOptions& options) {
  int best = 0;
  while (solve_im(g, best + 1, options).answer) ++best;
  return best;
}

}  // namespace dkl
