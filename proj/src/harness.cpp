#include "dkl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>

#include "dkl/degeneracy.hpp"
#include "dkl/errors.hpp"
#include "dkl/generators.hpp"
#include "dkl/kernels.hpp"
#include "dkl/oracles.hpp"
#include "dkl/predicates.hpp"

namespace dkl {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs case(i) for i in 0..count-1 across OpenMP threads. Budget overruns
// abort the whole check as a tier violation; any other exception fails only
// its case.
std::vector<CaseVerdict> run_cases(int count, const std::function<CaseVerdict(int)>& run) {
  std::vector<CaseVerdict> out(count);
  std::atomic<bool> over_budget{false};
  std::mutex message_lock;
  std::string budget_message;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    if (over_budget) continue;
    try {
      out[i] = run(i);
    } catch (const BudgetExceeded& e) {
      over_budget = true;
      std::lock_guard lock(message_lock);
      budget_message = e.what();
    } catch (const std::exception& e) {
      out[i].pass = false;
      out[i].detail = std::string("exception: ") + e.what();
    }
    out[i].index = i;
  }
  if (over_budget) throw TierError("oracle budget exceeded: " + budget_message);
  return out;
}

VerificationReport finish(std::string check, std::vector<std::pair<std::string, std::string>> params,
                          std::vector<CaseVerdict> cases, const Stopwatch& clock) {
  VerificationReport r{std::move(check), std::move(params), std::move(cases), true, 0};
  for (const auto& c : r.cases)
    if (c.counted && !c.pass) r.pass = false;
  r.wall_seconds = clock.seconds();
  return r;
}

std::string str(long long x) { return std::to_string(x); }

long long power(long long base, long long exp) {
  long long out = 1;
  for (long long i = 0; i < exp; ++i) {
    if (out > (1LL << 40) / std::max(base, 1LL)) throw TierError("batch size overflows the tier");
    out *= base;
  }
  return out;
}

long long batch_size(const OrCheck& c) {
  if (c.d < 1 || c.t < 2) throw InputError("need d >= 1 and t >= 2");
  return power(c.t, c.kind == CompositionKind::ds ? c.d * (c.d + 2) : c.d);
}

std::vector<int> shared_coloring(const OrCheck& c) {
  if (c.n < c.c) throw InputError("IM batches need n >= c");
  std::vector<int> colors(c.n);
  for (int v = 0; v < c.n; ++v) colors[v] = v % c.c + 1;
  return colors;
}

// Source instances for every batch position, NO and planted variants,
// drawn once so that all cases share them.
struct Sources {
  std::vector<MpmInstance> mpm_no, mpm_yes;
  std::vector<X3cInstance> x3c_no, x3c_yes;
  std::vector<MccInstance> mcc_no, mcc_yes;
};

Sources draw_sources(const OrCheck& c, long long T, long long only_yes_at = -1) {
  Sources s;
  auto want_yes = [&](long long i) { return only_yes_at < 0 || i == only_yes_at; };
  switch (c.kind) {
    case CompositionKind::ds: {
      const int m = c.m > 0 ? c.m : c.n / 2 + 2;
      for (long long i = 0; i < T; ++i) {
        s.mpm_no.push_back(gen_mpm(c.n, m, mix(c.seed, i, 0), false));
        s.mpm_yes.push_back(want_yes(i) ? gen_mpm(c.n, m, mix(c.seed, i, 1), true) : MpmInstance{});
      }
      break;
    }
    case CompositionKind::ids: {
      const int m = c.m > 0 ? c.m : c.n / 3 + 1;
      for (long long i = 0; i < T; ++i) {
        // On three elements any triple is an exact cover, so NO is the empty family.
        s.x3c_no.push_back(c.n == 3 ? X3cInstance{3, {}} : gen_x3c(c.n, m, mix(c.seed, i, 0), false));
        s.x3c_yes.push_back(want_yes(i) ? gen_x3c(c.n, m, mix(c.seed, i, 1), true) : X3cInstance{});
      }
      break;
    }
    case CompositionKind::im: {
      auto colors = shared_coloring(c);
      for (long long i = 0; i < T; ++i) {
        s.mcc_no.push_back(gen_mcc_on_coloring(colors, c.c, c.edge_prob, mix(c.seed, i, 0), false));
        s.mcc_yes.push_back(want_yes(i) ? gen_mcc_on_coloring(colors, c.c, c.edge_prob,
                                                              mix(c.seed, i, 1), true)
                                        : MccInstance{});
      }
      break;
    }
  }
  return s;
}

template <typename Instance>
std::vector<Instance> assemble(const std::vector<Instance>& no, const std::vector<Instance>& yes,
                               long long planted) {
  auto batch = no;
  if (planted >= 0) batch[planted] = yes[planted];
  return batch;
}

ComposedInstance compose(const OrCheck& c, const Sources& s, long long planted) {
  switch (c.kind) {
    case CompositionKind::ds:
      return compose_ds(assemble(s.mpm_no, s.mpm_yes, planted), c.d, c.t);
    case CompositionKind::ids:
      return compose_ids(assemble(s.x3c_no, s.x3c_yes, planted), c.d, c.t);
    case CompositionKind::im:
      return compose_im(assemble(s.mcc_no, s.mcc_yes, planted), c.d, c.t, c.im_parameter);
  }
  throw ContractError("unknown composition kind");
}

bool solve_composed(const ComposedInstance& composed) {
  switch (composed.kind()) {
    case CompositionKind::ds: return solve_rbds(composed.as_rbds()).answer;
    case CompositionKind::ids: return solve_ids(composed.graph(), composed.k()).answer;
    case CompositionKind::im: return solve_im(composed.graph(), composed.k()).answer;
  }
  throw ContractError("unknown composition kind");
}

// Lifts the planted witness of batch member j; empty string when valid.
std::string check_lift(const OrCheck& c, const ComposedInstance& composed, const Sources& s,
                       long long j) {
  switch (c.kind) {
    case CompositionKind::ds: {
      auto sol = solve_mpm(s.mpm_yes[j]);
      auto reds = lift_ds_witness(composed, s.mpm_yes[j], j, sol.witness);
      std::vector<int> red_ids(reds.begin(), reds.end());
      if (static_cast<int>(reds.size()) > composed.k()) return "lifted witness larger than k";
      if (!is_red_blue_dominating(composed.as_rbds(), red_ids)) return "lifted reds miss a blue";
      return "";
    }
    case CompositionKind::ids: {
      auto sol = solve_x3c(s.x3c_yes[j]);
      auto set = lift_ids_witness(composed, s.x3c_yes[j], j, sol.witness);
      if (static_cast<int>(set.size()) > composed.k()) return "lifted witness larger than k";
      if (!is_independent_set(composed.graph(), set)) return "lifted set not independent";
      if (!is_dominating_set(composed.graph(), set)) return "lifted set not dominating";
      return "";
    }
    case CompositionKind::im: {
      auto sol = solve_mcc(s.mcc_yes[j], c.c);
      std::vector<Node> clique(sol.witness.begin(), sol.witness.end());
      auto edges = lift_im_witness(composed, s.mcc_yes[j], j, clique);
      if (static_cast<int>(edges.size()) < composed.k()) return "lifted matching smaller than k'";
      if (!is_induced_matching_by_index(composed.graph(), edges)) return "lifted edges not induced";
      return "";
    }
  }
  return "unknown composition kind";
}

std::vector<std::pair<std::string, std::string>> or_params(const OrCheck& c, long long T) {
  std::vector<std::pair<std::string, std::string>> p{
      {"kind", to_string(c.kind)}, {"d", str(c.d)}, {"t", str(c.t)}, {"n", str(c.n)},
      {"T", str(T)}, {"seed", str(static_cast<long long>(c.seed))}};
  if (c.kind != CompositionKind::im) p.emplace_back("m", str(c.m));
  if (c.kind == CompositionKind::im) {
    p.emplace_back("c", str(c.c));
    p.emplace_back("edge_prob", std::to_string(c.edge_prob));
    p.emplace_back("im_parameter", to_string(c.im_parameter));
  }
  return p;
}

int degeneracy_bound(const OrCheck& c) {
  switch (c.kind) {
    case CompositionKind::ds: return c.d + 2;
    case CompositionKind::ids: return c.d + 4;
    case CompositionKind::im: return c.d + 3;
  }
  return 0;
}

long long parameter_formula(const OrCheck& c) {
  switch (c.kind) {
    case CompositionKind::ds: return ds_parameter(c.d, c.t, c.n);
    case CompositionKind::ids: return ids_parameter(c.d, c.t, c.n);
    case CompositionKind::im: return im_parameter(c.d, c.t, c.c, c.n, c.im_parameter);
  }
  return 0;
}

// Empty string when every labelled node has its documented degree.
std::string check_degree_facts(const OrCheck& c, const ComposedInstance& composed,
                               const Sources& s, long long planted) {
  const Graph& g = composed.graph();
  for (Node v = 0; v < g.node_count(); ++v) {
    const auto& label = composed.label(v);
    if (label.kind == GadgetKind::Rinst && g.degree(v) != c.d + 2)
      return to_string(label) + " has degree " + str(g.degree(v));
    if (label.kind == GadgetKind::Vtriple) {
      const long long i = label.args[0];
      const auto& source = i == planted ? s.x3c_yes[i] : s.x3c_no[i];
      bool in_family = std::any_of(source.sets.begin(), source.sets.end(), [&](auto set) {
        std::sort(set.begin(), set.end());
        return set[0] == label.args[1] && set[1] == label.args[2] && set[2] == label.args[3];
      });
      if (in_family && g.degree(v) != c.d + 4)
        return to_string(label) + " has degree " + str(g.degree(v));
    }
    if (label.kind == GadgetKind::Aedge) {
      auto nb = g.neighbors(v);
      long long enforcement = std::count_if(nb.begin(), nb.end(), [&](Node w) {
        return composed.label(w).kind == GadgetKind::X;
      });
      if (enforcement != c.d)
        return to_string(label) + " has " + str(enforcement) + " enforcement neighbors";
    }
  }
  return "";
}

CaseVerdict verdict(std::string name, bool pass, std::uint64_t seed, std::string detail = "") {
  CaseVerdict v;
  v.name = std::move(name);
  v.pass = pass;
  v.seed = seed;
  v.detail = std::move(detail);
  return v;
}

std::vector<std::vector<int>> all_triples(int u) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < u; ++a)
    for (int b = a + 1; b < u; ++b)
      for (int c = b + 1; c < u; ++c) out.push_back({a, b, c});
  return out;
}

std::vector<SetCoverInstance> setcover_tier() {
  std::vector<SetCoverInstance> out;
  for (int k = 1; k <= 2; ++k) {
    const int u = 3 * k;
    auto triples = all_triples(u);
    const int T = static_cast<int>(triples.size());
    for (int size = 0; size <= std::min(4, T); ++size) {
      std::vector<bool> pick(T, false);
      std::fill(pick.begin(), pick.begin() + size, true);
      do {
        SetCoverInstance inst{u, 3, k, {}};
        for (int x = 0; x < T; ++x)
          if (pick[x]) inst.sets.push_back(triples[x]);
        out.push_back(std::move(inst));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return out;
}

std::string describe(const SetCoverInstance& inst) {
  std::string out = "k=" + str(inst.k) + " sets=";
  for (const auto& s : inst.sets) out += "{" + str(s[0]) + "," + str(s[1]) + "," + str(s[2]) + "}";
  return out;
}

}  // namespace

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                        [](const CaseVerdict& c) { return c.counted && !c.pass; }));
}

VerificationReport verify_or_equivalence(const OrCheck& check) {
  Stopwatch clock;
  const long long T = batch_size(check);
  if (T > 64) throw TierError("OR-equivalence needs T <= 64, got " + str(T));
  const Sources sources = draw_sources(check, T);
  const auto probe = compose(check, sources, -1);
  if (probe.graph().node_count() > 120)
    throw TierError("composed graph has " + str(probe.graph().node_count()) +
                    " nodes; the brute-force tier allows 120");
  auto cases = run_cases(static_cast<int>(T) + 1, [&](int idx) {
    const long long j = idx < T ? idx : -1;
    const auto composed = j < 0 ? probe : compose(check, sources, j);
    const bool expected = j >= 0;
    const bool answer = solve_composed(composed);
    std::string name = j < 0 ? "all-NO" : "planted j=" + str(j);
    std::string detail = "k=" + str(composed.k()) + " answer=" + (answer ? "YES" : "NO");
    bool pass = answer == expected;
    if (j >= 0) {
      auto lift = check_lift(check, composed, sources, j);
      if (!lift.empty()) {
        pass = false;
        detail += "; " + lift;
      }
    }
    return verdict(name, pass, check.seed, detail);
  });
  return finish("or-equivalence", or_params(check, T), std::move(cases), clock);
}

VerificationReport verify_degeneracy(const OrCheck& check) {
  Stopwatch clock;
  const long long T = batch_size(check);
  if (T > 4096) throw TierError("structural check needs T <= 4096, got " + str(T));
  const long long planted = T / 2;
  const Sources sources = draw_sources(check, T, planted);
  const auto composed = compose(check, sources, planted);
  if (composed.graph().node_count() > 200000) throw TierError("composed graph too large");
  const int bound = degeneracy_bound(check);
  auto cases = run_cases(4, [&](int idx) -> CaseVerdict {
    switch (idx) {
      case 0: {
        const long long want = parameter_formula(check);
        return verdict("parameter", composed.k() == want, check.seed,
                       "k=" + str(composed.k()) + " formula=" + str(want));
      }
      case 1: {
        const int got = degeneracy_ordering(composed.graph()).degeneracy;
        return verdict("degeneracy", got <= bound, check.seed,
                       "degeneracy=" + str(got) + " bound=" + str(bound));
      }
      case 2: {
        auto problem = check_degree_facts(check, composed, sources, planted);
        return verdict("degree facts", problem.empty(), check.seed, problem);
      }
      default: {
        auto problem = check_lift(check, composed, sources, planted);
        return verdict("lifted witness j=" + str(planted), problem.empty(), check.seed, problem);
      }
    }
  });
  auto params = or_params(check, T);
  params.emplace_back("nodes", str(composed.graph().node_count()));
  return finish("degeneracy", std::move(params), std::move(cases), clock);
}

VerificationReport verify_enforcement(int d, int t, int n, int matrices, std::uint64_t seed) {
  Stopwatch clock;
  OrCheck c;
  c.kind = CompositionKind::ds;
  c.d = d;
  c.t = t;
  c.n = n;
  c.seed = seed;
  const long long T = batch_size(c);
  if (T > 4096) throw TierError("enforcement check needs T <= 4096, got " + str(T));
  // The enforcement gadget does not depend on the batch; an edgeless one suffices.
  const MpmInstance empty{MultiGraph(n, std::vector<std::pair<Node, Node>>{}), {}};
  const auto composed = compose_ds(std::vector<MpmInstance>(T, empty), d, t);
  const Graph& g = composed.graph();
  const long long expected_size = ds_enforcement_size(d, t, n);
  auto cases = run_cases(matrices, [&](int idx) {
    Rng rng(mix(seed, idx));
    const long long i = static_cast<long long>(rng.below(T));
    const auto m = index_to_matrix(i, d, t);
    const auto labels = ds_enforcement_witness(m, d, t, n);
    std::vector<bool> dominated(g.node_count(), false);
    for (const auto& l : labels)
      for (Node b : g.neighbors(composed.node(l))) dominated[b] = true;
    const auto open = ds_matrix_addresses(m, d, t);
    std::string problem;
    if (static_cast<long long>(labels.size()) != expected_size)
      problem = "size " + str(labels.size()) + " != " + str(expected_size);
    for (Node b = composed.red_count(); b < g.node_count() && problem.empty(); ++b) {
      const auto& l = composed.label(b);
      if ((l.kind == GadgetKind::Bchoice || l.kind == GadgetKind::Bfill) && !dominated[b])
        problem = to_string(l) + " undominated";
      if (l.kind == GadgetKind::Bcode) {
        bool in_m = std::binary_search(open.begin(), open.end(), l.args[1]);
        if (dominated[b] == in_m)
          problem = to_string(l) + (in_m ? " dominated" : " undominated");
      }
    }
    return verdict("matrix i=" + str(i), problem.empty(), mix(seed, idx), problem);
  });
  return finish("enforcement",
                {{"d", str(d)}, {"t", str(t)}, {"n", str(n)}, {"matrices", str(matrices)},
                 {"seed", str(static_cast<long long>(seed))}},
                std::move(cases), clock);
}

VerificationReport verify_kernel(const KernelCheck& check) {
  Stopwatch clock;
  if (check.max_n > 20) throw TierError("kernel check needs max_n <= 20");
  if (check.max_n < 2 || check.max_d < 1 || check.max_k < 0 || check.trials < 0)
    throw InputError("kernel check needs max_n >= 2, max_d >= 1, max_k >= 0");
  auto cases = run_cases(check.trials, [&](int idx) {
    const std::uint64_t s = mix(check.seed, idx);
    Rng rng(s);
    const int n = rng.between(2, check.max_n), d = rng.between(1, check.max_d),
              k = rng.between(0, check.max_k);
    const bool twins = check.twin_heavy || rng.chance(0.5);
    Graph g = twins ? gen_twin_heavy_graph(n, d, 0.6, s) : gen_degenerate_graph(n, d, 0.6, s);
    std::string name = "trial " + str(idx) + " n=" + str(n) + " d=" + str(d) + " k=" + str(k);
    if (check.kind == KernelKind::convc) {
      auto out = convc_kernelize(g, k, d);
      bool before = solve_convc(g, k).answer, after = solve_convc(out.graph, k).answer;
      bool pass = before == after && (!after || out.within_bound);
      return verdict(name, pass, s,
                     "before=" + str(before) + " after=" + str(after) + " nodes=" +
                         str(out.graph.node_count()) + " bound=" + str(out.size_bound));
    }
    std::vector<int> caps(n);
    for (Node v = 0; v < n; ++v) caps[v] = rng.between(0, g.degree(v) + 1);
    CapVcInstance inst{g, caps, k};
    auto out = capvc_kernelize(inst, d);
    bool before = solve_capvc(inst).answer, after = solve_capvc(out.instance).answer;
    bool pass = before == after && (!after || out.within_bound);
    return verdict(name, pass, s,
                   "before=" + str(before) + " after=" + str(after) + " nodes=" +
                       str(out.instance.graph.node_count()) + " bound=" + str(out.size_bound) +
                       (out.precondition_holds ? "" : " (k+1 <= d)"));
  });
  return finish("kernel",
                {{"kind", to_string(check.kind)}, {"trials", str(check.trials)},
                 {"max_n", str(check.max_n)}, {"max_d", str(check.max_d)},
                 {"max_k", str(check.max_k)}, {"twin_heavy", check.twin_heavy ? "true" : "false"},
                 {"seed", str(static_cast<long long>(check.seed))}},
                std::move(cases), clock);
}

VerificationReport verify_reduction(const ReductionCheck& check) {
  Stopwatch clock;
  std::vector<std::pair<std::string, std::string>> params{{"kind", to_string(check.kind)}};
  std::vector<CaseVerdict> cases;
  switch (check.kind) {
    case ReductionKind::rbds_ds:
      cases = run_cases(check.trials, [&](int idx) {
        const std::uint64_t s = mix(check.seed, idx);
        auto inst = gen_rbds(6, 7, 4, s);
        auto out = rbds_to_ds(inst);
        bool src = solve_rbds(inst).answer, dst = solve_ds(out.graph, out.k).answer;
        int before = degeneracy_ordering(rbds_graph(inst)).degeneracy;
        int after = degeneracy_ordering(out.graph).degeneracy;
        bool pass = src == dst && out.k == inst.k + 1 && after <= before + 1;
        return verdict("instance " + str(idx), pass, s,
                       "source=" + str(src) + " target=" + str(dst) + " degeneracy " +
                           str(before) + "->" + str(after));
      });
      break;
    case ReductionKind::mpm_simplify:
      cases = run_cases(check.trials, [&](int idx) {
        const std::uint64_t s = mix(check.seed, idx);
        Rng rng(s);
        const int n = 2 * rng.between(1, 3), m = rng.between(1, 8);
        auto inst = rng.chance(1.0 / 3) ? gen_mpm(n, std::max(m, n / 2), s, true)
                                        : gen_multigraph_mpm(n, m, s);
        auto out = mpm_simplify(inst);
        bool src = solve_mpm(inst).answer, dst = solve_mpm(out.instance).answer;
        bool pass = src == dst && out.instance.graph.is_simple();
        return verdict("multigraph " + str(idx), pass, s,
                       "n=" + str(n) + " m=" + str(inst.graph.edge_count()) +
                           " source=" + str(src) + " target=" + str(dst));
      });
      break;
    case ReductionKind::setcover_capvc: {
      params.emplace_back("variant", to_string(check.variant));
      params.emplace_back("tier", "d=3, k<=2, universe 3k, families of <= 4 triples");
      const auto tier = setcover_tier();
      cases = run_cases(static_cast<int>(tier.size()), [&](int idx) {
        const auto& inst = tier[idx];
        auto out = setcover_to_capvc(inst, check.variant);
        bool src = solve_setcover(inst).answer, dst = solve_capvc(out).answer;
        auto v = verdict(describe(inst), src == dst, 0,
                         "source=" + str(src) + " target=" + str(dst));
        v.counted = check.variant == CapacityVariant::corrected;
        return v;
      });
      break;
    }
  }
  if (check.kind != ReductionKind::setcover_capvc) {
    params.emplace_back("trials", str(check.trials));
    params.emplace_back("seed", str(static_cast<long long>(check.seed)));
  }
  return finish("reduction", std::move(params), std::move(cases), clock);
}

VerificationReport verify_bipartite_bound(int trials, std::uint64_t seed) {
  Stopwatch clock;
  auto cases = run_cases(trials, [&](int idx) {
    const std::uint64_t s = mix(seed, idx);
    auto inst = gen_high_degree_bipartite(s);
    bool ok = bipartite_degenerate_bound_check(inst.graph, inst.a, inst.b);
    return verdict("graph " + str(idx), ok, s,
                   "|A|=" + str(inst.a.size()) + " |B|=" + str(inst.b.size()));
  });
  return finish("bipartite-bound", {{"trials", str(trials)}, {"seed", str(static_cast<long long>(seed))}},
                std::move(cases), clock);
}

std::string to_string(CompositionKind kind) {
  switch (kind) {
    case CompositionKind::ds: return "ds";
    case CompositionKind::ids: return "ids";
    case CompositionKind::im: return "im";
  }
  return "?";
}

std::string to_string(KernelKind kind) { return kind == KernelKind::convc ? "convc" : "capvc"; }

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::rbds_ds: return "rbds-ds";
    case ReductionKind::mpm_simplify: return "mpm-simplify";
    case ReductionKind::setcover_capvc: return "setcover-capvc";
  }
  return "?";
}

std::string to_string(CapacityVariant variant) {
  return variant == CapacityVariant::literal ? "literal" : "corrected";
}

std::string to_string(ImParameter variant) {
  return variant == ImParameter::literal ? "literal" : "corrected";
}

}  // namespace dkl
