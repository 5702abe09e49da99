#include <omp.h>

#include <cstdlib>

#include "doctest.h"
#include "dkl/errors.hpp"
#include "dkl/generators.hpp"
#include "dkl/oracles.hpp"
#include "dkl/predicates.hpp"
#include "test_support.hpp"

using namespace dkl;

namespace {

const SolverOptions kParallel{default_budget(), Execution::parallel};

RbdsInstance random_rbds(std::uint64_t seed) {
  Rng rng(seed);
  RbdsInstance inst;
  inst.red_count = rng.between(1, 7);
  inst.blue_count = rng.between(1, 8);
  for (int r = 0; r < inst.red_count; ++r)
    for (int b = 0; b < inst.blue_count; ++b)
      if (rng.chance(0.3)) inst.edges.emplace_back(r, b);
  inst.k = rng.between(0, 4);
  return inst;
}

}  // namespace

TEST_CASE("dominating set examples") {
  auto r = solve_ds(test::complete(3), 1);
  CHECK(r.answer);
  CHECK(r.witness.size() == 1);
  CHECK_FALSE(solve_ds(test::path(4), 1).answer);
  CHECK(solve_ds(Graph(0, {}), 0).answer);
  CHECK_FALSE(solve_ds(Graph(1, {}), 0).answer);
}

TEST_CASE("independent dominating set on P4") {
  Graph p4 = test::path(4);
  CHECK_FALSE(solve_ids(p4, 1).answer);
  auto r = solve_ids(p4, 2);
  REQUIRE(r.answer);
  CHECK(is_independent_set(p4, r.witness));
  CHECK(is_dominating_set(p4, r.witness));
}

TEST_CASE("connected vertex cover on P4") {
  Graph p4 = test::path(4);
  CHECK_FALSE(solve_convc(p4, 1).answer);
  auto r = solve_convc(p4, 2);
  REQUIRE(r.answer);
  CHECK(r.witness == std::vector<int>{1, 2});
  CHECK(solve_convc(Graph(3, {}), 0).answer);
}

TEST_CASE("red-blue dominating set examples") {
  CHECK(solve_rbds({1, 2, {{0, 0}, {0, 1}}, 1}).answer);
  for (int k = 0; k < 3; ++k) CHECK_FALSE(solve_rbds({2, 2, {}, k}).answer);
  CHECK(solve_rbds({0, 0, {}, 0}).answer);
}

TEST_CASE("rbds agrees with the blue-coverage dynamic program") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto inst = random_rbds(seed);
    auto r = solve_rbds(inst);
    REQUIRE(r.answer == test::rbds_by_dp(inst));
    if (r.answer) CHECK(is_red_blue_dominating(inst, r.witness));
  }
}

TEST_CASE("induced matching examples") {
  Graph two_k2(4, {{0, 1}, {2, 3}});
  CHECK(solve_im(two_k2, 2).answer);
  CHECK_FALSE(solve_im(test::path(4), 2).answer);
  for (int n : {0, 1, 5}) CHECK(solve_im(test::complete(n), 0).answer);
  CHECK(max_induced_matching_size(test::path(7)) == 2);
  auto r = solve_im(test::path(5), 2);
  REQUIRE(r.answer);
  CHECK(r.witness.size() == 2);
  CHECK(is_induced_matching_by_index(test::path(5), r.witness));
}

TEST_CASE("multicolored perfect matching examples") {
  CHECK(solve_mpm({MultiGraph(2, std::vector<std::pair<Node, Node>>{{0, 1}}), {0}}).answer);
  // C4 where opposite edges share a color.
  MpmInstance c4{MultiGraph(4, std::vector<std::pair<Node, Node>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                 {0, 1, 0, 1}};
  CHECK_FALSE(solve_mpm(c4).answer);
  c4.colors = {0, 0, 1, 1};
  auto r = solve_mpm(c4);
  REQUIRE(r.answer);
  CHECK(is_multicolored_perfect_matching(c4, r.witness));
}

TEST_CASE("exact cover, clique and set cover examples") {
  X3cInstance x{6, {{0, 1, 2}, {3, 4, 5}}};
  auto rx = solve_x3c(x);
  CHECK(rx.answer);
  CHECK(rx.witness == std::vector<int>{0, 1});
  CHECK_FALSE(solve_x3c({6, {{0, 1, 2}, {2, 3, 4}}}).answer);

  MccInstance tri{test::complete(3), {1, 2, 3}, 3};
  CHECK(solve_mcc(tri, 3).answer);
  tri.node_colors = {1, 1, 2};
  CHECK_FALSE(solve_mcc(tri, 3).answer);

  CHECK(solve_setcover({3, 3, 1, {{0, 1, 2}}}).answer);
  CHECK_FALSE(solve_setcover({6, 3, 1, {{0, 1, 2}, {3, 4, 5}}}).answer);
}

TEST_CASE("capacitated vertex cover examples") {
  Graph k2(2, {{0, 1}});
  auto r = solve_capvc({k2, {1, 0}, 1});
  REQUIRE(r.answer);
  CHECK(r.witness == std::vector<int>{0});
  CHECK_FALSE(solve_capvc({test::star(3), {2, 1, 1, 1}, 1}).answer);
  CHECK(solve_capvc({test::star(3), {3, 1, 1, 1}, 1}).answer);
}

TEST_CASE("size-parameterized oracles are monotone in k") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = test::random_graph(8, 0.35, seed);
    bool ds = false, ids = false, convc = false;
    for (int k = 0; k <= 8; ++k) {
      bool nds = solve_ds(g, k).answer, nids = solve_ids(g, k).answer,
           nconvc = solve_convc(g, k).answer;
      CHECK((!ds || nds));
      CHECK((!ids || nids));
      CHECK((!convc || nconvc));
      ds = nds, ids = nids, convc = nconvc;
    }
    // Induced matching runs the other way.
    bool im = true;
    for (int k = 0; k <= 5; ++k) {
      bool nim = solve_im(g, k).answer;
      CHECK((im || !nim));
      im = nim;
    }
  }
}

TEST_CASE("pruned solvers agree with naive enumeration on random graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    Graph g = test::random_graph(rng.between(1, 9), 0.1 + rng.below(80) / 100.0, seed);
    int ds = test::naive_min_ds(g);
    CHECK(solve_ds(g, ds).answer);
    if (ds > 0) CHECK_FALSE(solve_ds(g, ds - 1).answer);
    int ids = test::naive_min_ids(g);
    CHECK(solve_ids(g, ids).answer);
    if (ids > 0) CHECK_FALSE(solve_ids(g, ids - 1).answer);
    int convc = test::naive_min_convc(g);
    if (convc >= 0) {
      CHECK(solve_convc(g, convc).answer);
      if (convc > 0) CHECK_FALSE(solve_convc(g, convc - 1).answer);
    } else {
      CHECK_FALSE(solve_convc(g, g.node_count()).answer);
    }
    if (g.edge_count() <= 16) CHECK(max_induced_matching_size(g) == test::naive_max_im(g));
  }
}

TEST_CASE("capvc agrees with naive enumeration") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    const int n = rng.between(1, 8);
    CapVcInstance inst{test::random_graph(n, 0.4, seed), std::vector<int>(n), 0};
    for (int& c : inst.capacities) c = rng.between(0, 3);
    int best = test::naive_min_capvc(inst);
    for (int k = 0; k <= n; ++k) {
      inst.k = k;
      auto r = solve_capvc(inst);
      REQUIRE(r.answer == (best >= 0 && best <= k));
      if (r.answer) CHECK(static_cast<int>(r.witness.size()) <= k);
    }
  }
}

TEST_CASE("source-problem oracles agree with enumeration") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const int n = 2 * rng.between(1, 3);
    auto mpm = gen_mpm(n, rng.between(n / 2, 8), seed, n == 2 || rng.chance(0.5));
    CHECK(solve_mpm(mpm).answer == test::mpm_by_enumeration(mpm));
    const int u = 3 * rng.between(1, 3);
    auto x3c = gen_x3c(u, rng.between(u / 3, 8), seed, u == 3 || rng.chance(0.5));
    CHECK(solve_x3c(x3c).answer == test::x3c_by_enumeration(x3c));
    auto mcc = gen_mcc(rng.between(3, 9), 3, 0.5, seed, false);
    CHECK_FALSE(test::mcc_by_enumeration(mcc, 3));
    mcc = gen_mcc(rng.between(3, 9), 3, 0.4, seed, true);
    CHECK(test::mcc_by_enumeration(mcc, 3));
    CHECK(solve_mcc(mcc, 2).answer == test::mcc_by_enumeration(mcc, 2));
  }
}

TEST_CASE("parallel execution returns the serial answer and witness") {
  omp_set_num_threads(4);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = test::random_graph(10, 0.3, seed);
    for (int k : {1, 2, 3, 4}) {
      auto s = solve_ds(g, k), p = solve_ds(g, k, kParallel);
      CHECK(s.answer == p.answer);
      CHECK(s.witness == p.witness);
      s = solve_ids(g, k), p = solve_ids(g, k, kParallel);
      CHECK(s.witness == p.witness);
      s = solve_convc(g, k + 3), p = solve_convc(g, k + 3, kParallel);
      CHECK(s.witness == p.witness);
      s = solve_im(g, k), p = solve_im(g, k, kParallel);
      CHECK(s.answer == p.answer);
      CHECK(s.witness == p.witness);
    }
    auto mpm = gen_mpm(6, 8, seed, seed % 2 == 0);
    CHECK(solve_mpm(mpm).witness == solve_mpm(mpm, kParallel).witness);
    auto mcc = gen_mcc(9, 3, 0.5, seed, true);
    CHECK(solve_mcc(mcc, 3).witness == solve_mcc(mcc, 3, kParallel).witness);
    auto rbds = random_rbds(seed);
    CHECK(solve_rbds(rbds).witness == solve_rbds(rbds, kParallel).witness);
  }
  omp_set_num_threads(1);
}

TEST_CASE("exceeding the work budget throws instead of answering") {
  // One below the optimum forces a full refutation.
  Graph g = test::random_graph(24, 0.15, 1);
  int k = 0;
  while (!solve_ds(g, k).answer) ++k;
  REQUIRE(k >= 3);
  SolverOptions tiny{20, Execution::serial};
  CHECK_THROWS_AS(solve_ds(g, k - 1, tiny), BudgetExceeded);
  SolverOptions tiny_parallel{20, Execution::parallel};
  CHECK_THROWS_AS(solve_ds(g, k - 1, tiny_parallel), BudgetExceeded);
}

TEST_CASE("budget default reads the environment") {
  ::setenv("DKL_BUDGET", "1234", 1);
  CHECK(default_budget() == 1234);
  ::unsetenv("DKL_BUDGET");
  CHECK(default_budget() == kDefaultBudget);
}
