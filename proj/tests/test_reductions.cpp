#include <algorithm>

#include "doctest.h"
#include "dkl/degeneracy.hpp"
#include "dkl/errors.hpp"
#include "dkl/generators.hpp"
#include "dkl/oracles.hpp"
#include "dkl/predicates.hpp"
#include "dkl/reductions.hpp"
#include "test_support.hpp"

using namespace dkl;

namespace {

RbdsInstance random_rbds(std::uint64_t seed) {
  Rng rng(seed);
  RbdsInstance inst;
  inst.red_count = rng.between(1, 6);
  inst.blue_count = rng.between(1, 7);
  double p = 0.2 + 0.6 * rng.below(100) / 100.0;
  for (int r = 0; r < inst.red_count; ++r)
    for (int b = 0; b < inst.blue_count; ++b)
      if (rng.chance(p)) inst.edges.emplace_back(r, b);
  inst.k = rng.between(0, 4);
  return inst;
}

MpmInstance random_multigraph_mpm(std::uint64_t seed) {
  Rng rng(seed);
  int n = 2 * rng.between(1, 3);
  int m = rng.between(1, 8);
  std::vector<std::pair<Node, Node>> edges;
  std::vector<int> colors;
  for (int i = 0; i < m; ++i) {
    Node u = rng.between(0, n - 1), v = rng.between(0, n - 2);
    if (v >= u) ++v;
    edges.emplace_back(u, v);
    colors.push_back(rng.between(0, n / 2 - 1));
  }
  return {MultiGraph(n, edges), colors};
}

std::vector<std::vector<int>> all_triples(int u) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < u; ++a)
    for (int b = a + 1; b < u; ++b)
      for (int c = b + 1; c < u; ++c) out.push_back({a, b, c});
  return out;
}

}  // namespace

TEST_CASE("rbds_to_ds on a single edge") {
  RbdsInstance inst{1, 1, {{0, 0}}, 1};
  auto out = rbds_to_ds(inst);
  CHECK(out.graph.node_count() == 4);
  CHECK(out.k == 2);
  CHECK(out.labels == std::vector<std::string>{"red(0)", "blue(0)", "apex", "apex'"});
  auto r = solve_ds(out.graph, out.k);
  CHECK(r.answer);
  CHECK(rbds_witness_from_ds(inst, r.witness) == std::vector<int>{0});
}

TEST_CASE("rbds_to_ds maps blues without red neighbors to NO") {
  RbdsInstance inst{1, 1, {}, 1};
  auto out = rbds_to_ds(inst);
  CHECK(out.k == 2);
  CHECK(out.graph.node_count() == 3);
  CHECK_FALSE(solve_ds(out.graph, out.k).answer);
}

TEST_CASE("rbds_to_ds preserves answers and degeneracy up to one") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto inst = random_rbds(seed);
    auto out = rbds_to_ds(inst);
    REQUIRE(out.k == inst.k + 1);
    auto src = solve_rbds(inst);
    auto dst = solve_ds(out.graph, out.k);
    CHECK_MESSAGE(src.answer == dst.answer, "seed " << seed);
    CHECK(degeneracy_ordering(out.graph).degeneracy <=
          degeneracy_ordering(rbds_graph(inst)).degeneracy + 1);
    if (dst.answer) {
      auto reds = rbds_witness_from_ds(inst, dst.witness);
      CHECK(is_red_blue_dominating(inst, reds));
    }
  }
}

TEST_CASE("rbds witness back-map replaces blues and rejects non-solutions") {
  // Red 0 adjacent to blues 0 and 1; a DS may pick blue 0 instead.
  RbdsInstance inst{2, 2, {{0, 0}, {0, 1}, {1, 1}}, 1};
  auto out = rbds_to_ds(inst);
  std::vector<Node> with_blue{4, 0};  // apex and red 0
  CHECK(rbds_witness_from_ds(inst, with_blue) == std::vector<int>{0});
  std::vector<Node> too_small{4};
  CHECK_THROWS_AS(rbds_witness_from_ds(inst, too_small), ContractError);
}

TEST_CASE("mpm_simplify on a single edge") {
  MpmInstance inst{MultiGraph(2, std::vector<std::pair<Node, Node>>{{0, 1}}), {0}};
  auto out = mpm_simplify(inst);
  const auto& g = out.instance.graph;
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.is_simple());
  // y-y, x_u y_u, x_v y_v
  CHECK(out.instance.colors == std::vector<int>{0, 1, 0});
  CHECK(out.labels == std::vector<std::string>{"x(0)", "x(1)", "y(0,0)", "y(1,0)"});
  CHECK(solve_mpm(inst).answer);
  CHECK(solve_mpm(out.instance).answer);
}

TEST_CASE("mpm_simplify on parallel edges") {
  MpmInstance inst{MultiGraph(2, std::vector<std::pair<Node, Node>>{{0, 1}, {0, 1}}), {0, 0}};
  auto out = mpm_simplify(inst);
  CHECK(out.instance.graph.node_count() == 6);
  CHECK(out.instance.graph.is_simple());
  CHECK(validate(out.instance).empty());
  CHECK_THROWS_AS(mpm_simplify({MultiGraph(3, std::vector<std::pair<Node, Node>>{{0, 1}}), {0}}),
                  InputError);
}

TEST_CASE("mpm_simplify preserves answers on random multigraphs") {
  int yes = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto inst = seed % 3 == 0 ? gen_mpm(2 * (1 + seed % 3), 6, seed, true)
                              : random_multigraph_mpm(seed);
    auto out = mpm_simplify(inst);
    REQUIRE(out.instance.graph.node_count() == inst.graph.node_count() + 2 * inst.graph.edge_count());
    REQUIRE(out.instance.graph.is_simple());
    auto src = solve_mpm(inst);
    auto dst = solve_mpm(out.instance);
    CHECK_MESSAGE(src.answer == dst.answer, "seed " << seed);
    if (src.answer) {
      ++yes;
      auto lifted = mpm_simplify_lift(inst, src.witness);
      CHECK(is_multicolored_perfect_matching(out.instance, lifted));
      CHECK(is_multicolored_perfect_matching(inst, mpm_simplify_back(inst, dst.witness)));
    }
  }
  CHECK(yes > 50);
}

TEST_CASE("setcover_to_capvc capacities") {
  SetCoverInstance inst{3, 3, 1, {{0, 1, 2}}};
  auto literal = setcover_to_capvc(inst, CapacityVariant::literal);
  auto corrected = setcover_to_capvc(inst, CapacityVariant::corrected);
  CHECK(literal.k == 4);
  CHECK(literal.capacities == std::vector<int>{1, 1, 1, 2, 0, 0, 0});
  CHECK(corrected.capacities == std::vector<int>{1, 1, 1, 3, 0, 0, 0});
  CHECK(setcover_to_capvc_labels(inst) ==
        std::vector<std::string>{"elem(0)", "elem(1)", "elem(2)", "set(0)", "leaf(0)", "leaf(1)",
                                 "leaf(2)"});
  CHECK(solve_setcover(inst).answer);
  CHECK(solve_capvc(corrected).answer);
  // The literal capacities cannot absorb the k*d + d*|sets| edges.
  CHECK_FALSE(solve_capvc(literal).answer);
  CHECK_THROWS_AS(setcover_to_capvc({4, 3, 1, {{0, 1, 2}}}, CapacityVariant::corrected),
                  InputError);
}

TEST_CASE("corrected setcover_to_capvc is exact on small families") {
  long checked = 0;
  for (int k = 1; k <= 2; ++k) {
    const int u = 3 * k;
    auto triples = all_triples(u);
    const int T = static_cast<int>(triples.size());
    // Every family of at most 4 distinct triples.
    for (int size = 0; size <= std::min(4, T); ++size) {
      std::vector<bool> pick(T, false);
      std::fill(pick.begin(), pick.begin() + size, true);
      do {
        SetCoverInstance inst{u, 3, k, {}};
        for (int x = 0; x < T; ++x)
          if (pick[x]) inst.sets.push_back(triples[x]);
        auto out = setcover_to_capvc(inst, CapacityVariant::corrected);
        auto src = solve_setcover(inst);
        auto dst = solve_capvc(out);
        REQUIRE(src.answer == dst.answer);
        if (dst.answer) CHECK(is_set_cover(inst, setcover_witness_from_capvc(inst, dst.witness)));
        ++checked;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  CHECK(checked == 2 + 1 + 20 + 190 + 1140 + 4845);
}
