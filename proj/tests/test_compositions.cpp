#include <set>

#include "doctest.h"
#include "dkl/compositions.hpp"
#include "dkl/degeneracy.hpp"
#include "dkl/errors.hpp"
#include "dkl/generators.hpp"
#include "dkl/oracles.hpp"
#include "dkl/predicates.hpp"
#include "test_support.hpp"

using namespace dkl;

namespace {

GadgetLabel L(GadgetKind kind, std::vector<int> args, bool primed = false) {
  return {kind, std::move(args), primed};
}

int count_kind(const ComposedInstance& c, GadgetKind kind) {
  int out = 0;
  for (const auto& l : c.labels()) out += l.kind == kind;
  return out;
}

// T MPM instances on n nodes, YES exactly at the positions in `yes`.
std::vector<MpmInstance> mpm_batch(int n, long long T, const std::set<long long>& yes,
                                   std::uint64_t seed) {
  std::vector<MpmInstance> out;
  for (long long i = 0; i < T; ++i)
    out.push_back(gen_mpm(n, yes.count(i) ? n / 2 + 2 : 3, seed * 1000 + i, yes.count(i) > 0));
  return out;
}

std::vector<X3cInstance> x3c_batch(int n, long long T, const std::set<long long>& yes,
                                   std::uint64_t seed) {
  std::vector<X3cInstance> out;
  for (long long i = 0; i < T; ++i) {
    if (yes.count(i)) out.push_back(gen_x3c(n, n / 3 + 1, seed * 1000 + i, true));
    else out.push_back(n == 3 ? X3cInstance{3, {}} : gen_x3c(n, 3, seed * 1000 + i, false));
  }
  return out;
}

std::vector<MccInstance> mcc_batch(const std::vector<int>& colors, int c, long long T,
                                   const std::set<long long>& yes, std::uint64_t seed) {
  std::vector<MccInstance> out;
  for (long long i = 0; i < T; ++i)
    out.push_back(gen_mcc_on_coloring(colors, c, 0.5, seed * 1000 + i, yes.count(i) > 0));
  return out;
}

// Blues of a DS composition dominated by the given reds.
std::vector<bool> dominated_blues(const ComposedInstance& c, const std::vector<Node>& reds) {
  std::vector<bool> out(c.graph().node_count(), false);
  for (Node r : reds)
    for (Node b : c.graph().neighbors(r)) out[b] = true;
  return out;
}

}  // namespace

TEST_CASE("digit expansions") {
  CHECK(digits(0, 4, 4) == std::vector<int>{0, 0, 0, 0});
  CHECK(digits(11, 4, 4) == std::vector<int>{3, 2, 0, 0});
  CHECK_THROWS_AS(digits(16, 2, 4), InputError);
  CHECK_THROWS_AS(digits(-1, 2, 4), InputError);
  CHECK_THROWS_AS(digits(1, 1, 4), InputError);
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    int base = rng.between(2, 9), width = rng.between(1, 8);
    long long limit = 1;
    for (int i = 0; i < width; ++i) limit *= base;
    long long a = static_cast<long long>(rng.below(limit));
    auto ds = digits(a, base, width);
    REQUIRE(static_cast<int>(ds.size()) == width);
    CHECK(from_digits(ds, base) == a);
  }
}

TEST_CASE("index matrices") {
  auto zero = index_to_matrix(0, 2, 3);
  CHECK(zero.rows == 4);
  CHECK(zero.cols == 2);
  CHECK(std::all_of(zero.entries.begin(), zero.entries.end(), [](int x) { return x == 0; }));
  auto five = index_to_matrix(5, 1, 2);
  CHECK(five.entries == std::vector<int>{1, 0, 1});
  std::set<std::vector<int>> seen;
  for (int i = 0; i < 8; ++i) seen.insert(index_to_matrix(i, 1, 2).entries);
  CHECK(seen.size() == 8);
  CHECK_THROWS_AS(index_to_matrix(8, 1, 2), InputError);
}

TEST_CASE("gadget labels print and parse") {
  CHECK(to_string(L(GadgetKind::Rcode, {0, 1, 1})) == "Rcode(0,1,1)");
  CHECK(to_string(L(GadgetKind::Bcode, {2, 13})) == "Bcode(2,13)");
  CHECK(to_string(L(GadgetKind::Xcode, {1, 0}, true)) == "Xcode'(1,0)");
  for (const char* text : {"Rcode(0,1,1)", "Bcode(2,13)", "Bchoice(1,0,0,1)", "Rfill(0,5,2)",
                           "Bfill(1,3)", "Binst(4)", "Rinst(7,2)", "Vuniv(0)", "Vtriple(1,0,1,2)",
                           "Xcode(0,0)", "Xcode'(1,0)", "Ychoice(0,1,2)", "Ychoice'(0,1,2)",
                           "Anode(3)", "Bnode(3)", "Aedge(1,4)", "Bcolpair(1,2)", "X(0,0)", "Y(1,0)"})
    CHECK(to_string(parse_label(text)) == text);
  for (const char* bad : {"Rcode(0,1)", "Rcode'(0,1,1)", "Foo(1)", "Binst(-1)", "Binst(1", "Binst()",
                          "Binst(1,)", "Binst(a)"})
    CHECK_THROWS_AS(parse_label(bad), InputError);
}

TEST_CASE("DS composition sizes at d=1, t=2, n=4") {
  auto c = compose_ds(mpm_batch(4, 8, {}, 1), 1, 2);
  CHECK(count_kind(c, GadgetKind::Rcode) == 6);
  CHECK(count_kind(c, GadgetKind::Bchoice) == 3);
  CHECK(count_kind(c, GadgetKind::Bcode) == 16);
  CHECK(count_kind(c, GadgetKind::Rfill) == 0);
  CHECK(count_kind(c, GadgetKind::Bfill) == 0);
  CHECK(c.k() == 5);
  CHECK(c.params().T == 8);
  CHECK(ds_parameter(2, 2, 4) == 38);
  CHECK(degeneracy_ordering(c.graph()).degeneracy <= 3);
}

TEST_CASE("DS composition is an OR at d=1, t=2, n=4") {
  auto no = compose_ds(mpm_batch(4, 8, {}, 2), 1, 2);
  CHECK_FALSE(solve_rbds(no.as_rbds()).answer);
  for (long long j = 0; j < 8; ++j) {
    auto batch = mpm_batch(4, 8, {j}, 3 + j);
    auto c = compose_ds(batch, 1, 2);
    auto r = solve_rbds(c.as_rbds());
    CHECK(r.answer);
    auto sol = solve_mpm(batch[j]);
    REQUIRE(sol.answer);
    auto lifted = lift_ds_witness(c, batch[j], j, sol.witness);
    CHECK(static_cast<int>(lifted.size()) == c.k());
    CHECK(is_red_blue_dominating(c.as_rbds(), lifted));
  }
}

TEST_CASE("DS composition structure at d=2") {
  auto batch = mpm_batch(4, 256, {77}, 4);
  auto c = compose_ds(batch, 2, 2);
  CHECK(c.k() == 38);
  CHECK(degeneracy_ordering(c.graph()).degeneracy <= 4);
  for (Node v = 0; v < c.graph().node_count(); ++v)
    if (c.label(v).kind == GadgetKind::Rinst) CHECK(c.graph().degree(v) == 4);
  auto sol = solve_mpm(batch[77]);
  REQUIRE(sol.answer);
  auto lifted = lift_ds_witness(c, batch[77], 77, sol.witness);
  CHECK(lifted.size() == 38);
  auto covered = dominated_blues(c, lifted);
  for (Node b = c.red_count(); b < c.graph().node_count(); ++b) CHECK(covered[b]);
  CHECK(is_red_blue_dominating(c.as_rbds(), lifted));
}

TEST_CASE("lifting rejects a solution of the wrong instance") {
  auto batch = mpm_batch(4, 8, {2, 5}, 5);
  auto c = compose_ds(batch, 1, 2);
  auto sol = solve_mpm(batch[2]);
  REQUIRE(sol.answer);
  CHECK_THROWS_AS(lift_ds_witness(c, batch[2], 5, sol.witness), ContractError);
  if (!is_multicolored_perfect_matching(batch[5], sol.witness))
    CHECK_THROWS_AS(lift_ds_witness(c, batch[5], 5, sol.witness), ContractError);
  CHECK_THROWS_AS(lift_ds_witness(c, batch[2], 2, {}), ContractError);
}

TEST_CASE("enforcement witness satisfies both bullets") {
  for (int d : {1, 2}) {
    auto c = compose_ds(mpm_batch(4, d == 1 ? 8 : 256, {}, 6), d, 2);
    Rng rng(d);
    for (int trial = 0; trial < 50; ++trial) {
      auto m = index_to_matrix(static_cast<long long>(rng.below(c.params().T)), d, 2);
      auto labels = ds_enforcement_witness(m, d, 2, 4);
      CHECK(static_cast<long long>(labels.size()) == ds_enforcement_size(d, 2, 4));
      std::vector<Node> reds;
      for (const auto& l : labels) reds.push_back(c.node(l));
      auto covered = dominated_blues(c, reds);
      auto open = ds_matrix_addresses(m, d, 2);
      for (Node b = c.red_count(); b < c.graph().node_count(); ++b) {
        const auto& l = c.label(b);
        if (l.kind == GadgetKind::Bchoice || l.kind == GadgetKind::Bfill) CHECK(covered[b]);
        if (l.kind == GadgetKind::Bcode) {
          bool in_m = std::binary_search(open.begin(), open.end(), l.args[1]);
          CHECK(covered[b] == !in_m);
        }
      }
      if (d == 1) {
        for (const auto& l : labels) CHECK(l.kind == GadgetKind::Rcode);
      }
    }
  }
}

TEST_CASE("IDS composition at d=1, t=2, n=3") {
  auto no = compose_ids(x3c_batch(3, 2, {}, 1), 1, 2);
  CHECK(no.graph().node_count() == 11);
  CHECK(no.k() == 4);
  CHECK_FALSE(solve_ids(no.graph(), no.k()).answer);
  CHECK(degeneracy_ordering(no.graph()).degeneracy <= 5);
  for (long long j = 0; j < 2; ++j) {
    auto batch = x3c_batch(3, 2, {j}, 2);
    auto c = compose_ids(batch, 1, 2);
    CHECK(solve_ids(c.graph(), c.k()).answer);
    auto lifted = lift_ids_witness(c, batch[j], j, solve_x3c(batch[j]).witness);
    CHECK(lifted.size() == 4);
    CHECK(is_independent_set(c.graph(), lifted));
    CHECK(is_dominating_set(c.graph(), lifted));
  }
  CHECK_THROWS_AS(lift_ids_witness(no, {3, {}}, 0, {}), ContractError);
}

TEST_CASE("IDS composition at d=2, t=2, n=6") {
  auto batch = x3c_batch(6, 4, {3}, 3);
  auto c = compose_ids(batch, 2, 2);
  CHECK(c.k() == 4 + 20 + 2);
  CHECK(degeneracy_ordering(c.graph()).degeneracy <= 6);
  for (Node v = 0; v < c.graph().node_count(); ++v) {
    const auto& l = c.label(v);
    if (l.kind != GadgetKind::Vtriple) continue;
    bool in_family = false;
    for (auto s : batch[l.args[0]].sets) {
      std::sort(s.begin(), s.end());
      in_family |= s[0] == l.args[1] && s[1] == l.args[2] && s[2] == l.args[3];
    }
    CHECK(c.graph().degree(v) == (in_family ? 2 + 4 : 2 + 1));
  }
  auto lifted = lift_ids_witness(c, batch[3], 3, solve_x3c(batch[3]).witness);
  CHECK(lifted.size() == 26);
  CHECK(is_independent_set(c.graph(), lifted));
  CHECK(is_dominating_set(c.graph(), lifted));
}

TEST_CASE("IM parameter variants") {
  CHECK(im_parameter(1, 2, 4, 4, ImParameter::literal) == 6);
  CHECK(im_parameter(1, 2, 4, 4, ImParameter::corrected) == 7);
  CHECK(im_parameter(1, 2, 4, 6, ImParameter::literal) == 8);
  CHECK(im_parameter(1, 2, 4, 6, ImParameter::corrected) == 9);
}

TEST_CASE("IM composition at d=1, t=2, c=4, n=4") {
  const std::vector<int> colors{1, 2, 3, 4};
  auto no_batch = mcc_batch(colors, 4, 2, {}, 1);
  auto no = compose_im(no_batch, 1, 2);
  CHECK(no.k() == 7);
  CHECK(degeneracy_ordering(no.graph()).degeneracy <= 4);
  CHECK_FALSE(solve_im(no.graph(), no.k()).answer);
  // At the literal parameter the trivial matching {a_v b_v} + all x-y
  // edges already reaches k', so an all-NO batch composes to YES.
  auto literal = compose_im(no_batch, 1, 2, ImParameter::literal);
  CHECK(literal.k() == 6);
  CHECK(solve_im(literal.graph(), literal.k()).answer);

  for (long long j = 0; j < 2; ++j) {
    auto batch = mcc_batch(colors, 4, 2, {j}, 2 + j);
    auto c = compose_im(batch, 1, 2);
    CHECK(solve_im(c.graph(), c.k()).answer);
    auto clique = solve_mcc(batch[j], 4);
    REQUIRE(clique.answer);
    auto lifted = lift_im_witness(c, batch[j], j, clique.witness);
    CHECK(lifted.size() == 7);
    CHECK(is_induced_matching_by_index(c.graph(), lifted));
    for (Node v = 0; v < c.graph().node_count(); ++v) {
      if (c.label(v).kind != GadgetKind::Aedge) continue;
      int x_neighbors = 0;
      for (Node w : c.graph().neighbors(v)) x_neighbors += c.label(w).kind == GadgetKind::X;
      CHECK(x_neighbors == 1);
    }
    // Instance-graph part: no induced matching beyond C(c,2) + n - c.
    std::vector<bool> keep(c.graph().node_count());
    for (Node v = 0; v < c.graph().node_count(); ++v)
      keep[v] = c.label(v).kind != GadgetKind::X && c.label(v).kind != GadgetKind::Y;
    auto inst = induced_subgraph(c.graph(), keep).graph;
    CHECK(max_induced_matching_size(inst) == 6);
  }
}

TEST_CASE("IM lifting at n=6 and error cases") {
  Rng rng(3);
  std::vector<int> colors{1, 2, 3, 4, 2, 3};
  auto batch = mcc_batch(colors, 4, 2, {1}, 4);
  auto c = compose_im(batch, 1, 2);
  auto clique = solve_mcc(batch[1], 4);
  REQUIRE(clique.answer);
  auto lifted = lift_im_witness(c, batch[1], 1, clique.witness);
  CHECK(lifted.size() == 9);
  CHECK(is_induced_matching_by_index(c.graph(), lifted));
  CHECK(c.k() == 9);
  std::vector<Node> wrong{0, 1, 2};
  CHECK_THROWS_AS(lift_im_witness(c, batch[1], 1, wrong), ContractError);

  // C(3,2) - 3 = 0 is not > d.
  auto small = mcc_batch({1, 2, 3}, 3, 2, {}, 5);
  CHECK_THROWS_AS(compose_im(small, 1, 2), InputError);
  CHECK_THROWS_AS(compose_im(mcc_batch(colors, 4, 3, {}, 6), 1, 2), InputError);
}

TEST_CASE("IM degeneracy at d=2, t=2, c=5, n=5") {
  auto batch = mcc_batch({1, 2, 3, 4, 5}, 5, 4, {2}, 7);
  auto c = compose_im(batch, 2, 2);
  CHECK(degeneracy_ordering(c.graph()).degeneracy <= 5);
  auto clique = solve_mcc(batch[2], 5);
  REQUIRE(clique.answer);
  auto lifted = lift_im_witness(c, batch[2], 2, clique.witness);
  CHECK(static_cast<int>(lifted.size()) == c.k());
}

TEST_CASE("compositions reject malformed batches") {
  CHECK_THROWS_AS(compose_ds(mpm_batch(4, 7, {}, 1), 1, 2), InputError);
  auto mixed = mpm_batch(4, 8, {}, 1);
  mixed[3] = gen_mpm(6, 3, 1, true);
  CHECK_THROWS_AS(compose_ds(mixed, 1, 2), InputError);
  CHECK_THROWS_AS(compose_ids(std::vector<X3cInstance>(2, X3cInstance{4, {}}), 1, 2), InputError);
  CHECK_THROWS_AS(compose_ds(mpm_batch(4, 8, {}, 1), 0, 2), InputError);
}

TEST_CASE("composed instances look up nodes by label") {
  auto c = compose_ds(mpm_batch(4, 8, {}, 1), 1, 2);
  CHECK(c.node(L(GadgetKind::Rcode, {0, 0, 0})) == 0);
  CHECK(c.label(c.node(L(GadgetKind::Binst, {3}))) == L(GadgetKind::Binst, {3}));
  CHECK_THROWS_AS(c.node(L(GadgetKind::Binst, {4})), ContractError);
  auto rb = c.as_rbds();
  CHECK(rb.red_count + rb.blue_count == c.graph().node_count());
  CHECK(validate(rb).empty());
}
