#include <sstream>

#include "doctest.h"
#include "dkl/errors.hpp"
#include "dkl/generators.hpp"
#include "dkl/reductions.hpp"
#include "io.hpp"
#include "test_support.hpp"

using namespace dkl;
using io::json;

namespace {

// emit . parse . emit == emit
json round_trip(const io::InstanceFile& file) {
  json first = io::to_json(file);
  json second = io::to_json(io::from_json(json::parse(first.dump())));
  CHECK(first == second);
  return first;
}

}  // namespace

TEST_CASE("every instance kind round-trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    round_trip({io::GraphDoc{test::random_graph(7, 0.4, seed), std::nullopt}, {}});
    round_trip({gen_mpm(4, 5, seed, true), {}});
    round_trip({gen_multigraph_mpm(4, 6, seed).graph, {}});
    round_trip({gen_x3c(6, 4, seed, true), {}});
    round_trip({gen_mcc(6, 3, 0.5, seed, true), {}});
    round_trip({gen_rbds(5, 5, 3, seed), {}});
    Graph g = gen_degenerate_graph(8, 2, 0.7, seed);
    std::vector<int> caps;
    for (Node v = 0; v < g.node_count(); ++v) caps.push_back(g.degree(v));
    round_trip({CapVcInstance{g, caps, 3}, {}});
  }
  round_trip({SetCoverInstance{6, 3, 2, {{0, 1, 2}, {3, 4, 5}, {1, 2, 3}}}, {}});
}

TEST_CASE("composed instances round-trip with labels and params") {
  std::vector<MpmInstance> ds_batch;
  for (int i = 0; i < 8; ++i) ds_batch.push_back(gen_mpm(4, 4, i, i == 3));
  auto j = round_trip({compose_ds(ds_batch, 1, 2), {}});
  CHECK(j["kind"] == "composed");
  CHECK(j["composition"] == "ds");
  CHECK(j["labels"]["0"] == "Rcode(0,0,0)");
  CHECK(j["params"]["T"] == 8);
  CHECK(j.contains("n_red"));
  auto back = io::from_json(j);
  CHECK(std::get<ComposedInstance>(back.payload) == compose_ds(ds_batch, 1, 2));

  std::vector<MccInstance> im_batch;
  for (int i = 0; i < 2; ++i)
    im_batch.push_back(gen_mcc_on_coloring({1, 2, 3, 4}, 4, 0.5, i, i == 0));
  auto im = round_trip({compose_im(im_batch, 1, 2, ImParameter::literal), {}});
  CHECK(im["params"]["im_parameter"] == "literal");
  CHECK(im["k"] == 6);
}

TEST_CASE("reduction outputs keep their label tables") {
  auto ds = rbds_to_ds({2, 2, {{0, 0}, {1, 1}}, 2});
  auto j = round_trip({io::GraphDoc{ds.graph, ds.k}, ds.labels});
  CHECK(j["k"] == 3);
  CHECK(j["labels"]["4"] == "apex");
  auto simple = mpm_simplify(gen_mpm(4, 5, 1, true));
  round_trip({simple.instance, simple.labels});
}

TEST_CASE("canonical form sorts edges") {
  auto f = io::from_json(json::parse(R"({"kind":"graph","n":3,"edges":[[2,1],[1,0]]})"));
  CHECK(io::to_json(f)["edges"] == json::parse("[[0,1],[1,2]]"));
  auto r = io::from_json(
      json::parse(R"({"kind":"rbds","n_red":2,"n_blue":1,"edges":[[1,0],[0,0]],"k":1})"));
  CHECK(io::to_json(r)["edges"] == json::parse("[[0,0],[1,0]]"));
  auto m = io::from_json(json::parse(
      R"({"kind":"mpm","n":2,"edges":[{"id":1,"u":1,"v":0,"color":0},{"id":0,"u":0,"v":1,"color":0}]})"));
  CHECK(io::to_json(m)["edges"][0]["id"] == 0);
}

TEST_CASE("malformed files are input errors") {
  for (const char* text : {
           R"([])",
           R"({"n":3})",
           R"({"kind":"nope"})",
           R"({"kind":"graph","n":2,"edges":[[0,0]]})",
           R"({"kind":"graph","n":2,"edges":[[0,1,2]]})",
           R"({"kind":"graph","n":"2","edges":[]})",
           R"({"kind":"mpm","n":3,"edges":[]})",
           R"({"kind":"mpm","n":2,"edges":[{"id":1,"u":0,"v":1,"color":0}]})",
           R"({"kind":"x3c","n":3,"sets":[[0,1]]})",
           R"({"kind":"capvc","n":2,"edges":[[0,1]],"capacities":[1],"k":1})",
           R"({"kind":"rbds","n_red":1,"n_blue":1,"edges":[[0,1]],"k":1})",
           R"({"kind":"graph","n":2,"edges":[],"labels":{"0":"a"}})",
           R"({"kind":"x3c","n":3,"sets":[],"labels":{}})",
           R"j({"kind":"composed","composition":"ds","n":1,"edges":[],"k":0,"n_red":1,
               "labels":{"0":"Nope(1)"},"params":{"d":1,"t":2,"n":2,"T":8}})j",
       }) {
    CHECK_THROWS_AS(io::from_json(json::parse(text)), InputError);
  }
  CHECK_THROWS_AS(io::read_json("/nonexistent/file.json"), InputError);
}

TEST_CASE("DIMACS export") {
  std::ostringstream out;
  io::write_dimacs(out, Graph(3, {{0, 1}, {1, 2}}));
  CHECK(out.str() == "p edge 3 2\ne 1 2\ne 2 3\n");
}
