#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "dkl/errors.hpp"

namespace dkl::io {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int integer(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InputError(std::string("non-integer in \"") + key + "\"");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_rows(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& row : v) {
    if (!row.is_array()) throw InputError(std::string("rows of \"") + key + "\" must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InputError(std::string("non-integer in \"") + key + "\"");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Edge> pairs(const json& j, const char* key) {
  std::vector<Edge> out;
  for (const auto& row : int_rows(j, key)) {
    if (row.size() != 2) throw InputError(std::string("\"") + key + "\" entries must be pairs");
    out.emplace_back(row[0], row[1]);
  }
  return out;
}

json edge_list(const Graph& g) {
  json out = json::array();
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

Graph graph_from(const json& j) {
  const int n = integer(j, "n");
  if (n < 0) throw InputError("negative n");
  auto edges = pairs(j, "edges");
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

json label_object(const std::vector<std::string>& labels) {
  json out = json::object();
  for (size_t v = 0; v < labels.size(); ++v) out[std::to_string(v)] = labels[v];
  return out;
}

std::vector<std::string> labels_from(const json& j, int n) {
  const json& obj = field(j, "labels");
  if (!obj.is_object()) throw InputError("\"labels\" must be an object");
  if (static_cast<int>(obj.size()) != n) throw InputError("\"labels\" must name every node once");
  std::vector<std::string> out(n);
  std::vector<bool> seen(n, false);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    int v = -1;
    try {
      size_t used = 0;
      v = std::stoi(it.key(), &used);
      if (used != it.key().size()) v = -1;
    } catch (const std::exception&) {
    }
    if (v < 0 || v >= n || seen[v]) throw InputError("bad label key \"" + it.key() + "\"");
    if (!it.value().is_string()) throw InputError("labels must be strings");
    seen[v] = true;
    out[v] = it.value().get<std::string>();
  }
  return out;
}

CompositionKind composition_kind(const std::string& s) {
  if (s == "ds") return CompositionKind::ds;
  if (s == "ids") return CompositionKind::ids;
  if (s == "im") return CompositionKind::im;
  throw InputError("unknown composition \"" + s + "\"");
}

json multigraph_edges(const MultiGraph& g, const std::vector<int>* colors) {
  json out = json::array();
  for (const auto& e : g.edges()) {
    json row{{"id", e.id}, {"u", e.u}, {"v", e.v}};
    if (colors) row["color"] = (*colors)[e.id];
    out.push_back(row);
  }
  return out;
}

// Edges may come in any order; ids must be exactly 0..m-1.
std::pair<MultiGraph, std::vector<int>> multigraph_from(const json& j, bool colored) {
  const int n = integer(j, "n");
  if (n < 0) throw InputError("negative n");
  const json& list = field(j, "edges");
  if (!list.is_array()) throw InputError("\"edges\" must be an array");
  const int m = static_cast<int>(list.size());
  std::vector<std::pair<Node, Node>> edges(m);
  std::vector<int> colors(m, 0);
  std::vector<bool> seen(m, false);
  for (const auto& e : list) {
    const int id = integer(e, "id");
    if (id < 0 || id >= m || seen[id]) throw InputError("edge ids must be exactly 0..m-1");
    seen[id] = true;
    edges[id] = {integer(e, "u"), integer(e, "v")};
    if (colored) colors[id] = integer(e, "color");
  }
  return {MultiGraph(n, edges), colors};
}

}  // namespace

std::string kind_of(const InstanceFile& file) {
  return std::visit(overloaded{
                        [](const GraphDoc&) { return "graph"; },
                        [](const MultiGraph&) { return "multigraph"; },
                        [](const MpmInstance&) { return "mpm"; },
                        [](const X3cInstance&) { return "x3c"; },
                        [](const MccInstance&) { return "mcc"; },
                        [](const SetCoverInstance&) { return "setcover"; },
                        [](const CapVcInstance&) { return "capvc"; },
                        [](const RbdsInstance&) { return "rbds"; },
                        [](const ComposedInstance&) { return "composed"; },
                    },
                    file.payload);
}

json to_json(const InstanceFile& file) {
  json j{{"kind", kind_of(file)}};
  std::visit(overloaded{
                 [&](const GraphDoc& d) {
                   j["n"] = d.graph.node_count();
                   j["edges"] = edge_list(d.graph);
                   if (d.k) j["k"] = *d.k;
                 },
                 [&](const MultiGraph& g) {
                   j["n"] = g.node_count();
                   j["edges"] = multigraph_edges(g, nullptr);
                 },
                 [&](const MpmInstance& m) {
                   j["n"] = m.graph.node_count();
                   j["edges"] = multigraph_edges(m.graph, &m.colors);
                 },
                 [&](const X3cInstance& x) {
                   j["n"] = x.universe_size;
                   j["sets"] = x.sets;
                 },
                 [&](const MccInstance& m) {
                   j["n"] = m.graph.node_count();
                   j["edges"] = edge_list(m.graph);
                   j["colors"] = m.node_colors;
                   j["num_colors"] = m.num_colors;
                 },
                 [&](const SetCoverInstance& s) {
                   j["n"] = s.universe_size;
                   j["d"] = s.d;
                   j["k"] = s.k;
                   j["sets"] = s.sets;
                 },
                 [&](const CapVcInstance& c) {
                   j["n"] = c.graph.node_count();
                   j["edges"] = edge_list(c.graph);
                   j["capacities"] = c.capacities;
                   j["k"] = c.k;
                 },
                 [&](const RbdsInstance& r) {
                   auto edges = r.edges;
                   std::sort(edges.begin(), edges.end());
                   j["n_red"] = r.red_count;
                   j["n_blue"] = r.blue_count;
                   j["edges"] = json::array();
                   for (auto [a, b] : edges) j["edges"].push_back({a, b});
                   j["k"] = r.k;
                 },
                 [&](const ComposedInstance& c) {
                   j["composition"] = to_string(c.kind());
                   j["n"] = c.graph().node_count();
                   j["edges"] = edge_list(c.graph());
                   j["k"] = c.k();
                   j["n_red"] = c.red_count();
                   std::vector<std::string> names;
                   for (const auto& l : c.labels()) names.push_back(to_string(l));
                   j["labels"] = label_object(names);
                   const auto& p = c.params();
                   j["params"] = {{"d", p.d}, {"t", p.t}, {"n", p.n}, {"T", p.T}};
                   if (c.kind() == CompositionKind::im) {
                     j["params"]["c"] = p.c;
                     j["params"]["im_parameter"] = to_string(p.im_parameter);
                   }
                 },
             },
             file.payload);
  if (!file.labels.empty()) j["labels"] = label_object(file.labels);
  return j;
}

InstanceFile from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("instance file must be a JSON object");
    const json& kind_field = field(j, "kind");
    if (!kind_field.is_string()) throw InputError("\"kind\" must be a string");
    const std::string kind = kind_field.get<std::string>();
    InstanceFile out;
    int node_count = -1;
    if (kind == "graph") {
      GraphDoc d{graph_from(j), std::nullopt};
      if (j.contains("k")) d.k = integer(j, "k");
      node_count = d.graph.node_count();
      out.payload = std::move(d);
    } else if (kind == "multigraph") {
      auto g = multigraph_from(j, false).first;
      node_count = g.node_count();
      out.payload = std::move(g);
    } else if (kind == "mpm") {
      auto [g, colors] = multigraph_from(j, true);
      MpmInstance inst{std::move(g), std::move(colors)};
      require_valid(inst);
      node_count = inst.graph.node_count();
      out.payload = std::move(inst);
    } else if (kind == "x3c") {
      X3cInstance inst{integer(j, "n"), {}};
      for (const auto& row : int_rows(j, "sets")) {
        if (row.size() != 3) throw InputError("x3c sets must have 3 elements");
        inst.sets.push_back({row[0], row[1], row[2]});
      }
      require_valid(inst);
      out.payload = std::move(inst);
    } else if (kind == "mcc") {
      MccInstance inst{graph_from(j), int_list(j, "colors"), integer(j, "num_colors")};
      require_valid(inst);
      out.payload = std::move(inst);
    } else if (kind == "setcover") {
      SetCoverInstance inst{integer(j, "n"), integer(j, "d"), integer(j, "k"), int_rows(j, "sets")};
      require_valid(inst);
      out.payload = std::move(inst);
    } else if (kind == "capvc") {
      CapVcInstance inst{graph_from(j), int_list(j, "capacities"), integer(j, "k")};
      require_valid(inst);
      node_count = inst.graph.node_count();
      out.payload = std::move(inst);
    } else if (kind == "rbds") {
      RbdsInstance inst{integer(j, "n_red"), integer(j, "n_blue"), {}, integer(j, "k")};
      for (const auto& row : int_rows(j, "edges")) {
        if (row.size() != 2) throw InputError("rbds edges must be pairs");
        inst.edges.emplace_back(row[0], row[1]);
      }
      std::sort(inst.edges.begin(), inst.edges.end());
      require_valid(inst);
      out.payload = std::move(inst);
    } else if (kind == "composed") {
      const json& comp = field(j, "composition");
      if (!comp.is_string()) throw InputError("\"composition\" must be a string");
      Graph g = graph_from(j);
      std::vector<GadgetLabel> labels;
      for (const auto& s : labels_from(j, g.node_count())) labels.push_back(parse_label(s));
      const json& p = field(j, "params");
      CompositionParams params;
      params.d = integer(p, "d");
      params.t = integer(p, "t");
      params.n = integer(p, "n");
      const json& T = field(p, "T");
      if (!T.is_number_integer()) throw InputError("\"T\" must be an integer");
      params.T = T.get<long long>();
      auto ck = composition_kind(comp.get<std::string>());
      if (ck == CompositionKind::im) {
        params.c = integer(p, "c");
        const std::string variant = field(p, "im_parameter").get<std::string>();
        if (variant != "corrected" && variant != "literal")
          throw InputError("unknown im_parameter \"" + variant + "\"");
        params.im_parameter = variant == "literal" ? ImParameter::literal : ImParameter::corrected;
      }
      out.payload = ComposedInstance(ck, std::move(g), integer(j, "k"), integer(j, "n_red"),
                                     std::move(labels), params);
      return out;
    } else {
      throw InputError("unknown kind \"" + kind + "\"");
    }
    if (j.contains("labels")) {
      if (node_count < 0) throw InputError("labels are not supported for kind \"" + kind + "\"");
      out.labels = labels_from(j, node_count);
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError((path == "-" ? std::string("stdin") : path) + ": " + e.what());
  }
}

json to_json(const VerificationReport& report) {
  json params = json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  json cases = json::array();
  for (const auto& c : report.cases)
    cases.push_back({{"index", c.index},
                     {"name", c.name},
                     {"pass", c.pass},
                     {"counted", c.counted},
                     {"seed", c.seed},
                     {"detail", c.detail}});
  return {{"check", report.check},     {"params", params},
          {"pass", report.pass},       {"failures", report.failures()},
          {"cases", cases},            {"wall_seconds", report.wall_seconds}};
}

json to_json(const RuleTrace& trace) {
  json out = json::array();
  for (const auto& event : trace) {
    std::visit(overloaded{
                   [&](const IsolatedRemoved& e) {
                     out.push_back({{"rule", "isolated"}, {"node", e.node}});
                   },
                   [&](const TwinRemoved& e) {
                     out.push_back({{"rule", "twin"}, {"members", e.members}, {"removed", e.removed}});
                   },
                   [&](const CapTwinRemoved& e) {
                     out.push_back({{"rule", "cap-twin"},
                                    {"members", e.members},
                                    {"removed", e.removed},
                                    {"decremented", e.decremented}});
                   },
               },
               event);
  }
  return out;
}

json to_json(const DegeneracyResult& result) {
  return {{"degeneracy", result.degeneracy}, {"ordering", result.ordering}};
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace dkl::io
