#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dkl/compositions.hpp"
#include "dkl/degeneracy.hpp"
#include "dkl/harness.hpp"
#include "dkl/kernels.hpp"
#include "dkl/problems.hpp"

namespace dkl::io {

using json = nlohmann::ordered_json;

/// A plain graph, optionally with a budget (reduction outputs carry one).
struct GraphDoc {
  Graph graph;
  std::optional<int> k;

  friend bool operator==(const GraphDoc&, const GraphDoc&) = default;
};

using Payload = std::variant<GraphDoc, MultiGraph, MpmInstance, X3cInstance, MccInstance,
                             SetCoverInstance, CapVcInstance, RbdsInstance, ComposedInstance>;

/// One instance file. `labels` names the origin of each node for reduction
/// outputs and is empty otherwise; composed instances carry gadget labels
/// in the payload instead.
struct InstanceFile {
  Payload payload;
  std::vector<std::string> labels;
};

/// "graph", "multigraph", "mpm", "x3c", "mcc", "setcover", "capvc", "rbds"
/// or "composed".
std::string kind_of(const InstanceFile& file);

/// Canonical form: edge lists sorted, keys in a fixed order.
json to_json(const InstanceFile& file);
/// InputError on anything malformed, including failed instance validation.
InstanceFile from_json(const json& j);

/// Reads a whole file, or standard input for "-". InputError on I/O or
/// JSON syntax errors.
json read_json(const std::string& path);

json to_json(const VerificationReport& report);
json to_json(const RuleTrace& trace);
json to_json(const DegeneracyResult& result);

/// `p edge n m` header and 1-indexed `e u v` lines.
void write_dimacs(std::ostream& out, const Graph& g);

}  // namespace dkl::io
