#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "dkl/graph.hpp"
#include "dkl/problems.hpp"

namespace dkl {

// Rule events name nodes by their ids in the original input.
struct IsolatedRemoved {
  Node node;
  friend bool operator==(const IsolatedRemoved&, const IsolatedRemoved&) = default;
};
struct TwinRemoved {
  std::vector<Node> members;  // the whole twin class before removal
  Node removed;
  friend bool operator==(const TwinRemoved&, const TwinRemoved&) = default;
};
struct CapTwinRemoved {
  std::vector<Node> members;
  Node removed;
  std::vector<Node> decremented;  // common neighbors whose capacity dropped by one
  friend bool operator==(const CapTwinRemoved&, const CapTwinRemoved&) = default;
};
using RuleEvent = std::variant<IsolatedRemoved, TwinRemoved, CapTwinRemoved>;
using RuleTrace = std::vector<RuleEvent>;

/// Order in which twin classes are visited and members removed. The default
/// visits classes by lowest member and is the one the trace documents; the
/// other exists to check that the fixpoint answer does not depend on order.
enum class RuleOrder { lowest_first, highest_first };

struct ConvcKernel {
  Graph graph;
  int k = 0;
  std::vector<Node> old_to_new;
  RuleTrace trace;
  std::int64_t size_bound = 0;
  bool within_bound = false;
};

struct CapvcKernel {
  CapVcInstance instance;
  std::vector<Node> old_to_new;
  RuleTrace trace;
  std::int64_t size_bound = 0;
  bool within_bound = false;
  /// k + 1 > d; without it the size bound is not guaranteed.
  bool precondition_holds = false;
  /// A capacity went negative, so the output is the fixed NO instance: K2
  /// with both capacities 0 and the same k.
  bool canonical_no = false;
};

/// k + dk + sum_{i=1..d} i*C(k,i), saturating at INT64_MAX.
std::int64_t convc_size_bound(int k, int d);
/// k + dk + sum_{i=1..d} (k+1)*C(k,i), saturating at INT64_MAX.
std::int64_t capvc_size_bound(int k, int d);

/// Rule 1 (drop isolated nodes) and Rule 2 (a twin class with q <= d common
/// neighbors keeps min(size, q) members) to fixpoint. Rule 2 drops the
/// highest-id member. InputError if k < 0 or d < 1.
ConvcKernel convc_kernelize(const Graph& g, int k, int d,
                            RuleOrder order = RuleOrder::lowest_first);

/// Rule 1 and Rule 3 (a twin class of size >= k+2 with at most d common
/// neighbors loses a minimum-capacity member, lowest id on ties, and each
/// common neighbor loses one unit of capacity) to fixpoint.
CapvcKernel capvc_kernelize(const CapVcInstance& inst, int d,
                            RuleOrder order = RuleOrder::lowest_first);

/// Re-applies a trace to the original input, checking that every event is a
/// legal rule application. ContractError otherwise.
ConvcKernel replay_convc(const Graph& g, int k, int d, const RuleTrace& trace);
CapvcKernel replay_capvc(const CapVcInstance& inst, int d, const RuleTrace& trace);

}  // namespace dkl
