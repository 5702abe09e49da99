#pragma once

#include <cstdint>
#include <vector>

#include "dkl/graph.hpp"
#include "dkl/problems.hpp"

namespace dkl {

/// Exact answer plus witness. Witness contents by problem:
///   ds, ids, convc, capvc, mcc   node ids
///   rbds                         red ids
///   im                           indices into graph.edges()
///   mpm                          edge ids
///   x3c, setcover                set indices
/// Witnesses are sorted ascending and have been checked against the matching
/// predicate before being returned. Empty when answer is false.
struct SolveResult {
  bool answer = false;
  std::vector<int> witness;
};

enum class Execution { serial, parallel };

/// Work budget counts search-tree nodes. The default is read from the
/// DKL_BUDGET environment variable, falling back to kDefaultBudget.
inline constexpr std::uint64_t kDefaultBudget = 200'000'000;
std::uint64_t default_budget();

struct SolverOptions {
  std::uint64_t budget = default_budget();
  /// Parallel runs split the root of the search tree across OpenMP threads
  /// and return exactly the answer and witness of the serial run.
  Execution execution = Execution::serial;
};

// All solvers decide "is there a solution of size at most k" and throw
// BudgetExceeded when the search tree outgrows options.budget.

SolveResult solve_ds(const Graph& g, int k, const SolverOptions& options = {});
SolveResult solve_ids(const Graph& g, int k, const SolverOptions& options = {});
SolveResult solve_convc(const Graph& g, int k, const SolverOptions& options = {});
SolveResult solve_rbds(const RbdsInstance& inst, const SolverOptions& options = {});
/// Induced matching with at least k edges; the witness has exactly k.
SolveResult solve_im(const Graph& g, int k, const SolverOptions& options = {});
SolveResult solve_mpm(const MpmInstance& inst, const SolverOptions& options = {});
SolveResult solve_x3c(const X3cInstance& inst, const SolverOptions& options = {});
/// Multicolored clique on exactly k nodes.
SolveResult solve_mcc(const MccInstance& inst, int k, const SolverOptions& options = {});
SolveResult solve_setcover(const SetCoverInstance& inst, const SolverOptions& options = {});
SolveResult solve_capvc(const CapVcInstance& inst, const SolverOptions& options = {});

/// Size of a maximum induced matching (repeated solve_im).
int max_induced_matching_size(const Graph& g, const SolverOptions& options = {});

}  // namespace dkl
