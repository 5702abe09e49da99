#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dkl/graph.hpp"
#include "dkl/problems.hpp"

namespace dkl {

/// Seeded generator used by every instance generator. Draws are built
/// directly on the engine output so sequences are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  int between(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  /// True with probability p.
  bool chance(double p);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Retry cap for rejection-sampled NO instances.
inline constexpr int kDefaultRetries = 1000;

// Generators are deterministic in their full argument list. Planted outputs
// are YES instances by construction. Non-planted outputs are resampled until
// the exact oracle answers NO, which only makes sense at oracle-tractable
// sizes; GenerationError after `retries` attempts.

/// Planted: a random perfect matching colored by a random permutation of
/// 0..n/2-1, plus m-n/2 random noise edges (parallel edges allowed).
MpmInstance gen_mpm(int n, int m, std::uint64_t seed, bool planted,
                    int retries = kDefaultRetries);

/// Planted: a random partition of the universe into triples plus m-n/3 random
/// triples, in shuffled order.
X3cInstance gen_x3c(int n, int m, std::uint64_t seed, bool planted,
                    int retries = kDefaultRetries);

/// Every color class is non-empty when n >= num_colors; only bichromatic
/// pairs become edges, each with probability edge_prob. Planted: one node
/// per color made pairwise adjacent.
MccInstance gen_mcc(int n, int num_colors, double edge_prob, std::uint64_t seed, bool planted,
                    int retries = kDefaultRetries);

/// Node v picks min(d, v) distinct earlier nodes and keeps each as a
/// neighbor with probability edge_prob, so degeneracy <= d.
Graph gen_degenerate_graph(int n, int d, double edge_prob, std::uint64_t seed);

/// A d-degenerate core on about half the nodes; every remaining node is
/// attached to one of a few random anchor sets of 1..d core nodes, so the
/// output has large twin classes. Degeneracy <= d.
Graph gen_twin_heavy_graph(int n, int d, double edge_prob, std::uint64_t seed);

/// Bipartite graph (a, b) whose b side has degree above the graph's
/// degeneracy: random bipartite graph, then b-side nodes at or below the
/// degeneracy are dropped.
struct HighDegreeBipartite {
  Graph graph;
  std::vector<Node> a;
  std::vector<Node> b;
};
HighDegreeBipartite gen_high_degree_bipartite(std::uint64_t seed);

/// Fresh random edges on a fixed coloring; batches for the IM composition
/// must share one coloring.
MccInstance gen_mcc_on_coloring(const std::vector<int>& node_colors, int num_colors,
                                double edge_prob, std::uint64_t seed, bool planted,
                                int retries = kDefaultRetries);

/// m random edges (parallel edges likely) with uniform colors; no answer
/// is forced.
MpmInstance gen_multigraph_mpm(int n, int m, std::uint64_t seed);

/// 1..max_red reds, 1..max_blue blues, a random edge density and k in
/// 0..max_k. Blues without red neighbors occur.
RbdsInstance gen_rbds(int max_red, int max_blue, int max_k, std::uint64_t seed);

// Extends a batch to exactly `required` instances with canonical NO
// instances on the same vertex set: an edgeless multigraph (MPM), an empty
// family (X3C), an edgeless graph with the shared coloring (MCC).
// InputError on an empty batch, a batch longer than `required`, mismatched
// vertex sets, or a vertex set that has no NO instance of this shape.
std::vector<MpmInstance> pad_batch(std::vector<MpmInstance> batch, int required);
std::vector<X3cInstance> pad_batch(std::vector<X3cInstance> batch, int required);
std::vector<MccInstance> pad_batch(std::vector<MccInstance> batch, int required);

}  // namespace dkl
