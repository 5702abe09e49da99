#include "dkl/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dkl/degeneracy.hpp"
#include "dkl/errors.hpp"
#include "dkl/oracles.hpp"

namespace dkl {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

bool Rng::chance(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

namespace {

// Seed for the attempt-th rejection-sampling round.
std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(attempt) * 0xBF58476D1CE4E5B9ULL;
}

template <typename Make, typename IsNo>
auto reject_until_no(std::uint64_t seed, int retries, const char* what, Make make, IsNo is_no) {
  for (int attempt = 0; attempt < retries; ++attempt) {
    auto inst = make(attempt == 0 ? seed : attempt_seed(seed, attempt));
    if (is_no(inst)) return inst;
  }
  throw GenerationError(std::string("no NO-instance of ") + what + " found after " +
                        std::to_string(retries) + " attempts");
}

std::pair<Node, Node> random_pair(Rng& rng, int n) {
  Node a = static_cast<Node>(rng.below(n));
  Node b = static_cast<Node>(rng.below(n - 1));
  if (b >= a) ++b;
  return {a, b};
}

MpmInstance random_mpm(int n, int m, std::uint64_t seed, bool planted) {
  Rng rng(seed);
  std::vector<std::pair<Node, Node>> edges;
  std::vector<int> colors;
  if (planted) {
    std::vector<Node> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    rng.shuffle(nodes);
    std::vector<int> palette(n / 2);
    std::iota(palette.begin(), palette.end(), 0);
    rng.shuffle(palette);
    for (int i = 0; i < n / 2; ++i) {
      edges.emplace_back(nodes[2 * i], nodes[2 * i + 1]);
      colors.push_back(palette[i]);
    }
  }
  while (static_cast<int>(edges.size()) < m) {
    edges.push_back(random_pair(rng, n));
    colors.push_back(static_cast<int>(rng.below(n / 2)));
  }
  // Shuffle edge order so the planted matching is not the id prefix.
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::pair<Node, Node>> shuffled;
  std::vector<int> shuffled_colors;
  for (int i : order) {
    shuffled.push_back(edges[i]);
    shuffled_colors.push_back(colors[i]);
  }
  return {MultiGraph(n, shuffled), shuffled_colors};
}

std::array<int, 3> random_triple(Rng& rng, int n) {
  std::array<int, 3> t{};
  t[0] = static_cast<int>(rng.below(n));
  do t[1] = static_cast<int>(rng.below(n));
  while (t[1] == t[0]);
  do t[2] = static_cast<int>(rng.below(n));
  while (t[2] == t[0] || t[2] == t[1]);
  std::sort(t.begin(), t.end());
  return t;
}

X3cInstance random_x3c(int n, int m, std::uint64_t seed, bool planted) {
  Rng rng(seed);
  X3cInstance inst{n, {}};
  if (planted) {
    std::vector<int> elements(n);
    std::iota(elements.begin(), elements.end(), 0);
    rng.shuffle(elements);
    for (int i = 0; i + 2 < n; i += 3) {
      std::array<int, 3> t{elements[i], elements[i + 1], elements[i + 2]};
      std::sort(t.begin(), t.end());
      inst.sets.push_back(t);
    }
  }
  while (static_cast<int>(inst.sets.size()) < m) inst.sets.push_back(random_triple(rng, n));
  rng.shuffle(inst.sets);
  return inst;
}

std::vector<int> random_coloring(Rng& rng, int n, int num_colors) {
  std::vector<int> colors(n);
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  for (int i = 0; i < n; ++i)
    colors[order[i]] = i < num_colors ? i + 1 : static_cast<int>(rng.below(num_colors)) + 1;
  return colors;
}

MccInstance random_mcc(const std::vector<int>& colors, int num_colors, double edge_prob,
                       std::uint64_t seed, bool planted) {
  Rng rng(seed);
  const int n = static_cast<int>(colors.size());
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v)
      if (colors[u] != colors[v] && rng.chance(edge_prob)) edges.emplace_back(u, v);
  if (planted) {
    std::vector<std::vector<Node>> by_color(num_colors + 1);
    for (Node v = 0; v < n; ++v) by_color[colors[v]].push_back(v);
    std::vector<Node> clique;
    for (int c = 1; c <= num_colors; ++c) {
      if (by_color[c].empty()) throw InputError("color " + std::to_string(c) + " has no nodes");
      clique.push_back(by_color[c][rng.below(by_color[c].size())]);
    }
    for (size_t i = 0; i < clique.size(); ++i)
      for (size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
  }
  return {graph_from_edges_dedup(n, edges), colors, num_colors};
}

}  // namespace

MpmInstance gen_mpm(int n, int m, std::uint64_t seed, bool planted, int retries) {
  if (n < 2 || n % 2 != 0) throw InputError("gen_mpm needs an even n >= 2");
  if (m < 0) throw InputError("gen_mpm needs m >= 0");
  if (planted) {
    if (m < n / 2) throw InputError("planted MPM needs m >= n/2");
    return random_mpm(n, m, seed, true);
  }
  return reject_until_no(
      seed, retries, "MPM", [&](std::uint64_t s) { return random_mpm(n, m, s, false); },
      [](const MpmInstance& inst) { return !solve_mpm(inst).answer; });
}

X3cInstance gen_x3c(int n, int m, std::uint64_t seed, bool planted, int retries) {
  if (n < 3 || n % 3 != 0) throw InputError("gen_x3c needs n >= 3 divisible by 3");
  if (m < 0) throw InputError("gen_x3c needs m >= 0");
  if (planted) {
    if (m < n / 3) throw InputError("planted X3C needs m >= n/3");
    return random_x3c(n, m, seed, true);
  }
  return reject_until_no(
      seed, retries, "X3C", [&](std::uint64_t s) { return random_x3c(n, m, s, false); },
      [](const X3cInstance& inst) { return !solve_x3c(inst).answer; });
}

MccInstance gen_mcc_on_coloring(const std::vector<int>& node_colors, int num_colors,
                                double edge_prob, std::uint64_t seed, bool planted, int retries) {
  if (num_colors < 2) throw InputError("gen_mcc needs at least 2 colors");
  if (planted) return random_mcc(node_colors, num_colors, edge_prob, seed, true);
  return reject_until_no(
      seed, retries, "MCC",
      [&](std::uint64_t s) { return random_mcc(node_colors, num_colors, edge_prob, s, false); },
      [num_colors](const MccInstance& inst) { return !solve_mcc(inst, num_colors).answer; });
}

MccInstance gen_mcc(int n, int num_colors, double edge_prob, std::uint64_t seed, bool planted,
                    int retries) {
  if (num_colors < 2) throw InputError("gen_mcc needs at least 2 colors");
  if (n < num_colors) throw InputError("gen_mcc needs n >= num_colors");
  Rng rng(seed);
  auto colors = random_coloring(rng, n, num_colors);
  return gen_mcc_on_coloring(colors, num_colors, edge_prob, attempt_seed(seed, -1), planted,
                             retries);
}

Graph gen_degenerate_graph(int n, int d, double edge_prob, std::uint64_t seed) {
  if (n < 0 || d < 0) throw InputError("gen_degenerate_graph needs n, d >= 0");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<Node> earlier;
  for (Node v = 1; v < n; ++v) {
    earlier.resize(v);
    std::iota(earlier.begin(), earlier.end(), 0);
    rng.shuffle(earlier);
    for (int i = 0; i < std::min(d, static_cast<int>(v)); ++i)
      if (rng.chance(edge_prob)) edges.emplace_back(earlier[i], v);
  }
  return Graph(n, edges);
}

Graph gen_twin_heavy_graph(int n, int d, double edge_prob, std::uint64_t seed) {
  if (n < 0 || d < 1) throw InputError("gen_twin_heavy_graph needs n >= 0, d >= 1");
  const int core = std::max(1, (n + 1) / 2);
  if (n <= core) return gen_degenerate_graph(n, d, edge_prob, seed);
  Graph base = gen_degenerate_graph(core, d, edge_prob, seed);
  Rng rng(attempt_seed(seed, -2));
  std::vector<std::vector<Node>> anchors(rng.between(1, 3));
  std::vector<Node> pool(core);
  std::iota(pool.begin(), pool.end(), 0);
  for (auto& anchor : anchors) {
    rng.shuffle(pool);
    anchor.assign(pool.begin(), pool.begin() + std::min(core, rng.between(1, d)));
  }
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  for (Node v = core; v < n; ++v)
    for (Node a : anchors[rng.below(anchors.size())]) edges.emplace_back(a, v);
  return Graph(n, edges);
}

HighDegreeBipartite gen_high_degree_bipartite(std::uint64_t seed) {
  Rng rng(seed);
  const int left = rng.between(1, 8);
  const int right = rng.between(1, 30);
  // Right-side node degrees skew high so that some exceed the degeneracy.
  std::vector<Edge> edges;
  std::vector<Node> side(left);
  std::iota(side.begin(), side.end(), 0);
  for (int j = 0; j < right; ++j) {
    rng.shuffle(side);
    int degree = rng.between(std::max(1, left / 2), left);
    for (int i = 0; i < degree; ++i) edges.emplace_back(side[i], left + j);
  }
  Graph full(left + right, edges);
  const int d = degeneracy_ordering(full).degeneracy;

  std::vector<bool> keep(left + right, true);
  for (int j = 0; j < right; ++j)
    if (full.degree(left + j) <= d) keep[left + j] = false;
  auto reduced = induced_subgraph(full, keep);

  HighDegreeBipartite out{std::move(reduced.graph), {}, {}};
  for (Node v = 0; v < left + right; ++v) {
    Node id = reduced.old_to_new[v];
    if (id == kRemoved) continue;
    (v < left ? out.a : out.b).push_back(id);
  }
  return out;
}

namespace {

void check_batch_shape(size_t size, int required) {
  if (size == 0) throw InputError("cannot pad an empty batch");
  if (static_cast<int>(size) > required)
    throw InputError("batch of " + std::to_string(size) + " exceeds required size " +
                     std::to_string(required));
}

}  // namespace

std::vector<MpmInstance> pad_batch(std::vector<MpmInstance> batch, int required) {
  check_batch_shape(batch.size(), required);
  const int n = batch.front().graph.node_count();
  for (const auto& inst : batch)
    if (inst.graph.node_count() != n) throw InputError("MPM batch instances have different vertex sets");
  if (n < 2) throw InputError("MPM padding needs n >= 2");
  while (static_cast<int>(batch.size()) < required) batch.push_back({MultiGraph(n, {}), {}});
  return batch;
}

std::vector<X3cInstance> pad_batch(std::vector<X3cInstance> batch, int required) {
  check_batch_shape(batch.size(), required);
  const int n = batch.front().universe_size;
  for (const auto& inst : batch)
    if (inst.universe_size != n) throw InputError("X3C batch instances have different universes");
  if (n < 1) throw InputError("X3C padding needs a non-empty universe");
  while (static_cast<int>(batch.size()) < required) batch.push_back({n, {}});
  return batch;
}

std::vector<MccInstance> pad_batch(std::vector<MccInstance> batch, int required) {
  check_batch_shape(batch.size(), required);
  const auto& first = batch.front();
  for (const auto& inst : batch)
    if (inst.graph.node_count() != first.graph.node_count() ||
        inst.node_colors != first.node_colors || inst.num_colors != first.num_colors)
      throw InputError("MCC batch instances have different vertex sets or colorings");
  if (first.num_colors < 2) throw InputError("MCC padding needs at least 2 colors");
  MccInstance empty{Graph(first.graph.node_count(), std::span<const Edge>{}), first.node_colors,
                    first.num_colors};
  while (static_cast<int>(batch.size()) < required) batch.push_back(empty);
  return batch;
}

MpmInstance gen_multigraph_mpm(int n, int m, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0 || m < 0) throw InputError("gen_multigraph_mpm needs even n >= 2, m >= 0");
  Rng rng(seed);
  std::vector<std::pair<Node, Node>> edges;
  std::vector<int> colors;
  for (int i = 0; i < m; ++i) {
    edges.push_back(random_pair(rng, n));
    colors.push_back(static_cast<int>(rng.below(n / 2)));
  }
  return {MultiGraph(n, edges), colors};
}

RbdsInstance gen_rbds(int max_red, int max_blue, int max_k, std::uint64_t seed) {
  if (max_red < 1 || max_blue < 1 || max_k < 0) throw InputError("gen_rbds needs positive sizes");
  Rng rng(seed);
  RbdsInstance inst;
  inst.red_count = rng.between(1, max_red);
  inst.blue_count = rng.between(1, max_blue);
  const double p = 0.2 + 0.6 * static_cast<double>(rng.below(100)) / 100.0;
  for (int r = 0; r < inst.red_count; ++r)
    for (int b = 0; b < inst.blue_count; ++b)
      if (rng.chance(p)) inst.edges.emplace_back(r, b);
  inst.k = rng.between(0, max_k);
  return inst;
}

}  // namespace dkl
