#include "dkl/capacity.hpp"

#include <string>

#include "dkl/errors.hpp"
#include "dkl/predicates.hpp"

namespace dkl {

namespace {

class EdgeAssigner {
 public:
  EdgeAssigner(const Graph& g, const std::vector<bool>& in_cover, std::span<const int> capacity)
      : g_(g),
        in_cover_(in_cover),
        capacity_(capacity),
        load_(g.node_count(), 0),
        assigned_to_(g.edge_count(), kRemoved),
        assigned_edges_(g.node_count()) {}

  bool assign_all() {
    for (int e = 0; e < g_.edge_count(); ++e) {
      visited_.assign(g_.node_count(), false);
      if (!augment(e)) return false;
    }
    return true;
  }

  std::vector<Node> assignment() const { return assigned_to_; }

 private:
  // Finds an alternating path from edge e to a cover node with spare capacity.
  bool augment(int e) {
    const Edge& edge = g_.edges()[e];
    for (Node w : {edge.u, edge.v}) {
      if (!in_cover_[w] || visited_[w]) continue;
      visited_[w] = true;
      if (load_[w] < capacity_[w]) {
        take(e, w);
        return true;
      }
      for (int other : assigned_edges_[w]) {
        if (augment(other)) {
          release(other, w);
          take(e, w);
          return true;
        }
      }
    }
    return false;
  }

  void take(int e, Node w) {
    assigned_to_[e] = w;
    assigned_edges_[w].push_back(e);
    ++load_[w];
  }

  // `e` has already been re-pointed elsewhere by the recursive augment.
  void release(int e, Node w) {
    auto& list = assigned_edges_[w];
    for (auto it = list.begin(); it != list.end(); ++it) {
      if (*it == e) {
        list.erase(it);
        break;
      }
    }
    --load_[w];
  }

  const Graph& g_;
  const std::vector<bool>& in_cover_;
  std::span<const int> capacity_;
  std::vector<int> load_;
  std::vector<Node> assigned_to_;
  std::vector<std::vector<int>> assigned_edges_;
  std::vector<bool> visited_;
};

}  // namespace

std::optional<std::vector<Node>> capacitated_assignment(const Graph& g,
                                                        std::span<const Node> cover,
                                                        std::span<const int> capacity) {
  if (static_cast<int>(capacity.size()) != g.node_count())
    throw InputError("capacity vector has " + std::to_string(capacity.size()) +
                     " entries, expected " + std::to_string(g.node_count()));
  for (int c : capacity)
    if (c < 0) throw InputError("negative capacity");
  auto in_cover = node_mask(g, cover);
  for (const Edge& e : g.edges())
    if (!in_cover[e.u] && !in_cover[e.v])
      throw ContractError("node set is not a vertex cover");

  EdgeAssigner assigner(g, in_cover, capacity);
  if (!assigner.assign_all()) return std::nullopt;
  return assigner.assignment();
}

bool cap_assignment_feasible(const Graph& g, std::span<const Node> cover,
                             std::span<const int> capacity) {
  return capacitated_assignment(g, cover, capacity).has_value();
}

}  // namespace dkl
