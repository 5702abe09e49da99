#pragma once

#include <map>
#include <string>
#include <vector>

#include "dkl/graph.hpp"
#include "dkl/problems.hpp"

namespace dkl {

/// Least-significant-first base expansion with exactly `width` digits.
/// InputError unless base >= 2 and 0 <= a < base^width.
std::vector<int> digits(long long a, int base, int width);

/// sum_i digits[i] * base^i.
long long from_digits(const std::vector<int>& digits, int base);

/// (d+2) x d matrix with entries in 0..t-1.
struct IndexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;  // row-major

  int at(int row, int col) const { return entries[row * cols + col]; }
  friend bool operator==(const IndexMatrix&, const IndexMatrix&) = default;
};

/// Index i in base t with d(d+2) digits, filled row-major (row = delta,
/// column = lambda). InputError unless 0 <= i < t^{d(d+2)}.
IndexMatrix index_to_matrix(long long i, int d, int t);

// Gadget node labels. Printed forms, with the argument order used by `args`:
//   DS   Rcode(delta,lambda,gamma) Bcode(color,a) Bchoice(delta,lambda,g1,g2)
//        Rfill(color,a,j) Bfill(color,j) Binst(v) Rinst(i,edge_id)
//   IDS  Vuniv(u) Vtriple(i,s0,s1,s2) Xcode(gamma,delta) Xcode'(gamma,delta)
//        Ychoice(s0,s1,s2) Ychoice'(s0,s1,s2)
//   IM   Anode(v) Bnode(v) Aedge(i,edge_index) Bcolpair(alpha,beta)
//        X(gamma,delta) Y(gamma,delta)
enum class GadgetKind {
  Rcode, Bcode, Bchoice, Rfill, Bfill, Binst, Rinst,
  Vuniv, Vtriple, Xcode, Ychoice,
  Anode, Bnode, Aedge, Bcolpair, X, Y,
};

struct GadgetLabel {
  GadgetKind kind = GadgetKind::Rcode;
  std::vector<int> args;
  bool primed = false;  // Xcode' and Ychoice'

  friend auto operator<=>(const GadgetLabel&, const GadgetLabel&) = default;
};

std::string to_string(const GadgetLabel& label);
/// InputError on anything to_string would not produce.
GadgetLabel parse_label(const std::string& text);

enum class CompositionKind { ds, ids, im };

/// The IM parameter. The corrected count adds d(t-1) enforcement edges, the
/// number the YES-direction construction actually produces; the literal
/// count uses t(d-1).
enum class ImParameter { corrected, literal };

struct CompositionParams {
  int d = 0;
  int t = 0;
  int n = 0;
  long long T = 0;
  int c = 0;  // number of colors, IM only
  ImParameter im_parameter = ImParameter::corrected;

  friend bool operator==(const CompositionParams&, const CompositionParams&) = default;
};

class ComposedInstance {
 public:
  /// InputError unless labels has one distinct label per node.
  ComposedInstance(CompositionKind kind, Graph graph, int k, int red_count,
                   std::vector<GadgetLabel> labels, CompositionParams params);

  CompositionKind kind() const { return kind_; }
  const Graph& graph() const { return graph_; }
  int k() const { return k_; }
  /// DS only: nodes 0..red_count-1 are red, the rest blue.
  int red_count() const { return red_count_; }
  const std::vector<GadgetLabel>& labels() const { return labels_; }
  const GadgetLabel& label(Node v) const { return labels_.at(v); }
  const CompositionParams& params() const { return params_; }

  /// ContractError if no node carries the label.
  Node node(const GadgetLabel& label) const;
  bool has(const GadgetLabel& label) const { return index_.count(label) > 0; }

  /// DS only: the RBDS instance with separate red and blue id spaces.
  RbdsInstance as_rbds() const;

  friend bool operator==(const ComposedInstance& a, const ComposedInstance& b) {
    return a.kind_ == b.kind_ && a.graph_ == b.graph_ && a.k_ == b.k_ &&
           a.red_count_ == b.red_count_ && a.labels_ == b.labels_ && a.params_ == b.params_;
  }

 private:
  CompositionKind kind_;
  Graph graph_;
  int k_;
  int red_count_;
  std::vector<GadgetLabel> labels_;
  CompositionParams params_;
  std::map<GadgetLabel, Node> index_;
};

/// d^{d+2} - d, the number of fill-in indices j per color.
long long ds_fill_count(int d);
/// (d+2)d(t-1) + (n/2)(d^{d+2}-d) + n/2.
long long ds_parameter(int d, int t, int n);
/// (d+2)d(t-1) + (n/2)(d^{d+2}-d).
long long ds_enforcement_size(int d, int t, int n);
/// dt + C(n,3) + n/3.
long long ids_parameter(int d, int t, int n);
/// Enforcement edges + C(c,2) + n - c.
long long im_parameter(int d, int t, int c, int n, ImParameter variant = ImParameter::corrected);

/// RBDS composition of t^{d(d+2)} MPM instances on a common vertex set.
/// Node order: Rcode, Rfill, Rinst (reds), then Bcode, Bchoice, Bfill, Binst
/// (blues); each block in lexicographic label order.
ComposedInstance compose_ds(const std::vector<MpmInstance>& batch, int d, int t);

/// The red labels of the enforcement set for matrix m: every Rcode with
/// gamma != m[delta,lambda], and per color the fill-in reds covering the
/// lowest-address uncovered nodes outside M^color, j = 1, 2, ... in order.
std::vector<GadgetLabel> ds_enforcement_witness(const IndexMatrix& m, int d, int t, int n);

/// The addresses a = sum_delta (lambda t + m[delta,lambda]) (dt)^delta for
/// lambda = 0..d-1, ascending.
std::vector<long long> ds_matrix_addresses(const IndexMatrix& m, int d, int t);

/// Enforcement set for M_i plus Rinst(i,e) for every e in the matching;
/// sorted red node ids. ContractError if the matching is not a multicolored
/// perfect matching of `source` or `source` is not batch member i.
std::vector<Node> lift_ds_witness(const ComposedInstance& composed, const MpmInstance& source,
                                  long long i, const std::vector<int>& mpm_solution);

/// IDS composition of t^d X3C instances on a common universe (n % 3 == 0).
/// Node order: Xcode/Xcode' pairs, Ychoice/Ychoice' pairs, Vuniv, Vtriple.
ComposedInstance compose_ids(const std::vector<X3cInstance>& batch, int d, int t);

/// The independent dominating set of size k built from an exact cover of
/// batch member i; sorted node ids.
std::vector<Node> lift_ids_witness(const ComposedInstance& composed, const X3cInstance& source,
                                   long long i, const std::vector<int>& x3c_solution);

/// IM composition of t^d multicolored-clique instances sharing vertex set
/// and coloring, all edges bichromatic, C(c,2) - c > d.
/// Node order: X, Y, Anode, Bnode, Aedge, Bcolpair.
ComposedInstance compose_im(const std::vector<MccInstance>& batch, int d, int t,
                            ImParameter variant = ImParameter::corrected);

/// Induced matching of size d(t-1) + C(c,2) + n - c built from a
/// multicolored clique of batch member i; sorted indices into
/// composed.graph().edges().
std::vector<int> lift_im_witness(const ComposedInstance& composed, const MccInstance& source,
                                 long long i, const std::vector<Node>& clique);

}  // namespace dkl
