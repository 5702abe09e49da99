#include "dkl/compositions.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <set>

#include "dkl/errors.hpp"
#include "dkl/predicates.hpp"

namespace dkl {

namespace {

long long checked_pow(long long base, int exponent, const char* what) {
  long long out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > LLONG_MAX / base) throw InputError(std::string(what) + " is too large");
    out *= base;
  }
  return out;
}

long long binomial(long long n, int r) {
  if (r < 0 || r > n) return 0;
  long long out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

void check_dt(int d, int t) {
  if (d < 1) throw InputError("d must be >= 1");
  if (t < 2) throw InputError("t must be >= 2");
}

void check_batch_size(size_t size, long long T) {
  if (static_cast<long long>(size) != T)
    throw InputError("batch has " + std::to_string(size) + " instances, expected T = " +
                     std::to_string(T) + " (pad the batch first)");
}

void check_index(const ComposedInstance& composed, CompositionKind kind, long long i) {
  if (composed.kind() != kind) throw ContractError("composed instance has the wrong kind");
  if (i < 0 || i >= composed.params().T)
    throw ContractError("instance index " + std::to_string(i) + " out of range");
}

GadgetLabel label(GadgetKind kind, std::vector<int> args, bool primed = false) {
  return {kind, std::move(args), primed};
}

struct NameEntry {
  GadgetKind kind;
  const char* name;
  int arity;
};

constexpr std::array<NameEntry, 17> kNames{{
    {GadgetKind::Rcode, "Rcode", 3},     {GadgetKind::Bcode, "Bcode", 2},
    {GadgetKind::Bchoice, "Bchoice", 4}, {GadgetKind::Rfill, "Rfill", 3},
    {GadgetKind::Bfill, "Bfill", 2},     {GadgetKind::Binst, "Binst", 1},
    {GadgetKind::Rinst, "Rinst", 2},     {GadgetKind::Vuniv, "Vuniv", 1},
    {GadgetKind::Vtriple, "Vtriple", 4}, {GadgetKind::Xcode, "Xcode", 2},
    {GadgetKind::Ychoice, "Ychoice", 3}, {GadgetKind::Anode, "Anode", 1},
    {GadgetKind::Bnode, "Bnode", 1},     {GadgetKind::Aedge, "Aedge", 2},
    {GadgetKind::Bcolpair, "Bcolpair", 2}, {GadgetKind::X, "X", 2},
    {GadgetKind::Y, "Y", 2},
}};

const NameEntry& entry(GadgetKind kind) {
  for (const auto& e : kNames)
    if (e.kind == kind) return e;
  throw ContractError("unknown gadget kind");
}

bool primable(GadgetKind kind) { return kind == GadgetKind::Xcode || kind == GadgetKind::Ychoice; }

// Accumulates labelled nodes and edges in id order.
class Builder {
 public:
  Node add(GadgetLabel l) {
    labels_.push_back(std::move(l));
    return static_cast<Node>(labels_.size() - 1);
  }
  void connect(Node a, Node b) { edges_.emplace_back(a, b); }
  Node size() const { return static_cast<Node>(labels_.size()); }

  ComposedInstance finish(CompositionKind kind, long long k, int red_count,
                          CompositionParams params) {
    if (k > INT_MAX) throw InputError("composed parameter does not fit in an int");
    Graph g(size(), edges_);
    return ComposedInstance(kind, std::move(g), static_cast<int>(k), red_count,
                            std::move(labels_), params);
  }

 private:
  std::vector<GadgetLabel> labels_;
  std::vector<Edge> edges_;
};

std::vector<std::array<int, 3>> all_triples(int n) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) out.push_back({a, b, c});
  return out;
}

std::array<int, 3> sorted_triple(std::array<int, 3> s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Node> sorted_nodes(std::vector<Node> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<int> digits(long long a, int base, int width) {
  if (base < 2) throw InputError("base must be >= 2");
  if (width < 0) throw InputError("width must be >= 0");
  if (a < 0) throw InputError("cannot expand a negative number");
  std::vector<int> out(width);
  for (int i = 0; i < width; ++i) {
    out[i] = static_cast<int>(a % base);
    a /= base;
  }
  if (a != 0) throw InputError("value does not fit in " + std::to_string(width) + " digits");
  return out;
}

long long from_digits(const std::vector<int>& ds, int base) {
  long long out = 0;
  for (size_t i = ds.size(); i-- > 0;) out = out * base + ds[i];
  return out;
}

IndexMatrix index_to_matrix(long long i, int d, int t) {
  check_dt(d, t);
  long long T = checked_pow(t, d * (d + 2), "t^{d(d+2)}");
  if (i < 0 || i >= T) throw InputError("matrix index " + std::to_string(i) + " out of range");
  return {d + 2, d, digits(i, t, d * (d + 2))};
}

std::string to_string(const GadgetLabel& l) {
  std::string out = entry(l.kind).name;
  if (l.primed) out += '\'';
  out += '(';
  for (size_t i = 0; i < l.args.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(l.args[i]);
  }
  return out + ')';
}

GadgetLabel parse_label(const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw InputError("malformed label '" + text + "'");
  std::string name = text.substr(0, open);
  bool primed = !name.empty() && name.back() == '\'';
  if (primed) name.pop_back();
  const NameEntry* found = nullptr;
  for (const auto& e : kNames)
    if (name == e.name) found = &e;
  if (!found || (primed && !primable(found->kind)))
    throw InputError("unknown label name in '" + text + "'");
  GadgetLabel out{found->kind, {}, primed};
  std::string body = text.substr(open + 1, text.size() - open - 2);
  size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    size_t comma = body.find(',', pos);
    std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos ||
        piece.size() > 9)
      throw InputError("malformed label argument in '" + text + "'");
    out.args.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(out.args.size()) != found->arity)
    throw InputError("wrong number of arguments in '" + text + "'");
  return out;
}

ComposedInstance::ComposedInstance(CompositionKind kind, Graph graph, int k, int red_count,
                                   std::vector<GadgetLabel> labels, CompositionParams params)
    : kind_(kind),
      graph_(std::move(graph)),
      k_(k),
      red_count_(red_count),
      labels_(std::move(labels)),
      params_(params) {
  if (static_cast<int>(labels_.size()) != graph_.node_count())
    throw InputError("expected one label per node");
  for (Node v = 0; v < graph_.node_count(); ++v)
    if (!index_.emplace(labels_[v], v).second)
      throw InputError("duplicate label " + to_string(labels_[v]));
  if (red_count_ < 0 || red_count_ > graph_.node_count()) throw InputError("bad red count");
}

Node ComposedInstance::node(const GadgetLabel& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw ContractError("no node labelled " + to_string(l));
  return it->second;
}

RbdsInstance ComposedInstance::as_rbds() const {
  if (kind_ != CompositionKind::ds) throw ContractError("only DS compositions are RBDS instances");
  RbdsInstance out{red_count_, graph_.node_count() - red_count_, {}, k_};
  for (const Edge& e : graph_.edges()) {
    if (e.u >= red_count_ || e.v < red_count_)
      throw ContractError("composed DS graph has a non red-blue edge");
    out.edges.emplace_back(e.u, e.v - red_count_);
  }
  return out;
}

long long ds_fill_count(int d) { return checked_pow(d, d + 2, "d^{d+2}") - d; }

long long ds_enforcement_size(int d, int t, int n) {
  return static_cast<long long>(d + 2) * d * (t - 1) + static_cast<long long>(n / 2) * ds_fill_count(d);
}

long long ds_parameter(int d, int t, int n) { return ds_enforcement_size(d, t, n) + n / 2; }

long long ids_parameter(int d, int t, int n) {
  return static_cast<long long>(d) * t + binomial(n, 3) + n / 3;
}

long long im_parameter(int d, int t, int c, int n, ImParameter variant) {
  long long enforcement = variant == ImParameter::corrected ? static_cast<long long>(d) * (t - 1)
                                                            : static_cast<long long>(t) * (d - 1);
  return enforcement + binomial(c, 2) + n - c;
}

// ---------------------------------------------------------------------------
// DS

ComposedInstance compose_ds(const std::vector<MpmInstance>& batch, int d, int t) {
  check_dt(d, t);
  const long long T = checked_pow(t, d * (d + 2), "T = t^{d(d+2)}");
  check_batch_size(batch.size(), T);
  const int n = batch.front().graph.node_count();
  for (const auto& inst : batch) {
    require_valid(inst);
    if (inst.graph.node_count() != n) throw InputError("batch instances have different vertex sets");
  }
  if (n < 2) throw InputError("MPM instances need at least 2 nodes");

  const int colors = n / 2;
  const int base = d * t;
  const long long A = checked_pow(base, d + 2, "(dt)^{d+2}");
  const long long F = ds_fill_count(d);
  if (static_cast<long long>(colors) * A * (F + 1) > 50'000'000)
    throw InputError("composed DS graph would be too large");

  Builder b;
  // Reds.
  for (int delta = 0; delta < d + 2; ++delta)
    for (int lambda = 0; lambda < d; ++lambda)
      for (int gamma = 0; gamma < t; ++gamma) b.add(label(GadgetKind::Rcode, {delta, lambda, gamma}));
  const Node rfill0 = b.size();
  for (int l = 0; l < colors; ++l)
    for (long long a = 0; a < A; ++a)
      for (long long j = 1; j <= F; ++j)
        b.add(label(GadgetKind::Rfill, {l, static_cast<int>(a), static_cast<int>(j)}));
  std::vector<Node> rinst0(T);
  for (long long i = 0; i < T; ++i) {
    rinst0[i] = b.size();
    for (const auto& e : batch[i].graph.edges())
      b.add(label(GadgetKind::Rinst, {static_cast<int>(i), e.id}));
  }
  const int red_count = b.size();
  // Blues.
  const Node bcode0 = b.size();
  for (int l = 0; l < colors; ++l)
    for (long long a = 0; a < A; ++a) b.add(label(GadgetKind::Bcode, {l, static_cast<int>(a)}));
  auto rcode = [&](int delta, int lambda, int gamma) {
    return static_cast<Node>((delta * d + lambda) * t + gamma);
  };
  auto bcode = [&](int l, long long a) { return static_cast<Node>(bcode0 + l * A + a); };
  for (int delta = 0; delta < d + 2; ++delta)
    for (int lambda = 0; lambda < d; ++lambda)
      for (int g1 = 0; g1 < t; ++g1)
        for (int g2 = g1 + 1; g2 < t; ++g2) {
          Node v = b.add(label(GadgetKind::Bchoice, {delta, lambda, g1, g2}));
          b.connect(v, rcode(delta, lambda, g1));
          b.connect(v, rcode(delta, lambda, g2));
        }
  const Node bfill0 = b.size();
  for (int l = 0; l < colors; ++l)
    for (long long j = 1; j <= F; ++j) b.add(label(GadgetKind::Bfill, {l, static_cast<int>(j)}));
  const Node binst0 = b.size();
  for (int v = 0; v < n; ++v) b.add(label(GadgetKind::Binst, {v}));

  // Encoding edges: r_{delta,lambda,gamma} ~ b^l_a iff a_delta = lambda t + gamma.
  for (int l = 0; l < colors; ++l)
    for (long long a = 0; a < A; ++a) {
      auto ds = digits(a, base, d + 2);
      for (int delta = 0; delta < d + 2; ++delta)
        b.connect(rcode(delta, ds[delta] / t, ds[delta] % t), bcode(l, a));
    }
  // Fill-in edges.
  for (int l = 0; l < colors; ++l)
    for (long long a = 0; a < A; ++a)
      for (long long j = 1; j <= F; ++j) {
        Node r = static_cast<Node>(rfill0 + (l * A + a) * F + (j - 1));
        b.connect(r, bcode(l, a));
        b.connect(r, static_cast<Node>(bfill0 + l * F + (j - 1)));
      }
  // Instance and connector edges.
  for (long long i = 0; i < T; ++i) {
    auto addresses = ds_matrix_addresses(index_to_matrix(i, d, t), d, t);
    const auto& inst = batch[i];
    for (size_t e = 0; e < inst.graph.edges().size(); ++e) {
      const auto& edge = inst.graph.edges()[e];
      Node r = static_cast<Node>(rinst0[i] + e);
      b.connect(r, binst0 + edge.u);
      b.connect(r, binst0 + edge.v);
      for (long long a : addresses) b.connect(r, bcode(inst.colors[e], a));
    }
  }
  CompositionParams params{d, t, n, T, 0, ImParameter::corrected};
  return b.finish(CompositionKind::ds, ds_parameter(d, t, n), red_count, params);
}

std::vector<long long> ds_matrix_addresses(const IndexMatrix& m, int d, int t) {
  std::vector<long long> out;
  for (int lambda = 0; lambda < d; ++lambda) {
    std::vector<int> ds(d + 2);
    for (int delta = 0; delta < d + 2; ++delta) ds[delta] = lambda * t + m.at(delta, lambda);
    out.push_back(from_digits(ds, d * t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GadgetLabel> ds_enforcement_witness(const IndexMatrix& m, int d, int t, int n) {
  check_dt(d, t);
  if (n < 2 || n % 2 != 0) throw InputError("n must be even and >= 2");
  if (m.rows != d + 2 || m.cols != d || static_cast<int>(m.entries.size()) != (d + 2) * d)
    throw InputError("matrix must be (d+2) x d");
  for (int x : m.entries)
    if (x < 0 || x >= t) throw InputError("matrix entry out of range");

  std::vector<GadgetLabel> out;
  for (int delta = 0; delta < d + 2; ++delta)
    for (int lambda = 0; lambda < d; ++lambda)
      for (int gamma = 0; gamma < t; ++gamma)
        if (gamma != m.at(delta, lambda)) out.push_back(label(GadgetKind::Rcode, {delta, lambda, gamma}));

  // Z: addresses whose every digit is lambda t + m[delta,lambda] for some
  // lambda; these are exactly the Bcode nodes the Rcode part leaves open.
  const int base = d * t;
  const long long A = checked_pow(base, d + 2, "(dt)^{d+2}");
  const auto M = ds_matrix_addresses(m, d, t);
  std::vector<long long> open;
  for (long long a = 0; a < A; ++a) {
    auto ds = digits(a, base, d + 2);
    bool in_z = true;
    for (int delta = 0; delta < d + 2 && in_z; ++delta)
      in_z = ds[delta] % t == m.at(delta, ds[delta] / t);
    if (in_z && !std::binary_search(M.begin(), M.end(), a)) open.push_back(a);
  }
  const long long F = ds_fill_count(d);
  if (static_cast<long long>(open.size()) != F)
    throw ContractError("internal: fill-in candidates do not match d^{d+2} - d");
  for (int l = 0; l < n / 2; ++l)
    for (long long j = 1; j <= F; ++j)
      out.push_back(label(GadgetKind::Rfill, {l, static_cast<int>(open[j - 1]), static_cast<int>(j)}));
  return out;
}

std::vector<Node> lift_ds_witness(const ComposedInstance& composed, const MpmInstance& source,
                                  long long i, const std::vector<int>& mpm_solution) {
  check_index(composed, CompositionKind::ds, i);
  const auto& p = composed.params();
  if (source.graph.node_count() != p.n) throw ContractError("source has the wrong vertex set");
  const Graph& g = composed.graph();
  const int ii = static_cast<int>(i);
  const int m = static_cast<int>(source.graph.edges().size());
  if (composed.has(label(GadgetKind::Rinst, {ii, m})))
    throw ContractError("source is not batch member " + std::to_string(i));
  for (const auto& e : source.graph.edges()) {
    GadgetLabel rl = label(GadgetKind::Rinst, {ii, e.id});
    if (!composed.has(rl)) throw ContractError("source is not batch member " + std::to_string(i));
    Node r = composed.node(rl);
    bool ok = g.has_edge(r, composed.node(label(GadgetKind::Binst, {e.u}))) &&
              g.has_edge(r, composed.node(label(GadgetKind::Binst, {e.v})));
    for (Node w : g.neighbors(r)) {
      const auto& wl = composed.label(w);
      if (wl.kind == GadgetKind::Bcode && wl.args[0] != source.colors[e.id]) ok = false;
    }
    if (!ok) throw ContractError("source is not batch member " + std::to_string(i));
  }
  if (!is_multicolored_perfect_matching(source, mpm_solution))
    throw ContractError("not a multicolored perfect matching of instance " + std::to_string(i));

  std::vector<Node> out;
  for (const auto& l : ds_enforcement_witness(index_to_matrix(i, p.d, p.t), p.d, p.t, p.n))
    out.push_back(composed.node(l));
  for (int e : mpm_solution) out.push_back(composed.node(label(GadgetKind::Rinst, {ii, e})));
  return sorted_nodes(std::move(out));
}

// ---------------------------------------------------------------------------
// IDS

ComposedInstance compose_ids(const std::vector<X3cInstance>& batch, int d, int t) {
  check_dt(d, t);
  const long long T = checked_pow(t, d, "T = t^d");
  check_batch_size(batch.size(), T);
  const int n = batch.front().universe_size;
  for (const auto& inst : batch) {
    require_valid(inst, Strictness::composition);
    if (inst.universe_size != n) throw InputError("batch instances have different universes");
  }
  const auto triples = all_triples(n);
  const int C = static_cast<int>(triples.size());
  if (T * C > 20'000'000) throw InputError("composed IDS graph would be too large");

  Builder b;
  auto x = [&](int gamma, int delta, bool primed) {
    return static_cast<Node>(2 * (gamma * d + delta) + primed);
  };
  for (int gamma = 0; gamma < t; ++gamma)
    for (int delta = 0; delta < d; ++delta) {
      b.add(label(GadgetKind::Xcode, {gamma, delta}));
      b.add(label(GadgetKind::Xcode, {gamma, delta}, true));
      b.connect(x(gamma, delta, false), x(gamma, delta, true));
    }
  const Node y0 = b.size();
  for (const auto& s : triples) {
    Node y = b.add(label(GadgetKind::Ychoice, {s[0], s[1], s[2]}));
    Node yp = b.add(label(GadgetKind::Ychoice, {s[0], s[1], s[2]}, true));
    b.connect(y, yp);
  }
  const Node univ0 = b.size();
  for (int u = 0; u < n; ++u) b.add(label(GadgetKind::Vuniv, {u}));
  for (long long i = 0; i < T; ++i) {
    auto id = digits(i, t, d);
    std::set<std::array<int, 3>> family;
    for (const auto& s : batch[i].sets) family.insert(sorted_triple(s));
    for (int s = 0; s < C; ++s) {
      const auto& S = triples[s];
      Node v = b.add(label(GadgetKind::Vtriple, {static_cast<int>(i), S[0], S[1], S[2]}));
      b.connect(y0 + 2 * s, v);
      for (int delta = 0; delta < d; ++delta) b.connect(x(id[delta], delta, false), v);
      if (family.count(S))
        for (int u : S) b.connect(univ0 + u, v);
    }
  }
  CompositionParams params{d, t, n, T, 0, ImParameter::corrected};
  return b.finish(CompositionKind::ids, ids_parameter(d, t, n), 0, params);
}

std::vector<Node> lift_ids_witness(const ComposedInstance& composed, const X3cInstance& source,
                                   long long i, const std::vector<int>& x3c_solution) {
  check_index(composed, CompositionKind::ids, i);
  const auto& p = composed.params();
  if (source.universe_size != p.n) throw ContractError("source has the wrong universe");
  const Graph& g = composed.graph();
  const int ii = static_cast<int>(i);
  std::set<std::array<int, 3>> family;
  for (const auto& s : source.sets) family.insert(sorted_triple(s));
  for (const auto& S : all_triples(p.n)) {
    Node v = composed.node(label(GadgetKind::Vtriple, {ii, S[0], S[1], S[2]}));
    bool linked = g.has_edge(v, composed.node(label(GadgetKind::Vuniv, {S[0]})));
    if (linked != (family.count(S) > 0))
      throw ContractError("source is not batch member " + std::to_string(i));
  }
  if (!is_exact_cover(source, x3c_solution))
    throw ContractError("not an exact cover of instance " + std::to_string(i));

  std::set<std::array<int, 3>> chosen;
  for (int s : x3c_solution) chosen.insert(sorted_triple(source.sets[s]));
  auto id = digits(i, p.t, p.d);
  std::vector<Node> out;
  for (int gamma = 0; gamma < p.t; ++gamma)
    for (int delta = 0; delta < p.d; ++delta)
      out.push_back(composed.node(label(GadgetKind::Xcode, {gamma, delta}, id[delta] == gamma)));
  for (const auto& S : all_triples(p.n)) {
    bool in = chosen.count(S) > 0;
    out.push_back(composed.node(label(GadgetKind::Ychoice, {S[0], S[1], S[2]}, in)));
    if (in) out.push_back(composed.node(label(GadgetKind::Vtriple, {ii, S[0], S[1], S[2]})));
  }
  return sorted_nodes(std::move(out));
}

// ---------------------------------------------------------------------------
// IM

ComposedInstance compose_im(const std::vector<MccInstance>& batch, int d, int t,
                            ImParameter variant) {
  check_dt(d, t);
  const long long T = checked_pow(t, d, "T = t^d");
  check_batch_size(batch.size(), T);
  const auto& first = batch.front();
  const int n = first.graph.node_count();
  const int c = first.num_colors;
  for (const auto& inst : batch) {
    require_valid(inst, Strictness::composition);
    if (inst.graph.node_count() != n || inst.node_colors != first.node_colors ||
        inst.num_colors != c)
      throw InputError("batch instances must share vertex set and coloring");
  }
  if (binomial(c, 2) - c <= d)
    throw InputError("need C(c,2) - c > d, got c = " + std::to_string(c) + ", d = " + std::to_string(d));

  Builder b;
  for (int gamma = 0; gamma < t; ++gamma)
    for (int delta = 0; delta < d; ++delta) b.add(label(GadgetKind::X, {gamma, delta}));
  const Node y0 = b.size();
  for (int gamma = 0; gamma < t; ++gamma)
    for (int delta = 0; delta < d; ++delta) {
      Node y = b.add(label(GadgetKind::Y, {gamma, delta}));
      b.connect(y - y0, y);
    }
  const Node anode0 = b.size();
  for (int v = 0; v < n; ++v) b.add(label(GadgetKind::Anode, {v}));
  const Node bnode0 = b.size();
  for (int v = 0; v < n; ++v) {
    Node bv = b.add(label(GadgetKind::Bnode, {v}));
    b.connect(anode0 + v, bv);
  }
  std::vector<Node> aedge0(T);
  for (long long i = 0; i < T; ++i) {
    aedge0[i] = b.size();
    for (int e = 0; e < batch[i].graph.edge_count(); ++e)
      b.add(label(GadgetKind::Aedge, {static_cast<int>(i), e}));
  }
  const Node pair0 = b.size();
  auto colpair = [&](int alpha, int beta) {
    if (alpha > beta) std::swap(alpha, beta);
    // Rank of (alpha, beta) among pairs 1 <= alpha < beta <= c.
    int rank = 0;
    for (int a = 1; a < alpha; ++a) rank += c - a;
    return static_cast<Node>(pair0 + rank + (beta - alpha - 1));
  };
  for (int alpha = 1; alpha <= c; ++alpha)
    for (int beta = alpha + 1; beta <= c; ++beta) b.add(label(GadgetKind::Bcolpair, {alpha, beta}));

  for (long long i = 0; i < T; ++i) {
    auto id = digits(i, t, d);
    const auto& inst = batch[i];
    for (int e = 0; e < inst.graph.edge_count(); ++e) {
      const Edge& edge = inst.graph.edges()[e];
      Node a = aedge0[i] + e;
      b.connect(a, bnode0 + edge.u);
      b.connect(a, bnode0 + edge.v);
      b.connect(a, colpair(inst.node_colors[edge.u], inst.node_colors[edge.v]));
      for (int delta = 0; delta < d; ++delta) b.connect(id[delta] * d + delta, a);
    }
  }
  CompositionParams params{d, t, n, T, c, variant};
  return b.finish(CompositionKind::im, im_parameter(d, t, c, n, variant), 0, params);
}

std::vector<int> lift_im_witness(const ComposedInstance& composed, const MccInstance& source,
                                 long long i, const std::vector<Node>& clique) {
  check_index(composed, CompositionKind::im, i);
  const auto& p = composed.params();
  const Graph& g = composed.graph();
  const int ii = static_cast<int>(i);
  if (source.graph.node_count() != p.n || source.num_colors != p.c)
    throw ContractError("source has the wrong vertex set or colors");
  const int m = source.graph.edge_count();
  if (composed.has(label(GadgetKind::Aedge, {ii, m})))
    throw ContractError("source is not batch member " + std::to_string(i));
  for (int e = 0; e < m; ++e) {
    GadgetLabel al = label(GadgetKind::Aedge, {ii, e});
    const Edge& edge = source.graph.edges()[e];
    if (!composed.has(al) ||
        !g.has_edge(composed.node(al), composed.node(label(GadgetKind::Bnode, {edge.u}))) ||
        !g.has_edge(composed.node(al), composed.node(label(GadgetKind::Bnode, {edge.v}))))
      throw ContractError("source is not batch member " + std::to_string(i));
  }
  if (static_cast<int>(clique.size()) != p.c || !is_multicolored_clique(source, clique))
    throw ContractError("not a multicolored clique on all colors of instance " + std::to_string(i));

  std::vector<bool> in_clique(p.n, false);
  for (Node v : clique) in_clique[v] = true;
  std::vector<std::pair<Node, Node>> pairs;
  for (size_t a = 0; a < clique.size(); ++a)
    for (size_t b = a + 1; b < clique.size(); ++b) {
      Node u = clique[a], v = clique[b];
      int e = source.graph.edge_index(u, v);
      int alpha = source.node_colors[u], beta = source.node_colors[v];
      pairs.emplace_back(composed.node(label(GadgetKind::Aedge, {ii, e})),
                         composed.node(label(GadgetKind::Bcolpair,
                                             {std::min(alpha, beta), std::max(alpha, beta)})));
    }
  for (int v = 0; v < p.n; ++v)
    if (!in_clique[v])
      pairs.emplace_back(composed.node(label(GadgetKind::Anode, {v})),
                         composed.node(label(GadgetKind::Bnode, {v})));
  auto id = digits(i, p.t, p.d);
  for (int gamma = 0; gamma < p.t; ++gamma)
    for (int delta = 0; delta < p.d; ++delta)
      if (id[delta] != gamma)
        pairs.emplace_back(composed.node(label(GadgetKind::X, {gamma, delta})),
                           composed.node(label(GadgetKind::Y, {gamma, delta})));

  std::vector<int> out;
  for (auto [u, v] : pairs) out.push_back(g.edge_index(u, v));
  std::sort(out.begin(), out.end());
  if (!is_induced_matching_by_index(g, out))
    throw ContractError("internal: lifted matching is not induced");
  return out;
}

}  // namespace dkl
