#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dkl/errors.hpp"
#include "dkl/generators.hpp"
#include "dkl/oracles.hpp"
#include "dkl/reductions.hpp"
#include "io.hpp"

using namespace dkl;
using io::json;

namespace {

constexpr int kExitFailedCase = 1;
constexpr int kExitUsage = 2;

void emit(const json& j, const std::string& out_path = "") {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << j.dump(2) << '\n';
}

io::InstanceFile load(const std::string& path) { return io::from_json(io::read_json(path)); }

template <typename T>
const T& expect(const io::InstanceFile& file, const std::string& wanted) {
  if (auto p = std::get_if<T>(&file.payload)) return *p;
  throw InputError("expected a " + wanted + " instance, got " + io::kind_of(file));
}

// Graph and budget of anything graph-shaped.
std::pair<Graph, std::optional<int>> as_graph(const io::InstanceFile& file) {
  if (auto d = std::get_if<io::GraphDoc>(&file.payload)) return {d->graph, d->k};
  if (auto c = std::get_if<ComposedInstance>(&file.payload)) return {c->graph(), c->k()};
  if (auto c = std::get_if<CapVcInstance>(&file.payload)) return {c->graph, c->k};
  if (auto m = std::get_if<MccInstance>(&file.payload)) return {m->graph, std::nullopt};
  if (auto r = std::get_if<RbdsInstance>(&file.payload)) return {rbds_graph(*r), r->k};
  throw InputError("a " + io::kind_of(file) + " instance has no plain graph");
}

int need_k(std::optional<int> from_flag, std::optional<int> from_file) {
  if (from_flag) return *from_flag;
  if (from_file) return *from_file;
  throw InputError("--k is required for this instance");
}

json solve(const std::string& problem, const io::InstanceFile& file, std::optional<int> k,
           const SolverOptions& options) {
  SolveResult r;
  if (problem == "ds" || problem == "ids" || problem == "convc" || problem == "im") {
    auto [g, file_k] = as_graph(file);
    const int budget = need_k(k, file_k);
    if (problem == "ds") r = solve_ds(g, budget, options);
    if (problem == "ids") r = solve_ids(g, budget, options);
    if (problem == "convc") r = solve_convc(g, budget, options);
    if (problem == "im") r = solve_im(g, budget, options);
  } else if (problem == "rbds") {
    if (auto c = std::get_if<ComposedInstance>(&file.payload)) {
      auto inst = c->as_rbds();
      if (k) inst.k = *k;
      r = solve_rbds(inst, options);
    } else {
      auto inst = expect<RbdsInstance>(file, "rbds");
      if (k) inst.k = *k;
      r = solve_rbds(inst, options);
    }
  } else if (problem == "mpm") {
    r = solve_mpm(expect<MpmInstance>(file, "mpm"), options);
  } else if (problem == "x3c") {
    r = solve_x3c(expect<X3cInstance>(file, "x3c"), options);
  } else if (problem == "mcc") {
    const auto& inst = expect<MccInstance>(file, "mcc");
    r = solve_mcc(inst, k.value_or(inst.num_colors), options);
  } else if (problem == "setcover") {
    auto inst = expect<SetCoverInstance>(file, "setcover");
    if (k) inst.k = *k;
    r = solve_setcover(inst, options);
  } else if (problem == "capvc") {
    auto inst = expect<CapVcInstance>(file, "capvc");
    if (k) inst.k = *k;
    r = solve_capvc(inst, options);
  } else {
    throw InputError("unknown problem " + problem);
  }
  return {{"answer", r.answer}, {"witness", r.witness}};
}

int minimal_t(long long batch, int exponent) {
  for (int t = 2;; ++t) {
    long long p = 1;
    for (int i = 0; i < exponent && p < batch; ++i) p *= t;
    if (p >= batch) return t;
  }
}

long long power(int t, int exponent) {
  long long p = 1;
  for (int i = 0; i < exponent; ++i) p *= t;
  return p;
}

std::vector<std::string> input_paths(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const auto& p : inputs) {
    if (std::filesystem::is_directory(p)) {
      std::vector<std::string> inside;
      for (const auto& e : std::filesystem::directory_iterator(p))
        if (e.path().extension() == ".json") inside.push_back(e.path().string());
      std::sort(inside.begin(), inside.end());
      out.insert(out.end(), inside.begin(), inside.end());
    } else {
      out.push_back(p);
    }
  }
  if (out.empty()) throw InputError("no input instances");
  return out;
}

template <typename Instance>
std::vector<Instance> load_batch(const std::vector<std::string>& paths, const std::string& kind) {
  std::vector<Instance> out;
  for (const auto& p : paths) out.push_back(expect<Instance>(load(p), kind));
  return out;
}

json compose(const std::string& kind, const std::vector<std::string>& inputs, int d,
             std::optional<int> t, ImParameter im_parameter) {
  if (d < 1) throw InputError("--d must be at least 1");
  const auto paths = input_paths(inputs);
  const int exponent = kind == "ds" ? d * (d + 2) : d;
  const int tt = t ? *t : minimal_t(static_cast<long long>(paths.size()), exponent);
  const long long T = power(tt, exponent);
  if (T > 1'000'000) throw InputError("batch size t^" + std::to_string(exponent) + " too large");
  const int required = static_cast<int>(T);
  std::optional<ComposedInstance> composed;
  if (kind == "ds") {
    composed = compose_ds(pad_batch(load_batch<MpmInstance>(paths, "mpm"), required), d, tt);
  } else if (kind == "ids") {
    composed = compose_ids(pad_batch(load_batch<X3cInstance>(paths, "x3c"), required), d, tt);
  } else if (kind == "im") {
    composed = compose_im(pad_batch(load_batch<MccInstance>(paths, "mcc"), required), d, tt,
                          im_parameter);
  } else {
    throw InputError("unknown composition " + kind);
  }
  return io::to_json(io::InstanceFile{std::move(*composed), {}});
}

json reduce(const std::string& kind, const io::InstanceFile& file, CapacityVariant variant) {
  if (kind == "rbds-to-ds") {
    auto out = rbds_to_ds(expect<RbdsInstance>(file, "rbds"));
    return io::to_json(io::InstanceFile{io::GraphDoc{out.graph, out.k}, out.labels});
  }
  if (kind == "mpm-simplify") {
    auto out = mpm_simplify(expect<MpmInstance>(file, "mpm"));
    return io::to_json(io::InstanceFile{out.instance, out.labels});
  }
  if (kind == "setcover-to-capvc") {
    const auto& inst = expect<SetCoverInstance>(file, "setcover");
    return io::to_json(
        io::InstanceFile{setcover_to_capvc(inst, variant), setcover_to_capvc_labels(inst)});
  }
  throw InputError("unknown reduction " + kind);
}

json kernelize(const std::string& kind, const io::InstanceFile& file, std::optional<int> k, int d) {
  if (kind == "convc") {
    auto [g, file_k] = as_graph(file);
    const int budget = need_k(k, file_k);
    auto out = convc_kernelize(g, budget, d);
    return {{"instance", io::to_json(io::InstanceFile{io::GraphDoc{out.graph, out.k}, {}})},
            {"old_to_new", out.old_to_new},
            {"trace", io::to_json(out.trace)},
            {"size_bound", out.size_bound},
            {"within_bound", out.within_bound}};
  }
  if (kind == "capvc") {
    auto inst = expect<CapVcInstance>(file, "capvc");
    if (k) inst.k = *k;
    auto out = capvc_kernelize(inst, d);
    return {{"instance", io::to_json(io::InstanceFile{out.instance, {}})},
            {"old_to_new", out.old_to_new},
            {"trace", io::to_json(out.trace)},
            {"size_bound", out.size_bound},
            {"within_bound", out.within_bound},
            {"precondition_holds", out.precondition_holds},
            {"canonical_no", out.canonical_no}};
  }
  throw InputError("unknown kernel " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernelization toolkit for problems on d-degenerate graphs"};
  app.require_subcommand(1);

  std::string file, out_path, problem, kind, variant = "corrected", im_variant = "corrected";
  std::optional<int> k, t;
  int d = 1;
  bool parallel = false, dimacs = false;

  auto* degen = app.add_subcommand("degen", "Peeling degeneracy and ordering");
  degen->add_option("file", file, "Instance file or - for stdin")->required();
  degen->add_flag("--dimacs", dimacs, "Print the graph in DIMACS edge format instead");

  auto* solve_cmd = app.add_subcommand("solve", "Exact oracle");
  solve_cmd->add_option("problem", problem,
                        "ds|ids|convc|im|rbds|mpm|x3c|mcc|setcover|capvc")
      ->required()
      ->check(CLI::IsMember({"ds", "ids", "convc", "im", "rbds", "mpm", "x3c", "mcc", "setcover",
                             "capvc"}));
  solve_cmd->add_option("file", file)->required();
  solve_cmd->add_option("--k", k, "Solution size (defaults to the file's k)");
  solve_cmd->add_flag("--parallel", parallel, "Split the search root across OpenMP threads");

  auto* kernel_cmd = app.add_subcommand("kernelize", "Apply the reduction rules to fixpoint");
  kernel_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"convc", "capvc"}));
  kernel_cmd->add_option("file", file)->required();
  kernel_cmd->add_option("--k", k);
  kernel_cmd->add_option("--d", d)->required();
  kernel_cmd->add_option("--out", out_path);

  std::vector<std::string> inputs;
  auto* compose_cmd = app.add_subcommand("compose", "Weak composition of a batch");
  compose_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"ds", "ids", "im"}));
  compose_cmd->add_option("--inputs", inputs, "Instance files or directories of *.json")
      ->required();
  compose_cmd->add_option("--d", d)->required();
  compose_cmd->add_option("--t", t, "Defaults to the least t whose batch size fits the inputs");
  compose_cmd->add_option("--im-parameter", im_variant)
      ->check(CLI::IsMember({"corrected", "literal"}));
  compose_cmd->add_option("--out", out_path);

  auto* reduce_cmd = app.add_subcommand("reduce", "Standalone reductions");
  reduce_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"rbds-to-ds", "mpm-simplify", "setcover-to-capvc"}));
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--variant", variant)->check(CLI::IsMember({"corrected", "literal"}));
  reduce_cmd->add_option("--out", out_path);

  int n = 4, m = 6, c = 4;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool planted = false, twin_heavy = false;
  auto* gen_cmd = app.add_subcommand("gen", "Seeded instance generators");
  gen_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"mpm", "x3c", "mcc", "graph"}));
  gen_cmd->add_option("--seed", seed)->required();
  gen_cmd->add_option("--n", n);
  gen_cmd->add_option("--m", m, "Edges (mpm) or sets (x3c)");
  gen_cmd->add_option("--c", c, "Colors (mcc)");
  gen_cmd->add_option("--d", d, "Degeneracy bound (graph)");
  gen_cmd->add_option("--p", p, "Edge probability (mcc, graph)");
  gen_cmd->add_flag("--planted", planted, "Plant a solution (otherwise resample until NO)");
  gen_cmd->add_flag("--twin-heavy", twin_heavy, "Graph with large twin classes");
  gen_cmd->add_flag("--dimacs", dimacs, "DIMACS output (graph only)");
  gen_cmd->add_option("--out", out_path);

  std::string check;
  int trials = 100, max_n = 14, max_k = 6, matrices = 50;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification check");
  verify_cmd->add_option("check", check)
      ->required()
      ->check(CLI::IsMember({"or", "kernel", "reduction", "degeneracy", "enforcement", "bipartite"}));
  verify_cmd->add_option("--kind", kind,
                         "ds|ids|im, convc|capvc or rbds-ds|mpm-simplify|setcover-capvc");
  verify_cmd->add_option("--d", d);
  verify_cmd->add_option("--t", t);
  verify_cmd->add_option("--n", n);
  verify_cmd->add_option("--m", m);
  verify_cmd->add_option("--c", c);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--max-n", max_n);
  verify_cmd->add_option("--max-k", max_k);
  verify_cmd->add_option("--matrices", matrices);
  verify_cmd->add_option("--variant", variant)->check(CLI::IsMember({"corrected", "literal"}));
  verify_cmd->add_option("--im-parameter", im_variant)
      ->check(CLI::IsMember({"corrected", "literal"}));
  verify_cmd->add_flag("--twin-heavy", twin_heavy);
  verify_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto cap_variant =
      variant == "literal" ? CapacityVariant::literal : CapacityVariant::corrected;
  const auto im_parameter = im_variant == "literal" ? ImParameter::literal : ImParameter::corrected;

  try {
    if (*degen) {
      auto g = as_graph(load(file)).first;
      if (dimacs) {
        io::write_dimacs(std::cout, g);
      } else {
        emit(io::to_json(degeneracy_ordering(g)));
      }
    } else if (*solve_cmd) {
      SolverOptions options;
      options.execution = parallel ? Execution::parallel : Execution::serial;
      emit(solve(problem, load(file), k, options));
    } else if (*kernel_cmd) {
      emit(kernelize(kind, load(file), k, d), out_path);
    } else if (*compose_cmd) {
      emit(compose(kind, inputs, d, t, im_parameter), out_path);
    } else if (*reduce_cmd) {
      emit(reduce(kind, load(file), cap_variant), out_path);
    } else if (*gen_cmd) {
      io::InstanceFile out;
      if (kind == "mpm") {
        out.payload = gen_mpm(n, m, seed, planted);
      } else if (kind == "x3c") {
        out.payload = gen_x3c(n, m, seed, planted);
      } else if (kind == "mcc") {
        out.payload = gen_mcc(n, c, p, seed, planted);
      } else {
        Graph g = twin_heavy ? gen_twin_heavy_graph(n, d, p, seed) : gen_degenerate_graph(n, d, p, seed);
        if (dimacs) {
          io::write_dimacs(std::cout, g);
          return 0;
        }
        out.payload = io::GraphDoc{g, std::nullopt};
      }
      emit(io::to_json(out), out_path);
    } else if (*verify_cmd) {
      VerificationReport report;
      if (check == "or" || check == "degeneracy") {
        OrCheck oc;
        if (kind.empty()) kind = "ds";
        if (kind == "ds") oc.kind = CompositionKind::ds;
        else if (kind == "ids") oc.kind = CompositionKind::ids;
        else if (kind == "im") oc.kind = CompositionKind::im;
        else throw InputError("--kind must be ds, ids or im");
        oc.d = d;
        oc.t = t.value_or(2);
        oc.n = n;
        oc.m = verify_cmd->count("--m") ? m : 0;
        oc.c = c;
        oc.seed = seed;
        oc.im_parameter = im_parameter;
        report = check == "or" ? verify_or_equivalence(oc) : verify_degeneracy(oc);
      } else if (check == "kernel") {
        KernelCheck kc;
        if (kind == "capvc") kc.kind = KernelKind::capvc;
        else if (kind.empty() || kind == "convc") kc.kind = KernelKind::convc;
        else throw InputError("--kind must be convc or capvc");
        kc.trials = trials;
        kc.max_n = max_n;
        kc.max_d = verify_cmd->count("--d") ? d : 3;
        kc.max_k = max_k;
        kc.twin_heavy = twin_heavy;
        kc.seed = seed;
        report = verify_kernel(kc);
      } else if (check == "reduction") {
        ReductionCheck rc;
        if (kind.empty() || kind == "rbds-ds") rc.kind = ReductionKind::rbds_ds;
        else if (kind == "mpm-simplify") rc.kind = ReductionKind::mpm_simplify;
        else if (kind == "setcover-capvc") rc.kind = ReductionKind::setcover_capvc;
        else throw InputError("--kind must be rbds-ds, mpm-simplify or setcover-capvc");
        rc.variant = cap_variant;
        rc.trials = trials;
        rc.seed = seed;
        report = verify_reduction(rc);
      } else if (check == "enforcement") {
        report = verify_enforcement(d, t.value_or(2), n, matrices, seed);
      } else {
        report = verify_bipartite_bound(trials, seed);
      }
      emit(io::to_json(report), out_path);
      return report.pass ? 0 : kExitFailedCase;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
