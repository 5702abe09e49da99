#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dkl/compositions.hpp"
#include "dkl/reductions.hpp"

namespace dkl {

struct CaseVerdict {
  int index = 0;
  std::string name;
  bool pass = false;
  /// Uncounted cases are recorded for information and never fail a report.
  bool counted = true;
  /// Together with the report parameters this reproduces the case.
  std::uint64_t seed = 0;
  std::string detail;
};

struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CaseVerdict> cases;
  /// All counted cases pass.
  bool pass = false;
  double wall_seconds = 0;

  int failures() const;
};

// Every check draws all randomness from `seed`, runs its cases in parallel
// and orders them by index. An exact oracle running out of budget is turned
// into TierError; so are parameters outside the documented tier.

struct OrCheck {
  CompositionKind kind = CompositionKind::ds;
  int d = 1;
  int t = 2;
  int n = 4;
  /// Edges per MPM instance or sets per X3C instance; 0 picks n/2 + 2 and
  /// n/3 + 1.
  int m = 0;
  /// IM: number of colors, node v gets color v mod c + 1.
  int c = 4;
  double edge_prob = 0.5;
  ImParameter im_parameter = ImParameter::corrected;
  std::uint64_t seed = 1;
};

/// One case per planted position j in 0..T-1 (composed answer must be YES)
/// plus the all-NO batch (must be NO). Tier: composed graph of at most 120
/// nodes.
VerificationReport verify_or_equivalence(const OrCheck& check);

enum class KernelKind { convc, capvc };

struct KernelCheck {
  KernelKind kind = KernelKind::convc;
  int trials = 200;
  int max_n = 14;
  int max_d = 3;
  int max_k = 6;
  /// Draw only graphs with large twin classes.
  bool twin_heavy = false;
  std::uint64_t seed = 1;
};

/// Per trial: answer before and after kernelization agree, and a YES output
/// is within the size bound. Tier: max_n <= 20.
VerificationReport verify_kernel(const KernelCheck& check);

enum class ReductionKind { rbds_ds, mpm_simplify, setcover_capvc };

struct ReductionCheck {
  ReductionKind kind = ReductionKind::rbds_ds;
  CapacityVariant variant = CapacityVariant::corrected;
  /// Ignored for setcover_capvc, which runs its exhaustive tier: d=3,
  /// k in {1,2}, universe 3k, every family of at most 4 distinct triples.
  int trials = 100;
  std::uint64_t seed = 1;
};

/// Source answer versus target answer per instance; rbds_ds also requires
/// k' = k+1 and degeneracy growth <= 1. Literal set-cover cases are
/// recorded uncounted.
VerificationReport verify_reduction(const ReductionCheck& check);

/// Structural checks on one composition planted at index T/2: peeling
/// degeneracy within d+2 / d+4 / d+3, the per-label degree facts, the
/// parameter formula and validity of the lifted witness. Polynomial, so it
/// also runs where the oracles cannot. Tier: composed graph of at most
/// 200000 nodes.
VerificationReport verify_degeneracy(const OrCheck& check);

/// `matrices` random index matrices: the enforcement witness has the
/// stated size, dominates every choice and fill blue, and leaves exactly
/// the matrix addresses of each color undominated.
VerificationReport verify_enforcement(int d, int t, int n, int matrices, std::uint64_t seed);

/// Bipartite bound |B| <= d|A| on generated high-degree bipartite graphs.
VerificationReport verify_bipartite_bound(int trials, std::uint64_t seed);

std::string to_string(CompositionKind kind);
std::string to_string(KernelKind kind);
std::string to_string(ReductionKind kind);
std::string to_string(CapacityVariant variant);
std::string to_string(ImParameter variant);

}  // namespace dkl
