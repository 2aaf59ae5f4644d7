#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "ldc/graph.hpp"
#include "ldc/kpath.hpp"
#include "ldc/partition.hpp"

namespace ldc {

enum class SolveMode { kDeterministic, kRandomized };

std::string_view to_string(SolveMode mode) noexcept;

struct SolverConfig {
  SolveMode mode = SolveMode::kDeterministic;
  std::uint64_t seed = 0;
  /// c in the randomized trial count ceil(c * 4^k).
  double amplification = 10.0;
  /// k-Path backend; unset picks subset DP in det mode, colour coding in rand.
  std::optional<KPathKind> kpath;
  double repetition_constant = 3.0;
  std::size_t subset_dp_cap = kDefaultSubsetDpCap;
  std::size_t universal_t_cap = kDefaultUniversalTCap;
  /// Run the partition loop on OpenMP threads. The answer does not depend on
  /// this flag.
  bool parallel = true;

  /// Throws ConfigError on non-positive constants or caps.
  void validate() const;
  KPathKind kpath_kind() const noexcept;
  KPathBackend backend() const;
  /// True when the k-Path backend is not the mode's default.
  bool mixed_backend() const noexcept;
  /// ceil(amplification * 4^k); throws CapacityError if absurdly large.
  std::uint64_t random_trials(std::size_t k) const;
};

enum class Provenance { kNone, kShortScan, kPolyAlg };

std::string_view to_string(Provenance provenance) noexcept;

struct SolveCounters {
  std::uint64_t kpath_decisions = 0;
  std::uint64_t colorings = 0;
  std::uint64_t partitions_tried = 0;
  std::uint64_t polyalg_bfs_calls = 0;
};

struct LdcAnswer {
  bool yes = false;
  /// Present iff yes; rotated so that its smallest vertex id is first.
  std::optional<CycleWitness> witness;
  Provenance provenance = Provenance::kNone;
  /// Cycle length l at which the short-cycle scan succeeded.
  std::optional<std::size_t> scan_length;
  /// Index of the accepting partition (family order in det mode, trial index
  /// in rand mode) and the pair (v, u) that closed the cycle.
  std::optional<std::uint64_t> partition_index;
  std::optional<std::pair<Vertex, Vertex>> accepting_pair;
  SolveMode mode = SolveMode::kDeterministic;
  KPathKind kpath = KPathKind::kSubsetDp;
  bool mixed_backend = false;
  /// Universal family size in det mode, trial budget in rand mode.
  std::uint64_t partition_budget = 0;
  SolveCounters counters;
};

struct ShortScanHit {
  CycleWitness cycle;
  std::size_t length = 0;
};

/// For l = k..2k and every edge (u, v), asks the k-Path backend for a path on
/// exactly l vertices from v to u; the first hit is extracted and closed into
/// an l-vertex cycle. Queries run on the strongly connected component of the
/// edge, since any such cycle lies inside one. Requires k >= 2.
std::optional<ShortScanHit> short_cycle_scan(const DirectedGraph& g, std::size_t k,
                                             const KPathBackend& backend, std::uint64_t seed,
                                             KPathStats* stats = nullptr);

/// Short-cycle scan, then PolyAlg over universal-set partitions (det) or
/// ceil(c * 4^k) random partitions (rand). Yes answers always carry a witness.
LdcAnswer ldc_alg(const DirectedGraph& g, std::size_t k, const SolverConfig& cfg);

/// ldc_alg followed by validate_cycle on the witness; throws InternalError
/// instead of ever returning an unverified yes.
LdcAnswer answer_with_verification(const DirectedGraph& g, std::size_t k, const SolverConfig& cfg);

}  // namespace ldc
