#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldc/graph.hpp"
#include "ldc/rng.hpp"

namespace ldc {

// ---------------------------------------------------------------------------
// Exhaustive oracles
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultOracleCap = 14;

struct OracleResult {
  /// Longest simple cycle length; 0 if the graph is acyclic.
  std::size_t longest = 0;
  std::optional<CycleWitness> witness;
};

/// Exhaustive DFS over simple paths, each cycle enumerated from its smallest
/// vertex. Throws CapacityError when n > cap.
OracleResult brute_force_longest_cycle(const DirectedGraph& g, std::size_t cap = kDefaultOracleCap);

/// present[l] is true iff some simple cycle has exactly l vertices
/// (size n + 1). Same enumeration and cap as the longest-cycle oracle.
std::vector<bool> brute_force_cycle_lengths(const DirectedGraph& g,
                                            std::size_t cap = kDefaultOracleCap);

// ---------------------------------------------------------------------------
// Instance generators
// ---------------------------------------------------------------------------

/// Each ordered pair (u, v), u != v, becomes an edge with probability
/// `density`.
DirectedGraph random_digraph(std::size_t n, double density, Rng& rng);

struct PlantedInstance {
  DirectedGraph graph;
  CycleWitness planted;
};

/// The first t vertices of a random permutation form a directed cycle; every
/// other ordered pair becomes an edge with probability `density`, visited in
/// random order. With `forbid_short`, a candidate edge (u, v) is kept only if
/// no path v -> u on fewer than t vertices exists yet, so the result has no
/// cycle on fewer than t vertices.
PlantedInstance generate_planted_instance(std::size_t n, std::size_t t, double density, Rng& rng,
                                          bool forbid_short);

// ---------------------------------------------------------------------------
// Statistical experiments
// ---------------------------------------------------------------------------

struct ExperimentReport {
  std::string name;
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t trials = 0;
  /// Draws per meta-trial (amplification experiment only).
  std::uint64_t draws = 0;
  double c = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
  double observed = 0.0;
  /// The claimed value: exact probability (split) or lower bound 1 - e^-c
  /// (amplification).
  double theoretical = 0.0;
  /// Closed-form exact probability, when it differs from `theoretical`.
  std::optional<double> exact;
  double sigma = 0.0;
  double interval_low = 0.0;
  double interval_high = 0.0;
  bool one_sided = false;
  bool pass = false;
};

/// Frequency with which a random partition of a 2k-vertex ground set puts the
/// first k vertices in L and the last k in R, against 4^-k with a 3-sigma
/// binomial interval.
ExperimentReport estimate_split_probability(std::size_t k, std::uint64_t trials,
                                            std::uint64_t seed);

/// Exact probability of the split event by enumerating all 2^(2k)
/// assignments.
double exact_split_probability(std::size_t k);

/// Fraction of meta-trials in which at least one of ceil(c * 4^k) random
/// partitions realizes the fixed split. Passes when the observation is not
/// below 1 - e^-c by more than 3 sigma and lies within 3 sigma of the closed
/// form 1 - (1 - 4^-k)^ceil(c * 4^k).
ExperimentReport estimate_amplification(std::size_t k, double c, std::uint64_t meta_trials,
                                        std::uint64_t seed);

std::string format_report(const ExperimentReport& report);

}  // namespace ldc
