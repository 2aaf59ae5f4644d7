#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ldc/graph.hpp"
#include "ldc/rng.hpp"

namespace ldc {

inline constexpr std::size_t kDefaultSubsetDpCap = 25;
inline constexpr std::size_t kDefaultColorCodingLengthCap = 20;

/// "Is there a simple path on exactly `length` vertices from `from` to `to`?"
struct KPathQuery {
  const DirectedGraph& graph;
  Vertex from;
  Vertex to;
  std::size_t length;
};

enum class KPathKind {
  kColorCoding,  // randomized, one-sided error
  kSubsetDp,     // exact, exponential in n
};

std::string_view to_string(KPathKind kind) noexcept;

struct KPathBackend {
  KPathKind kind = KPathKind::kSubsetDp;
  /// Colour-coding repetitions per query: ceil(repetition_constant * e^length)
  /// unless `fixed_repetitions` is non-zero.
  double repetition_constant = 3.0;
  std::uint64_t fixed_repetitions = 0;
  std::size_t subset_dp_cap = kDefaultSubsetDpCap;
  std::size_t color_coding_length_cap = kDefaultColorCodingLengthCap;
  /// Extra edge-removal passes allowed when randomized answers disagree.
  std::size_t extraction_retries = 8;

  std::uint64_t repetitions_for(std::size_t length) const;
};

/// Work counters; updated by every entry point that receives one.
struct KPathStats {
  std::uint64_t decisions = 0;
  std::uint64_t colorings = 0;
};

/// Exact Held-Karp style decision over states (vertex subset, last vertex).
/// Throws CapacityError when n exceeds `cap` (hard limit 64).
bool subsetdp_kpath(const KPathQuery& q, std::size_t cap = kDefaultSubsetDpCap);

/// Vertex subsets S (as bitmasks) for which the DP state (S, q.to) with
/// |S| = q.length is reachable, in ascending order.
std::vector<std::uint64_t> subsetdp_satisfying_states(const KPathQuery& q,
                                                      std::size_t cap = kDefaultSubsetDpCap);

/// Colour coding with `repetitions` independent colourings; returns true on
/// the first colouring that admits a colourful path. Never true on a
/// no-instance.
bool colorcoding_kpath(const KPathQuery& q, std::uint64_t repetitions, Rng& rng,
                       std::size_t length_cap = kDefaultColorCodingLengthCap,
                       KPathStats* stats = nullptr);

bool kpath_decide(const KPathBackend& backend, const KPathQuery& q, Rng& rng,
                  KPathStats* stats = nullptr);

/// Batched form of kpath_decide: one query per target sharing source and
/// length. Returns the smallest target found positive. With colour coding the
/// colourings are shared across targets; each target keeps its individual
/// miss bound.
std::optional<Vertex> kpath_decide_any(const KPathBackend& backend, const DirectedGraph& g,
                                       Vertex from, std::span<const Vertex> targets,
                                       std::size_t length, Rng& rng, KPathStats* stats = nullptr);

/// Turns a positive decision into a path by deleting every edge whose removal
/// keeps the decision positive. Absent when the decision is negative. Throws
/// ExtractionError if randomized answers stay inconsistent past the retry
/// bound.
std::optional<PathWitness> extract_path_witness(const KPathBackend& backend, const KPathQuery& q,
                                                Rng& rng, KPathStats* stats = nullptr);

}  // namespace ldc
