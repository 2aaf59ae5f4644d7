#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "ldc/graph.hpp"
#include "ldc/partition.hpp"

namespace ldc {

/// Result of the BFS-based large-cycle test for one (L, R) split.
struct PolyAlgOutcome {
  bool accepted = false;
  /// Present iff accepted: the first path P (v -> u inside G[L], exactly k
  /// vertices) joined with the return path P' (u -> v avoiding P's interior).
  std::optional<CycleWitness> witness;
  /// The accepting ordered pair (v, u).
  std::optional<std::pair<Vertex, Vertex>> pair;
  std::size_t first_path_vertices = 0;   // |V_P|
  std::size_t second_path_vertices = 0;  // |V_P'|, recorded for diagnostics
  std::uint64_t bfs_calls = 0;
};

/// Concatenates P (v..u) and P' (u..v) into the cycle v..u..(before v).
/// Throws ContractError unless the paths share exactly their endpoints.
CycleWitness join_paths(const PathWitness& first, const PathWitness& second);

/// Reference implementation: ordered pairs (v, u) of L in lexicographic order,
/// one shortest-path BFS in G[L] and, when |V_P| == k, one BFS for the return
/// path in G[V \ (V_P \ {v, u})]. Accepts on the first pair that closes.
/// Requires k >= 2 and a partition over g's vertex set.
PolyAlgOutcome poly_alg_serial(const DirectedGraph& g, std::size_t k, const PartitionLR& p);

/// Same decision and the same accepting pair and witness as poly_alg_serial.
/// Shares one BFS tree per source v across all u and distributes sources over
/// OpenMP threads; the lowest accepting source wins.
PolyAlgOutcome poly_alg(const DirectedGraph& g, std::size_t k, const PartitionLR& p);

}  // namespace ldc
