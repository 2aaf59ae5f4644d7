#include "ldc/polyalg.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

#include "ldc/errors.hpp"

namespace ldc {

CycleWitness join_paths(const PathWitness& first, const PathWitness& second) {
  if (first.vertices.empty() || second.vertices.empty()) {
    throw ContractError("join_paths: empty path");
  }
  if (first.front() != second.back() || first.back() != second.front() ||
      first.front() == first.back()) {
    throw ContractError("join_paths: paths must run v->u and u->v for distinct v, u");
  }
  // Interiors must be disjoint from each other and from the endpoints.
  std::vector<Vertex> all = first.vertices;
  all.insert(all.end(), second.vertices.begin() + 1, second.vertices.end() - 1);
  std::vector<Vertex> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractError("join_paths: paths are not internally vertex disjoint");
  }
  return CycleWitness{std::move(all)};
}

namespace {

void check_inputs(const DirectedGraph& g, std::size_t k, const PartitionLR& p) {
  if (k < 2) throw ConfigError("cycle length parameter k must be at least 2");
  if (p.num_vertices() != g.num_vertices()) {
    throw ContractError("partition covers " + std::to_string(p.num_vertices()) +
                        " vertices but the graph has " + std::to_string(g.num_vertices()));
  }
}

// G[V \ (V_P \ {v, u})].
VertexMask outside_interior(std::size_t n, const PathWitness& path) {
  VertexMask allowed(n, 1);
  for (std::size_t i = 1; i + 1 < path.length(); ++i) allowed[path.vertices[i]] = 0;
  return allowed;
}

PolyAlgOutcome accept(const PathWitness& first, const PathWitness& second, std::uint64_t bfs_calls) {
  PolyAlgOutcome out;
  out.accepted = true;
  out.pair = std::pair{first.front(), first.back()};
  out.first_path_vertices = first.length();
  out.second_path_vertices = second.length();
  out.witness = join_paths(first, second);
  out.bfs_calls = bfs_calls;
  return out;
}

}  // namespace

PolyAlgOutcome poly_alg_serial(const DirectedGraph& g, std::size_t k, const PartitionLR& p) {
  check_inputs(g, k, p);
  const std::size_t n = g.num_vertices();
  const VertexMask& in_left = p.left_mask();
  std::uint64_t bfs_calls = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_left[v]) continue;
    for (Vertex u = 0; u < n; ++u) {
      if (!in_left[u] || u == v) continue;
      ++bfs_calls;
      const auto first = bfs_shortest_path(g, v, u, in_left);
      if (!first || first->length() != k) continue;
      ++bfs_calls;
      const auto second = bfs_shortest_path(g, u, v, outside_interior(n, *first));
      if (second) return accept(*first, *second, bfs_calls);
    }
  }
  PolyAlgOutcome out;
  out.bfs_calls = bfs_calls;
  return out;
}

PolyAlgOutcome poly_alg(const DirectedGraph& g, std::size_t k, const PartitionLR& p) {
  check_inputs(g, k, p);
  const std::size_t n = g.num_vertices();
  const VertexMask& in_left = p.left_mask();
  const std::vector<Vertex> sources = p.left();
  const auto num_sources = static_cast<std::ptrdiff_t>(sources.size());

  struct Hit {
    PathWitness first;
    PathWitness second;
  };
  std::vector<std::optional<Hit>> hits(sources.size());
  std::atomic<std::ptrdiff_t> best(num_sources);
  std::uint64_t bfs_calls = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : bfs_calls)
  for (std::ptrdiff_t i = 0; i < num_sources; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    const Vertex v = sources[static_cast<std::size_t>(i)];
    const BfsTree tree = bfs_tree(g, v, in_left);
    ++bfs_calls;
    for (Vertex u : sources) {
      if (u == v || !tree.reached(u) || tree.path_vertices(u) != k) continue;
      const PathWitness first = tree.path_to(u);
      ++bfs_calls;
      auto second = bfs_shortest_path(g, u, v, outside_interior(n, first));
      if (!second) continue;
      hits[static_cast<std::size_t>(i)] = Hit{first, std::move(*second)};
      std::ptrdiff_t current = best.load();
      while (i < current && !best.compare_exchange_weak(current, i)) {
      }
      break;
    }
  }

  const std::ptrdiff_t winner = best.load();
  if (winner == num_sources) {
    PolyAlgOutcome out;
    out.bfs_calls = bfs_calls;
    return out;
  }
  const auto& hit = *hits[static_cast<std::size_t>(winner)];
  return accept(hit.first, hit.second, bfs_calls);
}

}  // namespace ldc
