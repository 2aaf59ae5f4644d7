#include "ldc/driver.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ldc/errors.hpp"
#include "ldc/polyalg.hpp"

namespace ldc {

namespace {

constexpr std::uint64_t kScanStream = 1;
constexpr std::uint64_t kExtractStream = 2;
constexpr std::uint64_t kPartitionStream = 3;
constexpr std::size_t kExtractionAttempts = 4;

}  // namespace

std::string_view to_string(SolveMode mode) noexcept {
  return mode == SolveMode::kDeterministic ? "det" : "rand";
}

std::string_view to_string(Provenance provenance) noexcept {
  switch (provenance) {
    case Provenance::kNone: return "none";
    case Provenance::kShortScan: return "short-scan";
    case Provenance::kPolyAlg: return "polyalg";
  }
  return "unknown";
}

void SolverConfig::validate() const {
  if (!(amplification > 0.0) || !std::isfinite(amplification)) {
    throw ConfigError("amplification constant c must be positive");
  }
  if (!(repetition_constant > 0.0) || !std::isfinite(repetition_constant)) {
    throw ConfigError("repetition constant must be positive");
  }
  if (subset_dp_cap == 0 || universal_t_cap == 0) throw ConfigError("caps must be positive");
}

KPathKind SolverConfig::kpath_kind() const noexcept {
  if (kpath) return *kpath;
  return mode == SolveMode::kDeterministic ? KPathKind::kSubsetDp : KPathKind::kColorCoding;
}

KPathBackend SolverConfig::backend() const {
  KPathBackend b;
  b.kind = kpath_kind();
  b.repetition_constant = repetition_constant;
  b.subset_dp_cap = subset_dp_cap;
  return b;
}

bool SolverConfig::mixed_backend() const noexcept {
  return (mode == SolveMode::kDeterministic) != (kpath_kind() == KPathKind::kSubsetDp);
}

std::uint64_t SolverConfig::random_trials(std::size_t k) const {
  const double x = std::ceil(amplification * std::pow(4.0, static_cast<double>(k)));
  if (!(x < 1e12)) {
    throw CapacityError("rand mode would need " + std::to_string(x) + " partition trials for k = " +
                        std::to_string(k));
  }
  return static_cast<std::uint64_t>(x);
}

std::optional<ShortScanHit> short_cycle_scan(const DirectedGraph& g, std::size_t k,
                                             const KPathBackend& backend, std::uint64_t seed,
                                             KPathStats* stats) {
  if (k < 2) throw ConfigError("cycle length parameter k must be at least 2");
  const auto n = g.num_vertices();
  const auto comp = strongly_connected_components(g);
  std::vector<std::vector<Vertex>> members;
  for (Vertex v = 0; v < n; ++v) {
    if (comp[v] >= members.size()) members.resize(comp[v] + 1);
    members[comp[v]].push_back(v);
  }
  // Component subgraphs are built on first use.
  std::vector<std::optional<InducedSubgraph>> subgraphs(members.size());
  std::vector<Vertex> local_id(n);
  for (const auto& group : members) {
    for (std::size_t i = 0; i < group.size(); ++i) local_id[group[i]] = static_cast<Vertex>(i);
  }

  for (std::size_t length = k; length <= 2 * k && length <= n; ++length) {
    for (Vertex v = 0; v < n; ++v) {
      const auto c = comp[v];
      if (members[c].size() < length) continue;
      std::vector<Vertex> targets;  // local ids of u with (u, v) in E
      for (Vertex u : g.in_neighbors(v)) {
        if (comp[u] == c) targets.push_back(local_id[u]);
      }
      if (targets.empty()) continue;
      if (!subgraphs[c]) subgraphs[c] = induced_subgraph(g, members[c]);
      const auto& sub = *subgraphs[c];

      Rng rng(stream_seed(seed, kScanStream, length * n + v));
      const auto hit = kpath_decide_any(backend, sub.graph, local_id[v], targets, length, rng, stats);
      if (!hit) continue;

      for (std::size_t attempt = 0; attempt < kExtractionAttempts; ++attempt) {
        Rng extract_rng(stream_seed(seed, kExtractStream, (length * n + v) * 8 + attempt));
        const auto path = extract_path_witness(
            backend, KPathQuery{sub.graph, local_id[v], *hit, length}, extract_rng, stats);
        if (!path) continue;
        ShortScanHit result;
        result.length = length;
        for (Vertex w : path->vertices) result.cycle.vertices.push_back(sub.to_original[w]);
        return result;
      }
      throw ExtractionError("k-path backend reported a path it could not reproduce");
    }
  }
  return std::nullopt;
}

namespace {

// Runs PolyAlg on partitions 0..count-1 and keeps the lowest accepting index.
// The serial branch uses the reference PolyAlg; `tried` counts evaluated
// partitions, which in the parallel branch depends on scheduling.
struct PartitionSearch {
  std::optional<std::uint64_t> index;
  PolyAlgOutcome outcome;
  std::uint64_t tried = 0;
  std::uint64_t bfs_calls = 0;
};

PartitionSearch search_partitions(const DirectedGraph& g, std::size_t k, std::uint64_t count,
                                  const std::function<PartitionLR(std::uint64_t)>& partition_at,
                                  bool parallel) {
  PartitionSearch result;
  if (!parallel) {
    for (std::uint64_t i = 0; i < count; ++i) {
      auto outcome = poly_alg_serial(g, k, partition_at(i));
      ++result.tried;
      result.bfs_calls += outcome.bfs_calls;
      if (outcome.accepted) {
        result.index = i;
        result.outcome = std::move(outcome);
        return result;
      }
    }
    return result;
  }

  const auto total = static_cast<std::int64_t>(count);
  std::atomic<std::int64_t> best(total);
  std::uint64_t tried = 0, bfs_calls = 0;
#pragma omp parallel
  {
    std::vector<std::pair<std::int64_t, PolyAlgOutcome>> local;
#pragma omp for schedule(dynamic, 16) reduction(+ : tried, bfs_calls)
    for (std::int64_t i = 0; i < total; ++i) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      auto outcome = poly_alg(g, k, partition_at(static_cast<std::uint64_t>(i)));
      ++tried;
      bfs_calls += outcome.bfs_calls;
      if (!outcome.accepted) continue;
      std::int64_t current = best.load();
      while (i < current && !best.compare_exchange_weak(current, i)) {
      }
      local.emplace_back(i, std::move(outcome));
    }
#pragma omp critical
    for (auto& [i, outcome] : local) {
      if (i == best.load()) {
        result.outcome = std::move(outcome);
        result.index = static_cast<std::uint64_t>(i);
      }
    }
  }
  result.tried = tried;
  result.bfs_calls = bfs_calls;
  return result;
}

}  // namespace

LdcAnswer ldc_alg(const DirectedGraph& g, std::size_t k, const SolverConfig& cfg) {
  if (k < 2) throw ConfigError("cycle length parameter k must be at least 2");
  cfg.validate();

  LdcAnswer answer;
  answer.mode = cfg.mode;
  answer.kpath = cfg.kpath_kind();
  answer.mixed_backend = cfg.mixed_backend();
  const std::string where = "(" + std::string(to_string(cfg.mode)) + " mode, k-path backend " +
                            std::string(to_string(answer.kpath)) + ")";

  try {
    KPathStats stats;
    const auto hit = short_cycle_scan(g, k, cfg.backend(), cfg.seed, &stats);
    answer.counters.kpath_decisions = stats.decisions;
    answer.counters.colorings = stats.colorings;
    if (hit) {
      answer.yes = true;
      answer.witness = canonical_rotation(hit->cycle);
      answer.provenance = Provenance::kShortScan;
      answer.scan_length = hit->length;
      return answer;
    }

    const auto n = g.num_vertices();
    PartitionSearch search;
    if (cfg.mode == SolveMode::kDeterministic) {
      if (n == 0) return answer;
      const auto family =
          cached_universal_set(n, std::min(2 * k, n), UniversalSetOptions{cfg.universal_t_cap});
      answer.partition_budget = family->size();
      search = search_partitions(
          g, k, family->size(),
          [&](std::uint64_t i) { return partition_from_member(*family, i); }, cfg.parallel);
    } else {
      const auto trials = cfg.random_trials(k);
      answer.partition_budget = trials;
      search = search_partitions(
          g, k, trials,
          [&](std::uint64_t i) {
            Rng rng(stream_seed(cfg.seed, kPartitionStream, i));
            return random_partition(n, rng);
          },
          cfg.parallel);
    }
    answer.counters.partitions_tried = search.tried;
    answer.counters.polyalg_bfs_calls = search.bfs_calls;
    if (search.index) {
      answer.yes = true;
      answer.witness = canonical_rotation(*search.outcome.witness);
      answer.provenance = Provenance::kPolyAlg;
      answer.partition_index = search.index;
      answer.accepting_pair = search.outcome.pair;
    }
    return answer;
  } catch (const CapacityError& e) {
    throw CapacityError(std::string(e.what()) + " " + where);
  }
}

LdcAnswer answer_with_verification(const DirectedGraph& g, std::size_t k, const SolverConfig& cfg) {
  LdcAnswer answer = ldc_alg(g, k, cfg);
  if (answer.yes) {
    if (!answer.witness) throw InternalError("yes answer without a witness");
    const auto check = validate_cycle(g, *answer.witness, k);
    if (!check) {
      throw InternalError("witness failed validation: " + std::string(to_string(check.defect)) +
                          " at position " + std::to_string(check.position));
    }
  } else if (answer.witness) {
    throw InternalError("no answer carries a witness");
  }
  return answer;
}

}  // namespace ldc
