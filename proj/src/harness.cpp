#include "ldc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "ldc/errors.hpp"
#include "ldc/partition.hpp"

namespace ldc {

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const DirectedGraph& g, std::size_t cap, bool all_lengths)
      : g_(g), n_(g.num_vertices()), all_lengths_(all_lengths), on_path_(n_, 0),
        lengths_(n_ + 1, false) {
    if (n_ > cap) {
      throw CapacityError("brute-force oracle is capped at " + std::to_string(cap) +
                          " vertices, graph has " + std::to_string(n_));
    }
  }

  void run() {
    // Cycles from start s use only vertices >= s; stop once none can beat the
    // longest so far unless every length is wanted.
    for (Vertex s = 0; s < n_ && (all_lengths_ || longest_ < n_ - s); ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = 1;
      extend(s);
      on_path_[s] = 0;
    }
  }

  OracleResult result() const {
    OracleResult r;
    r.longest = longest_;
    if (longest_ > 0) r.witness = CycleWitness{best_};
    return r;
  }
  const std::vector<bool>& lengths() const { return lengths_; }

 private:
  // Only vertices larger than the start are visited, so every cycle is seen
  // once per rotation starting at its minimum.
  void extend(Vertex w) {
    for (Vertex x : g_.out_neighbors(w)) {
      if (x == start_) {
        lengths_[path_.size()] = true;
        if (path_.size() > longest_) {
          longest_ = path_.size();
          best_ = path_;
        }
        continue;
      }
      if (x < start_ || on_path_[x]) continue;
      on_path_[x] = 1;
      path_.push_back(x);
      extend(x);
      path_.pop_back();
      on_path_[x] = 0;
    }
  }

  const DirectedGraph& g_;
  std::size_t n_;
  bool all_lengths_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
  std::vector<bool> lengths_;
  std::size_t longest_ = 0;
  Vertex start_ = 0;
};

}  // namespace

OracleResult brute_force_longest_cycle(const DirectedGraph& g, std::size_t cap) {
  CycleEnumerator e(g, cap, false);
  e.run();
  return e.result();
}

std::vector<bool> brute_force_cycle_lengths(const DirectedGraph& g, std::size_t cap) {
  CycleEnumerator e(g, cap, true);
  e.run();
  return e.lengths();
}

DirectedGraph random_digraph(std::size_t n, double density, Rng& rng) {
  if (!(density >= 0.0 && density <= 1.0)) throw ConfigError("edge density must lie in [0, 1]");
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return DirectedGraph::from_edges(n, edges);
}

PlantedInstance generate_planted_instance(std::size_t n, std::size_t t, double density, Rng& rng,
                                          bool forbid_short) {
  if (t < 2 || t > n) {
    throw ConfigError("planted cycle length must satisfy 2 <= t <= n, got t = " +
                      std::to_string(t) + ", n = " + std::to_string(n));
  }
  if (!(density >= 0.0 && density <= 1.0)) throw ConfigError("edge density must lie in [0, 1]");

  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);

  PlantedInstance inst;
  inst.planted.vertices.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(t));
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < t; ++i) {
    const Vertex u = perm[i], v = perm[(i + 1) % t];
    adj[u][v] = 1;
    edges.emplace_back(u, v);
  }

  // Fewest vertices on a path from -> to in the current edge set (0: none).
  auto path_vertices = [&](Vertex from, Vertex to) -> std::size_t {
    std::vector<std::size_t> dist(n, 0);
    std::vector<Vertex> queue{from};
    dist[from] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex a = queue[head];
      if (a == to) return dist[a];
      for (Vertex b = 0; b < n; ++b) {
        if (adj[a][b] && dist[b] == 0) {
          dist[b] = dist[a] + 1;
          queue.push_back(b);
        }
      }
    }
    return 0;
  };

  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !adj[u][v]) candidates.emplace_back(u, v);
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::bernoulli_distribution coin(density);
  for (const auto& [u, v] : candidates) {
    if (!coin(rng)) continue;
    if (forbid_short) {
      const auto back = path_vertices(v, u);
      if (back != 0 && back < t) continue;
    }
    adj[u][v] = 1;
    edges.emplace_back(u, v);
  }
  inst.graph = DirectedGraph::from_edges(n, edges);
  return inst;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kBlocks = 64;

// Sums `trial(rng)` over `trials` trials split into fixed blocks, each with
// its own stream; the total does not depend on the thread count.
template <typename Trial>
std::uint64_t count_hits(std::uint64_t trials, std::uint64_t seed, Trial trial) {
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : hits)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(kBlocks); ++b) {
    const auto block = static_cast<std::uint64_t>(b);
    const std::uint64_t begin = trials * block / kBlocks;
    const std::uint64_t end = trials * (block + 1) / kBlocks;
    Rng rng(stream_seed(seed, block));
    for (std::uint64_t i = begin; i < end; ++i) hits += trial(rng) ? 1 : 0;
  }
  return hits;
}

// Target split on ground set 0..2k-1: first k vertices left, last k right.
struct SplitTarget {
  std::vector<Vertex> left, right;
  explicit SplitTarget(std::size_t k) {
    for (Vertex v = 0; v < k; ++v) left.push_back(v);
    for (Vertex v = static_cast<Vertex>(k); v < 2 * k; ++v) right.push_back(v);
  }
};

}  // namespace

double exact_split_probability(std::size_t k) {
  const std::size_t n = 2 * k;
  const SplitTarget target(k);
  std::uint64_t good = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    VertexMask in_left(n);
    for (std::size_t v = 0; v < n; ++v) in_left[v] = static_cast<char>((code >> v) & 1);
    if (PartitionLR(std::move(in_left)).realizes(target.left, target.right)) ++good;
  }
  return static_cast<double>(good) / static_cast<double>(std::uint64_t{1} << n);
}

ExperimentReport estimate_split_probability(std::size_t k, std::uint64_t trials,
                                            std::uint64_t seed) {
  if (trials == 0) throw ConfigError("experiment needs at least one trial");
  const SplitTarget target(k);
  ExperimentReport r;
  r.name = "split-probability";
  r.k = k;
  r.n = 2 * k;
  r.trials = trials;
  r.seed = seed;
  r.hits = count_hits(trials, seed, [&](Rng& rng) {
    return random_partition(2 * k, rng).realizes(target.left, target.right);
  });
  r.observed = static_cast<double>(r.hits) / static_cast<double>(trials);
  r.theoretical = std::pow(0.25, static_cast<double>(k));
  r.sigma = std::sqrt(r.theoretical * (1.0 - r.theoretical) / static_cast<double>(trials));
  r.interval_low = r.observed - 3.0 * r.sigma;
  r.interval_high = r.observed + 3.0 * r.sigma;
  r.pass = r.interval_low <= r.theoretical && r.theoretical <= r.interval_high;
  return r;
}

ExperimentReport estimate_amplification(std::size_t k, double c, std::uint64_t meta_trials,
                                        std::uint64_t seed) {
  if (meta_trials == 0) throw ConfigError("experiment needs at least one trial");
  if (!(c > 0.0)) throw ConfigError("amplification constant c must be positive");
  const SplitTarget target(k);
  const double p = std::pow(0.25, static_cast<double>(k));
  const auto draws = static_cast<std::uint64_t>(std::ceil(c / p));

  ExperimentReport r;
  r.name = "amplification";
  r.k = k;
  r.n = 2 * k;
  r.trials = meta_trials;
  r.draws = draws;
  r.c = c;
  r.seed = seed;
  r.hits = count_hits(meta_trials, seed, [&](Rng& rng) {
    for (std::uint64_t d = 0; d < draws; ++d) {
      if (random_partition(2 * k, rng).realizes(target.left, target.right)) return true;
    }
    return false;
  });
  r.observed = static_cast<double>(r.hits) / static_cast<double>(meta_trials);
  r.theoretical = 1.0 - std::exp(-c);
  const double exact = 1.0 - std::pow(1.0 - p, static_cast<double>(draws));
  r.exact = exact;
  r.sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(meta_trials));
  r.interval_low = r.observed - 3.0 * r.sigma;
  r.interval_high = r.observed + 3.0 * r.sigma;
  r.one_sided = true;
  const bool above_bound = r.observed >= r.theoretical - 3.0 * r.sigma;
  const bool matches_exact = r.interval_low <= exact && exact <= r.interval_high;
  r.pass = above_bound && matches_exact;
  return r;
}

std::string format_report(const ExperimentReport& r) {
  std::ostringstream out;
  out << std::setprecision(6) << std::fixed;
  out << r.name << " k=" << r.k << " trials=" << r.trials;
  if (r.name == "amplification") out << " c=" << r.c << " draws=" << r.draws;
  out << " seed=" << r.seed << " observed=" << r.observed << " theoretical=" << r.theoretical;
  if (r.exact) out << " exact=" << *r.exact;
  out << " sigma=" << r.sigma << " interval=[" << r.interval_low << ", " << r.interval_high << "]"
      << (r.one_sided ? " one-sided" : "") << (r.pass ? " PASS" : " FAIL");
  return out.str();
}

}  // namespace ldc
