#include "ldc/kpath.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "ldc/errors.hpp"

namespace ldc {

std::string_view to_string(KPathKind kind) noexcept {
  switch (kind) {
    case KPathKind::kColorCoding: return "color";
    case KPathKind::kSubsetDp: return "dp";
  }
  return "unknown";
}

std::uint64_t KPathBackend::repetitions_for(std::size_t length) const {
  if (fixed_repetitions > 0) return fixed_repetitions;
  const double reps = std::ceil(repetition_constant * std::exp(static_cast<double>(length)));
  return reps < 1.0 ? 1 : static_cast<std::uint64_t>(reps);
}

namespace {

void check_endpoints(const DirectedGraph& g, Vertex from, std::span<const Vertex> targets,
                     std::size_t length) {
  const auto n = g.num_vertices();
  if (length == 0) throw ContractError("k-path length must be at least one vertex");
  if (from >= n) throw ContractError("k-path source " + std::to_string(from) + " out of range");
  for (Vertex t : targets) {
    if (t >= n) throw ContractError("k-path target " + std::to_string(t) + " out of range");
  }
}

// ---------------------------------------------------------------------------
// Subset DP
// ---------------------------------------------------------------------------

// Layer of DP states: vertex subset -> set of possible last vertices.
using SubsetLayer = std::unordered_map<std::uint64_t, std::uint64_t>;

SubsetLayer subset_dp_final_layer(const DirectedGraph& g, Vertex from, std::size_t length,
                                  std::size_t cap) {
  const auto n = g.num_vertices();
  if (n > std::min<std::size_t>(cap, 64)) {
    throw CapacityError("subset-DP k-path backend supports at most " +
                        std::to_string(std::min<std::size_t>(cap, 64)) + " vertices, graph has " +
                        std::to_string(n) + "; use the color-coding backend");
  }
  SubsetLayer layer{{std::uint64_t{1} << from, std::uint64_t{1} << from}};
  for (std::size_t size = 1; size < length && !layer.empty(); ++size) {
    SubsetLayer next;
    next.reserve(layer.size() * 2);
    for (const auto& [subset, ends] : layer) {
      for (std::uint64_t rest = ends; rest != 0; rest &= rest - 1) {
        const auto w = static_cast<Vertex>(std::countr_zero(rest));
        for (Vertex x : g.out_neighbors(w)) {
          const std::uint64_t bit = std::uint64_t{1} << x;
          if ((subset & bit) == 0) next[subset | bit] |= bit;
        }
      }
    }
    layer = std::move(next);
  }
  return layer;
}

std::uint64_t target_mask(std::span<const Vertex> targets) {
  std::uint64_t mask = 0;
  for (Vertex t : targets) mask |= std::uint64_t{1} << t;
  return mask;
}

std::optional<Vertex> subsetdp_any(const DirectedGraph& g, Vertex from,
                                   std::span<const Vertex> targets, std::size_t length,
                                   std::size_t cap) {
  if (length > g.num_vertices()) return std::nullopt;
  const auto layer = subset_dp_final_layer(g, from, length, cap);
  std::uint64_t reached = 0;
  for (const auto& [subset, ends] : layer) reached |= ends;
  reached &= target_mask(targets);
  if (reached == 0) return std::nullopt;
  return static_cast<Vertex>(std::countr_zero(reached));
}

// ---------------------------------------------------------------------------
// Colour coding
// ---------------------------------------------------------------------------

class ColorCoder {
 public:
  ColorCoder(const DirectedGraph& g, std::size_t colors)
      : n_(g.num_vertices()),
        words_((n_ + 63) / 64),
        colors_(colors),
        adjacency_(n_ * words_, 0),
        classes_(colors * words_, 0),
        table_((std::size_t{1} << colors) * words_, 0),
        color_of_(n_, 0),
        scratch_(words_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.out_neighbors(v)) set(&adjacency_[v * words_], w);
    }
  }

  /// Draws a colouring and returns the targets hit by colourful paths from
  /// `from` on exactly `colors_` vertices; writes them into `hits`.
  void run(Vertex from, const std::vector<std::uint64_t>& targets, Rng& rng,
           std::vector<std::uint64_t>& hits) {
    std::uniform_int_distribution<std::size_t> pick(0, colors_ - 1);
    std::fill(classes_.begin(), classes_.end(), 0);
    for (Vertex v = 0; v < n_; ++v) {
      color_of_[v] = pick(rng);
      set(&classes_[color_of_[v] * words_], v);
    }
    std::fill(table_.begin(), table_.end(), 0);
    const std::size_t start = std::size_t{1} << color_of_[from];
    const std::size_t full = (std::size_t{1} << colors_) - 1;
    set(row(start), from);

    for (std::size_t mask = start; mask < full; ++mask) {
      if ((mask & start) == 0) continue;
      const std::uint64_t* ends = row(mask);
      if (std::all_of(ends, ends + words_, [](std::uint64_t w) { return w == 0; })) continue;
      std::fill(scratch_.begin(), scratch_.end(), 0);
      for (std::size_t wi = 0; wi < words_; ++wi) {
        for (std::uint64_t rest = ends[wi]; rest != 0; rest &= rest - 1) {
          const std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(rest));
          const std::uint64_t* adj = &adjacency_[v * words_];
          for (std::size_t k = 0; k < words_; ++k) scratch_[k] |= adj[k];
        }
      }
      for (std::size_t c = 0; c < colors_; ++c) {
        if (mask & (std::size_t{1} << c)) continue;
        std::uint64_t* dst = row(mask | (std::size_t{1} << c));
        const std::uint64_t* cls = &classes_[c * words_];
        for (std::size_t k = 0; k < words_; ++k) dst[k] |= scratch_[k] & cls[k];
      }
    }
    const std::uint64_t* last = row(full);
    hits.assign(words_, 0);
    for (std::size_t k = 0; k < words_; ++k) hits[k] = last[k] & targets[k];
  }

  std::vector<std::uint64_t> bitset_of(std::span<const Vertex> vs) const {
    std::vector<std::uint64_t> bits(words_, 0);
    for (Vertex v : vs) bits[v / 64] |= std::uint64_t{1} << (v % 64);
    return bits;
  }

 private:
  static void set(std::uint64_t* bits, std::size_t v) { bits[v / 64] |= std::uint64_t{1} << (v % 64); }
  std::uint64_t* row(std::size_t mask) { return &table_[mask * words_]; }

  std::size_t n_;
  std::size_t words_;
  std::size_t colors_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::uint64_t> classes_;
  std::vector<std::uint64_t> table_;
  std::vector<std::size_t> color_of_;
  std::vector<std::uint64_t> scratch_;
};

std::optional<Vertex> colorcoding_any(const DirectedGraph& g, Vertex from,
                                      std::span<const Vertex> targets, std::size_t length,
                                      std::uint64_t repetitions, Rng& rng, std::size_t length_cap,
                                      KPathStats* stats) {
  if (length > g.num_vertices() || targets.empty()) return std::nullopt;
  if (length == 1) {
    if (std::find(targets.begin(), targets.end(), from) != targets.end()) return from;
    return std::nullopt;
  }
  if (length > length_cap) {
    throw CapacityError("color-coding backend supports paths of at most " +
                        std::to_string(length_cap) + " vertices, query asks for " +
                        std::to_string(length));
  }
  ColorCoder coder(g, length);
  const auto wanted = coder.bitset_of(targets);
  std::vector<std::uint64_t> hits;
  for (std::uint64_t rep = 0; rep < repetitions; ++rep) {
    coder.run(from, wanted, rng, hits);
    if (stats != nullptr) ++stats->colorings;
    for (std::size_t k = 0; k < hits.size(); ++k) {
      if (hits[k] != 0) return static_cast<Vertex>(k * 64 + std::countr_zero(hits[k]));
    }
  }
  return std::nullopt;
}

}  // namespace

bool subsetdp_kpath(const KPathQuery& q, std::size_t cap) {
  const Vertex target[] = {q.to};
  check_endpoints(q.graph, q.from, target, q.length);
  return subsetdp_any(q.graph, q.from, target, q.length, cap).has_value();
}

std::vector<std::uint64_t> subsetdp_satisfying_states(const KPathQuery& q, std::size_t cap) {
  const Vertex target[] = {q.to};
  check_endpoints(q.graph, q.from, target, q.length);
  std::vector<std::uint64_t> states;
  if (q.length > q.graph.num_vertices()) return states;
  const std::uint64_t bit = std::uint64_t{1} << q.to;
  for (const auto& [subset, ends] : subset_dp_final_layer(q.graph, q.from, q.length, cap)) {
    if (ends & bit) states.push_back(subset);
  }
  std::sort(states.begin(), states.end());
  return states;
}

bool colorcoding_kpath(const KPathQuery& q, std::uint64_t repetitions, Rng& rng,
                       std::size_t length_cap, KPathStats* stats) {
  if (repetitions == 0) throw ContractError("color coding needs at least one repetition");
  const Vertex target[] = {q.to};
  check_endpoints(q.graph, q.from, target, q.length);
  return colorcoding_any(q.graph, q.from, target, q.length, repetitions, rng, length_cap, stats)
      .has_value();
}

std::optional<Vertex> kpath_decide_any(const KPathBackend& backend, const DirectedGraph& g,
                                       Vertex from, std::span<const Vertex> targets,
                                       std::size_t length, Rng& rng, KPathStats* stats) {
  check_endpoints(g, from, targets, length);
  if (stats != nullptr) stats->decisions += targets.size();
  if (length > g.num_vertices() || targets.empty()) return std::nullopt;
  if (length == 1) {
    if (std::find(targets.begin(), targets.end(), from) != targets.end()) return from;
    return std::nullopt;
  }
  switch (backend.kind) {
    case KPathKind::kSubsetDp:
      return subsetdp_any(g, from, targets, length, backend.subset_dp_cap);
    case KPathKind::kColorCoding:
      return colorcoding_any(g, from, targets, length, backend.repetitions_for(length), rng,
                             backend.color_coding_length_cap, stats);
  }
  return std::nullopt;
}

bool kpath_decide(const KPathBackend& backend, const KPathQuery& q, Rng& rng, KPathStats* stats) {
  const Vertex target[] = {q.to};
  return kpath_decide_any(backend, q.graph, q.from, target, q.length, rng, stats).has_value();
}

namespace {

// Follows the unique out-edges from `from`; absent unless the edge set is a
// single path of `length` vertices starting there.
std::optional<PathWitness> walk_single_path(std::size_t n, const std::vector<Edge>& edges,
                                            Vertex from, std::size_t length) {
  if (edges.size() + 1 != length) return std::nullopt;
  const auto g = DirectedGraph::from_edges(n, edges);
  PathWitness path{{from}};
  while (path.length() < length) {
    const auto out = g.out_neighbors(path.back());
    if (out.size() != 1) return std::nullopt;
    path.vertices.push_back(out.front());
  }
  return path;
}

}  // namespace

std::optional<PathWitness> extract_path_witness(const KPathBackend& backend, const KPathQuery& q,
                                                Rng& rng, KPathStats* stats) {
  if (!kpath_decide(backend, q, rng, stats)) return std::nullopt;
  if (q.length == 1) return PathWitness{{q.from}};

  const auto n = q.graph.num_vertices();
  // Edges entering `from` or leaving `to` never lie on a simple from->to path.
  std::vector<Edge> edges;
  for (const auto& e : q.graph.edges()) {
    if (e.second != q.from && e.first != q.to) edges.push_back(e);
  }

  for (std::size_t pass = 0; pass <= backend.extraction_retries; ++pass) {
    for (std::size_t i = 0; i < edges.size();) {
      std::vector<Edge> without = edges;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
      const auto candidate = DirectedGraph::from_edges(n, without);
      if (kpath_decide(backend, KPathQuery{candidate, q.from, q.to, q.length}, rng, stats)) {
        edges = std::move(without);
      } else {
        ++i;
      }
    }
    if (auto path = walk_single_path(n, edges, q.from, q.length)) {
      if (validate_path(q.graph, *path, q.from, q.to, q.length)) return path;
      throw InternalError("edge-removal extraction produced an invalid path");
    }
    // Only a randomized backend can leave a removable edge behind.
  }
  throw ExtractionError("k-path witness extraction did not converge after " +
                        std::to_string(backend.extraction_retries + 1) + " passes");
}

}  // namespace ldc
