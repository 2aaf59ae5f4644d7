#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ldc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Membership flags over the vertex set; used for induced-subgraph views.
using VertexMask = std::vector<char>;

/// Simple digraph on vertices 0..n-1 in CSR form. Out- and in-neighbour lists
/// are sorted ascending. Immutable once built.
class DirectedGraph {
 public:
  /// Counts of input edges dropped during normalization.
  struct Normalization {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
  };

  DirectedGraph() : DirectedGraph(std::size_t{0}) {}
  explicit DirectedGraph(std::size_t n);

  /// Builds a normalized graph: self-loops and repeated edges are dropped.
  /// Throws ContractError if an endpoint is >= n.
  static DirectedGraph from_edges(std::size_t n, std::span<const Edge> edges,
                                  Normalization* dropped = nullptr);

  std::size_t num_vertices() const noexcept { return out_offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return out_targets_.size(); }

  std::span<const Vertex> out_neighbors(Vertex v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }

  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::size_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_sources_;
};

/// Ordered vertex sequence v_1..v_l of a simple path; length counts vertices.
struct PathWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Ordered vertex sequence v_1..v_t of a simple cycle; the edge (v_t, v_1) is
/// implicit.
struct CycleWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Rotates a cycle so that its smallest vertex id comes first.
CycleWitness canonical_rotation(CycleWitness cycle);

// ---------------------------------------------------------------------------
// Edge-list text format
// ---------------------------------------------------------------------------

struct ParsedGraph {
  DirectedGraph graph;
  DirectedGraph::Normalization dropped;
};

/// Parses "n m" followed by m lines "u v". Blank lines and lines whose first
/// non-blank character is '#' are ignored. Throws ParseError.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph parse_graph(std::istream& in);

/// Writes the graph in the edge-list format, edges in lexicographic order.
std::string serialize_graph(const DirectedGraph& g);
void write_graph(std::ostream& out, const DirectedGraph& g);

// ---------------------------------------------------------------------------
// Subgraphs and search
// ---------------------------------------------------------------------------

struct InducedSubgraph {
  DirectedGraph graph;
  /// to_original[new_id] is the vertex id in the parent graph.
  std::vector<Vertex> to_original;
};

/// G[keep]: vertices renumbered densely in ascending original-id order.
/// Ids in `keep` that are out of range or repeated are ignored.
InducedSubgraph induced_subgraph(const DirectedGraph& g, std::span<const Vertex> keep);

/// Path from `from` to `to` with the fewest vertices. Neighbours are expanded
/// in ascending id order, so ties resolve deterministically. from == to gives
/// the one-vertex path.
std::optional<PathWitness> bfs_shortest_path(const DirectedGraph& g, Vertex from, Vertex to);

/// Same search restricted to the subgraph induced by `allowed`. Returns absent
/// if either endpoint is not allowed.
std::optional<PathWitness> bfs_shortest_path(const DirectedGraph& g, Vertex from, Vertex to,
                                             const VertexMask& allowed);

/// Breadth-first tree from `from` inside G[allowed]. parent[from] == from;
/// unreached vertices have parent == kNoVertex.
struct BfsTree {
  static constexpr Vertex kNoVertex = static_cast<Vertex>(-1);
  Vertex root = kNoVertex;
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> depth;

  bool reached(Vertex v) const noexcept { return parent[v] != kNoVertex; }
  /// Vertex count of the tree path root..v. Requires reached(v).
  std::size_t path_vertices(Vertex v) const noexcept { return depth[v] + 1; }
  PathWitness path_to(Vertex v) const;
};

BfsTree bfs_tree(const DirectedGraph& g, Vertex from, const VertexMask& allowed);

/// Strongly connected component id per vertex (Tarjan); ids are dense.
std::vector<std::uint32_t> strongly_connected_components(const DirectedGraph& g);

// ---------------------------------------------------------------------------
// Witness validation
// ---------------------------------------------------------------------------

enum class WitnessDefect {
  kNone,
  kTooFewVertices,
  kVertexOutOfRange,
  kRepeatedVertex,
  kMissingEdge,
  kWrongEndpoints,
  kWrongLength,
  kTooShort,
};

std::string_view to_string(WitnessDefect defect) noexcept;

struct WitnessCheck {
  WitnessDefect defect = WitnessDefect::kNone;
  /// Position in the witness where the defect was found, when meaningful.
  std::size_t position = 0;

  bool ok() const noexcept { return defect == WitnessDefect::kNone; }
  explicit operator bool() const noexcept { return ok(); }
};

/// True iff `w` is a simple cycle of `g` (t >= 2, closing edge present) with
/// at least k vertices.
WitnessCheck validate_cycle(const DirectedGraph& g, const CycleWitness& w, std::size_t k);

/// True iff `w` is a simple path of `g` from `from` to `to` on exactly
/// `length` vertices.
WitnessCheck validate_path(const DirectedGraph& g, const PathWitness& w, Vertex from, Vertex to,
                           std::size_t length);

}  // namespace ldc
