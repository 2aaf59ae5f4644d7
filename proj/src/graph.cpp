#include "ldc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>

#include "ldc/errors.hpp"

namespace ldc {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& sorted_edges, bool by_source,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
  offsets.assign(n + 1, 0);
  for (const auto& [u, v] : sorted_edges) ++offsets[(by_source ? u : v) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.resize(sorted_edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : sorted_edges) {
    const Vertex key = by_source ? u : v;
    targets[cursor[key]++] = by_source ? v : u;
  }
}

}  // namespace

DirectedGraph::DirectedGraph(std::size_t n)
    : out_offsets_(n + 1, 0), in_offsets_(n + 1, 0) {}

DirectedGraph DirectedGraph::from_edges(std::size_t n, std::span<const Edge> edges,
                                        Normalization* dropped) {
  Normalization counts;
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ContractError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      ++counts.self_loops;
      continue;
    }
    kept.emplace_back(u, v);
  }
  std::sort(kept.begin(), kept.end());
  const auto last = std::unique(kept.begin(), kept.end());
  counts.duplicates = static_cast<std::size_t>(std::distance(last, kept.end()));
  kept.erase(last, kept.end());

  DirectedGraph g;
  build_csr(n, kept, true, g.out_offsets_, g.out_targets_);
  // The in-lists come out sorted because `kept` is sorted by source.
  build_csr(n, kept, false, g.in_offsets_, g.in_sources_);
  if (dropped != nullptr) *dropped = counts;
  return g;
}

bool DirectedGraph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  const auto out = out_neighbors(u);
  return std::binary_search(out.begin(), out.end(), v);
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : out_neighbors(u)) result.emplace_back(u, v);
  }
  return result;
}

CycleWitness canonical_rotation(CycleWitness cycle) {
  auto& vs = cycle.vertices;
  std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
  return cycle;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits a line into exactly two non-negative integers.
std::pair<std::uint64_t, std::uint64_t> read_pair(std::string_view line, std::size_t lineno,
                                                  std::string_view what) {
  std::uint64_t values[2] = {0, 0};
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    const auto token = line.substr(pos, end - pos);
    if (count == 2) {
      throw ParseError(lineno, "expected " + std::string(what) + ", found extra token '" +
                                   std::string(token) + "'");
    }
    if (token.front() == '-') {
      throw ParseError(lineno, "negative value '" + std::string(token) + "'");
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(lineno, "not an integer: '" + std::string(token) + "'");
    }
    values[count++] = value;
    pos = end;
  }
  if (count != 2) throw ParseError(lineno, "expected " + std::string(what));
  return {values[0], values[1]};
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;

    if (!header) {
      header = read_pair(line, lineno, "header 'n m'");
      header_line = lineno;
      if (header->first > std::numeric_limits<Vertex>::max()) {
        throw ParseError(lineno, "vertex count too large");
      }
      continue;
    }
    const auto [u, v] = read_pair(line, lineno, "edge 'u v'");
    if (u >= header->first || v >= header->first) {
      throw ParseError(lineno, "vertex id " + std::to_string(std::max(u, v)) +
                                   " out of range for n = " + std::to_string(header->first));
    }
    if (edges.size() == header->second) {
      throw ParseError(lineno, "more edge lines than the declared m = " +
                                   std::to_string(header->second));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!header) throw ParseError(lineno, "missing header 'n m'");
  if (edges.size() != header->second) {
    throw ParseError(header_line, "declared m = " + std::to_string(header->second) + " but found " +
                                      std::to_string(edges.size()) + " edge lines");
  }
  ParsedGraph parsed;
  parsed.graph = DirectedGraph::from_edges(header->first, edges, &parsed.dropped);
  return parsed;
}

ParsedGraph parse_graph(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

void write_graph(std::ostream& out, const DirectedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.out_neighbors(u)) out << u << ' ' << v << '\n';
  }
}

std::string serialize_graph(const DirectedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

// ---------------------------------------------------------------------------

InducedSubgraph induced_subgraph(const DirectedGraph& g, std::span<const Vertex> keep) {
  const std::size_t n = g.num_vertices();
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> new_id(n, kAbsent);
  for (Vertex v : keep) {
    if (v < n) new_id[v] = 0;
  }
  InducedSubgraph sub;
  for (Vertex v = 0; v < n; ++v) {
    if (new_id[v] == kAbsent) continue;
    new_id[v] = static_cast<Vertex>(sub.to_original.size());
    sub.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex u : sub.to_original) {
    for (Vertex v : g.out_neighbors(u)) {
      if (new_id[v] != kAbsent) edges.emplace_back(new_id[u], new_id[v]);
    }
  }
  sub.graph = DirectedGraph::from_edges(sub.to_original.size(), edges);
  return sub;
}

PathWitness BfsTree::path_to(Vertex v) const {
  PathWitness path;
  path.vertices.resize(path_vertices(v));
  for (auto it = path.vertices.rbegin(); it != path.vertices.rend(); ++it) {
    *it = v;
    v = parent[v];
  }
  return path;
}

namespace {

// BFS that stops once `stop_at` has been discovered (kNoVertex: full tree).
BfsTree run_bfs(const DirectedGraph& g, Vertex from, const VertexMask* allowed, Vertex stop_at) {
  const std::size_t n = g.num_vertices();
  BfsTree tree;
  tree.root = from;
  tree.parent.assign(n, BfsTree::kNoVertex);
  tree.depth.assign(n, 0);
  if (from >= n || (allowed != nullptr && !(*allowed)[from])) return tree;
  tree.parent[from] = from;
  if (from == stop_at) return tree;

  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(from);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.out_neighbors(u)) {
      if (tree.parent[v] != BfsTree::kNoVertex) continue;
      if (allowed != nullptr && !(*allowed)[v]) continue;
      tree.parent[v] = u;
      tree.depth[v] = tree.depth[u] + 1;
      if (v == stop_at) return tree;
      queue.push_back(v);
    }
  }
  return tree;
}

std::optional<PathWitness> shortest_path(const DirectedGraph& g, Vertex from, Vertex to,
                                         const VertexMask* allowed) {
  if (from >= g.num_vertices() || to >= g.num_vertices()) return std::nullopt;
  if (allowed != nullptr && !(*allowed)[to]) return std::nullopt;
  const BfsTree tree = run_bfs(g, from, allowed, to);
  if (!tree.reached(to)) return std::nullopt;
  return tree.path_to(to);
}

}  // namespace

std::optional<PathWitness> bfs_shortest_path(const DirectedGraph& g, Vertex from, Vertex to) {
  return shortest_path(g, from, to, nullptr);
}

std::optional<PathWitness> bfs_shortest_path(const DirectedGraph& g, Vertex from, Vertex to,
                                             const VertexMask& allowed) {
  return shortest_path(g, from, to, &allowed);
}

BfsTree bfs_tree(const DirectedGraph& g, Vertex from, const VertexMask& allowed) {
  return run_bfs(g, from, &allowed, BfsTree::kNoVertex);
}

std::vector<std::uint32_t> strongly_connected_components(const DirectedGraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next edge offset)
  std::uint32_t next_index = 0, next_comp = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, edge_pos] = call.back();
      if (edge_pos == 0 && index[v] == kUnvisited) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      const auto out = g.out_neighbors(v);
      if (edge_pos < out.size()) {
        const Vertex w = out[edge_pos++];
        if (index[w] == kUnvisited) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      const Vertex finished = v;
      call.pop_back();
      if (!call.empty()) {
        const Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return comp;
}

// ---------------------------------------------------------------------------

std::string_view to_string(WitnessDefect defect) noexcept {
  switch (defect) {
    case WitnessDefect::kNone: return "ok";
    case WitnessDefect::kTooFewVertices: return "too-few-vertices";
    case WitnessDefect::kVertexOutOfRange: return "vertex-out-of-range";
    case WitnessDefect::kRepeatedVertex: return "repeated-vertex";
    case WitnessDefect::kMissingEdge: return "missing-edge";
    case WitnessDefect::kWrongEndpoints: return "wrong-endpoints";
    case WitnessDefect::kWrongLength: return "wrong-length";
    case WitnessDefect::kTooShort: return "too-short";
  }
  return "unknown";
}

namespace {

// Range, distinctness and consecutive-edge checks shared by paths and cycles.
WitnessCheck check_sequence(const DirectedGraph& g, const std::vector<Vertex>& vs) {
  std::vector<char> seen(g.num_vertices(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.num_vertices()) return {WitnessDefect::kVertexOutOfRange, i};
    if (seen[vs[i]]) return {WitnessDefect::kRepeatedVertex, i};
    seen[vs[i]] = 1;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[i + 1])) return {WitnessDefect::kMissingEdge, i};
  }
  return {};
}

}  // namespace

WitnessCheck validate_cycle(const DirectedGraph& g, const CycleWitness& w, std::size_t k) {
  const auto& vs = w.vertices;
  if (vs.size() < 2) return {WitnessDefect::kTooFewVertices, 0};
  if (auto check = check_sequence(g, vs); !check) return check;
  if (!g.has_edge(vs.back(), vs.front())) return {WitnessDefect::kMissingEdge, vs.size() - 1};
  if (vs.size() < k) return {WitnessDefect::kTooShort, 0};
  return {};
}

WitnessCheck validate_path(const DirectedGraph& g, const PathWitness& w, Vertex from, Vertex to,
                           std::size_t length) {
  const auto& vs = w.vertices;
  if (vs.empty()) return {WitnessDefect::kTooFewVertices, 0};
  if (auto check = check_sequence(g, vs); !check) return check;
  if (vs.front() != from || vs.back() != to) return {WitnessDefect::kWrongEndpoints, 0};
  if (vs.size() != length) return {WitnessDefect::kWrongLength, 0};
  return {};
}

}  // namespace ldc
