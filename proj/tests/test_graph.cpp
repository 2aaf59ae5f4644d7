#include <gtest/gtest.h>

#include <sstream>

#include "ldc/errors.hpp"
#include "ldc/graph.hpp"
#include "test_support.hpp"

namespace ldc {
namespace {

using testing::directed_cycle;
using testing::make_graph;
using testing::triangle;

TEST(ParseGraph, Triangle) {
  const auto parsed = parse_graph("3 3\n0 1\n1 2\n2 0");
  EXPECT_EQ(parsed.graph, triangle());
  EXPECT_EQ(parsed.dropped.self_loops, 0u);
}

TEST(ParseGraph, DropsSelfLoop) {
  const auto parsed = parse_graph("2 1\n0 0");
  EXPECT_EQ(parsed.graph.num_vertices(), 2u);
  EXPECT_EQ(parsed.graph.num_edges(), 0u);
  EXPECT_EQ(parsed.dropped.self_loops, 1u);
}

TEST(ParseGraph, DropsDuplicates) {
  const auto parsed = parse_graph("2 3\n0 1\n0 1\n1 0\n");
  EXPECT_EQ(parsed.graph.num_edges(), 2u);
  EXPECT_EQ(parsed.dropped.duplicates, 1u);
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const auto parsed = parse_graph("# a triangle\n3 3\n\n0 1\n  # mid comment\n1 2\n2 0\n");
  EXPECT_EQ(parsed.graph, triangle());
}

TEST(ParseGraph, VertexOutOfRangeNamesLine) {
  try {
    parse_graph("1 1\n0 5");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("-1 0"), ParseError);
  EXPECT_THROW(parse_graph("3 -2"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 x"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1 2"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2"), ParseError);
  try {
    parse_graph("4 2\n0 1\n1 -3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseGraph, SerializeIsFixedPoint) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto g = testing::random_graph(1 + i % 9, 0.3, rng);
    const auto text = serialize_graph(g);
    const auto again = parse_graph(text);
    EXPECT_EQ(again.graph, g);
    EXPECT_EQ(serialize_graph(again.graph), text);
  }
  std::istringstream in("2 2\n1 0\n0 1\n");
  EXPECT_EQ(serialize_graph(parse_graph(in).graph), "2 2\n0 1\n1 0\n");
}

TEST(DirectedGraph, AdjacencyConsistentWithEdges) {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto g = testing::random_graph(8, 0.4, rng);
    std::size_t in_total = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (Vertex u : g.in_neighbors(v)) {
        EXPECT_TRUE(g.has_edge(u, v));
        ++in_total;
      }
      EXPECT_TRUE(std::is_sorted(g.out_neighbors(v).begin(), g.out_neighbors(v).end()));
    }
    EXPECT_EQ(in_total, g.num_edges());
    EXPECT_EQ(g.edges().size(), g.num_edges());
  }
  EXPECT_THROW(make_graph(2, {{0, 2}}), ContractError);
}

TEST(InducedSubgraph, Examples) {
  const Vertex keep01[] = {0, 1};
  const auto sub = induced_subgraph(triangle(), keep01);
  EXPECT_EQ(sub.graph, make_graph(2, {{0, 1}}));
  EXPECT_EQ(sub.to_original, (std::vector<Vertex>{0, 1}));

  const Vertex keep012[] = {0, 1, 2};
  const auto path = induced_subgraph(directed_cycle(5), keep012);
  EXPECT_EQ(path.graph, make_graph(3, {{0, 1}, {1, 2}}));

  const auto empty = induced_subgraph(triangle(), {});
  EXPECT_EQ(empty.graph.num_vertices(), 0u);
}

TEST(InducedSubgraph, EdgeSetIsFilteredEdgeSet) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto g = testing::random_graph(9, 0.35, rng);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < 9; ++v) {
      if (rng() & 1) keep.push_back(v);
    }
    const auto sub = induced_subgraph(g, keep);
    std::vector<Edge> expected;
    for (const auto& [u, v] : g.edges()) {
      if (std::count(keep.begin(), keep.end(), u) && std::count(keep.begin(), keep.end(), v)) {
        expected.emplace_back(u, v);
      }
    }
    std::vector<Edge> mapped;
    for (const auto& [u, v] : sub.graph.edges()) {
      mapped.emplace_back(sub.to_original[u], sub.to_original[v]);
    }
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, expected);
  }
  // keep = V is the identity.
  const auto g = testing::random_graph(7, 0.5, rng);
  const std::vector<Vertex> all{0, 1, 2, 3, 4, 5, 6};
  EXPECT_EQ(induced_subgraph(g, all).graph, g);
}

TEST(BfsShortestPath, Examples) {
  const auto path = bfs_shortest_path(directed_cycle(5), 0, 2);
  ASSERT_TRUE(path);
  EXPECT_EQ(path->vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(bfs_shortest_path(DirectedGraph(2), 0, 1));
  EXPECT_EQ(bfs_shortest_path(triangle(), 1, 1)->vertices, (std::vector<Vertex>{1}));
}

TEST(BfsShortestPath, TieBreakPrefersLowerIds) {
  // 0->1->3 and 0->2->3 both have 3 vertices.
  const auto g = make_graph(4, {{0, 2}, {0, 1}, {2, 3}, {1, 3}});
  EXPECT_EQ(bfs_shortest_path(g, 0, 3)->vertices, (std::vector<Vertex>{0, 1, 3}));
}

TEST(BfsShortestPath, RespectsAllowedMask) {
  const auto g = make_graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  VertexMask allowed{1, 0, 1, 1};
  EXPECT_EQ(bfs_shortest_path(g, 0, 3, allowed)->vertices, (std::vector<Vertex>{0, 2, 3}));
  allowed[2] = 0;
  EXPECT_FALSE(bfs_shortest_path(g, 0, 3, allowed));
  allowed = {1, 1, 1, 0};
  EXPECT_FALSE(bfs_shortest_path(g, 0, 3, allowed));
}

// Property: BFS length equals the minimum over all enumerated simple paths.
TEST(BfsShortestPath, MatchesExhaustiveMinimum) {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto g = testing::random_graph(n, trial < 30 ? 0.6 : 0.25, rng);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        const auto expected = testing::min_path_vertices(g, a, b);
        const auto got = bfs_shortest_path(g, a, b);
        ASSERT_EQ(got.has_value(), expected.has_value());
        if (!got) continue;
        EXPECT_EQ(got->length(), *expected);
        EXPECT_TRUE(validate_path(g, *got, a, b, *expected));
      }
    }
  }
}

TEST(StronglyConnectedComponents, Basic) {
  // Two 2-cycles joined by a one-way edge, plus an isolated vertex.
  const auto g = make_graph(5, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
  const auto comp = strongly_connected_components(g);
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_EQ(comp[2], comp[3]);
  EXPECT_NE(comp[0], comp[2]);
  EXPECT_NE(comp[4], comp[0]);
  EXPECT_NE(comp[4], comp[2]);
}

TEST(StronglyConnectedComponents, MatchesMutualReachability) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(9, 0.15, rng);
    const auto comp = strongly_connected_components(g);
    for (Vertex a = 0; a < 9; ++a) {
      for (Vertex b = 0; b < 9; ++b) {
        const bool mutual = bfs_shortest_path(g, a, b) && bfs_shortest_path(g, b, a);
        EXPECT_EQ(comp[a] == comp[b], mutual);
      }
    }
  }
}

TEST(ValidateCycle, Examples) {
  const auto c5 = directed_cycle(5);
  EXPECT_TRUE(validate_cycle(c5, CycleWitness{{0, 1, 2, 3, 4}}, 2));
  const auto missing = validate_cycle(c5, CycleWitness{{0, 2, 4}}, 2);
  EXPECT_FALSE(missing);
  EXPECT_EQ(missing.defect, WitnessDefect::kMissingEdge);
  const auto short_one = validate_cycle(triangle(), CycleWitness{{0, 1, 2}}, 4);
  EXPECT_EQ(short_one.defect, WitnessDefect::kTooShort);

  EXPECT_EQ(validate_cycle(c5, CycleWitness{{0}}, 1).defect, WitnessDefect::kTooFewVertices);
  EXPECT_EQ(validate_cycle(c5, CycleWitness{{0, 1, 0}}, 1).defect, WitnessDefect::kRepeatedVertex);
  EXPECT_EQ(validate_cycle(c5, CycleWitness{{0, 9}}, 1).defect, WitnessDefect::kVertexOutOfRange);
  EXPECT_EQ(validate_cycle(c5, CycleWitness{{0, 1, 2}}, 2).defect, WitnessDefect::kMissingEdge);
}

TEST(ValidateCycle, RotationInvariant) {
  Rng rng(99);
  std::size_t valid_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_graph(6, 0.5, rng);
    std::vector<Vertex> vs{0, 1, 2, 3, 4, 5};
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(2 + trial % 5);
    CycleWitness w{vs};
    if (!validate_cycle(g, w, 2)) continue;
    ++valid_seen;
    for (std::size_t r = 0; r < vs.size(); ++r) {
      std::rotate(w.vertices.begin(), w.vertices.begin() + 1, w.vertices.end());
      EXPECT_TRUE(validate_cycle(g, w, 2));
    }
  }
  EXPECT_GT(valid_seen, 0u);
}

TEST(CanonicalRotation, SmallestFirst) {
  EXPECT_EQ(canonical_rotation(CycleWitness{{3, 1, 2}}).vertices, (std::vector<Vertex>{1, 2, 3}));
}

}  // namespace
}  // namespace ldc
