#include <gtest/gtest.h>

#include <chrono>

#include "ldc/errors.hpp"
#include "ldc/harness.hpp"
#include "ldc/polyalg.hpp"
#include "test_support.hpp"

namespace ldc {
namespace {

using testing::directed_cycle;
using testing::make_graph;
using testing::triangle;

PartitionLR partition_of(std::size_t n, std::uint32_t left_bits) {
  VertexMask m(n);
  for (std::size_t v = 0; v < n; ++v) m[v] = (left_bits >> v) & 1;
  return PartitionLR(m);
}

TEST(PolyAlg, FiveCycleTrace) {
  const auto g = directed_cycle(5);
  const auto p = partition_of(5, 0b00011);  // L = {0, 1}
  for (const auto& out : {poly_alg_serial(g, 2, p), poly_alg(g, 2, p)}) {
    ASSERT_TRUE(out.accepted);
    EXPECT_EQ(out.pair, (std::pair<Vertex, Vertex>{0, 1}));
    EXPECT_EQ(out.witness->vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
    EXPECT_EQ(out.first_path_vertices, 2u);
    EXPECT_EQ(out.second_path_vertices, 5u);
  }
}

TEST(PolyAlg, TriangleRejectsEveryPartitionForKFour) {
  const auto g = triangle();
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    EXPECT_FALSE(poly_alg_serial(g, 4, partition_of(3, bits)).accepted);
    EXPECT_FALSE(poly_alg(g, 4, partition_of(3, bits)).accepted);
  }
}

TEST(PolyAlg, DagsReject) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_dag(8, 0.5, rng);
    for (std::size_t k = 2; k <= 4; ++k) {
      const auto p = random_partition(8, rng);
      EXPECT_FALSE(poly_alg(g, k, p).accepted);
      EXPECT_FALSE(poly_alg_serial(g, k, p).accepted);
    }
  }
}

TEST(PolyAlg, Errors) {
  const auto g = triangle();
  EXPECT_THROW(poly_alg(g, 1, partition_of(3, 7)), ConfigError);
  EXPECT_THROW(poly_alg_serial(g, 1, partition_of(3, 7)), ConfigError);
  EXPECT_THROW(poly_alg(g, 2, partition_of(4, 7)), ContractError);
  EXPECT_THROW(poly_alg_serial(g, 2, partition_of(2, 3)), ContractError);
}

TEST(JoinPaths, Examples) {
  EXPECT_EQ(join_paths(PathWitness{{0, 1}}, PathWitness{{1, 2, 3, 4, 0}}).vertices,
            (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(join_paths(PathWitness{{0, 1, 2}}, PathWitness{{2, 0}}).vertices,
            (std::vector<Vertex>{0, 1, 2}));
  EXPECT_THROW(join_paths(PathWitness{{0, 1, 2}}, PathWitness{{2, 1, 0}}), ContractError);
  EXPECT_THROW(join_paths(PathWitness{{0, 1, 2}}, PathWitness{{3, 0}}), ContractError);
  EXPECT_THROW(join_paths(PathWitness{{0, 1, 2}}, PathWitness{{2, 3}}), ContractError);
}

// Exhaustive over all digraphs on n <= 3 and all partitions; random sample on
// n = 4, 5. Any acceptance must come with a valid cycle of >= k vertices
// and agree with the permutation oracle.
TEST(PolyAlg, SoundOnSmallGraphs) {
  auto check = [](const DirectedGraph& g) {
    const auto n = g.num_vertices();
    const auto longest = testing::longest_cycle_by_permutation(g);
    for (std::size_t k = 2; k <= n; ++k) {
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        const auto out = poly_alg(g, k, partition_of(n, bits));
        if (!out.accepted) continue;
        ASSERT_GE(longest, k);
        ASSERT_TRUE(validate_cycle(g, *out.witness, k));
      }
    }
  };
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<Edge> all;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (a != b) all.emplace_back(a, b);
      }
    }
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask & (1u << i)) edges.push_back(all[i]);
      }
      check(make_graph(n, edges));
    }
  }
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) check(testing::random_graph(4 + trial % 2, 0.45, rng));
}

// Only cycles longer than 2k, and a partition realizing the split
// of the planted cycle's first 2k vertices.
TEST(PolyAlg, AcceptsRealizingPartitionOnPlantedInstances) {
  Rng rng(31);
  int instances = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 2 + trial % 3;
    const std::size_t t = 2 * k + 1 + trial % 3;
    const std::size_t n = t + 3;
    const auto inst = generate_planted_instance(n, t, 0.25, rng, true);
    const auto lengths = brute_force_cycle_lengths(inst.graph);
    for (std::size_t l = 2; l <= 2 * k; ++l) ASSERT_FALSE(lengths[l]);
    const auto& c = inst.planted.vertices;
    const std::uint32_t start = static_cast<std::uint32_t>(rng() % t);
    VertexMask m(n);
    for (Vertex v = 0; v < n; ++v) m[v] = rng() & 1;
    for (std::size_t i = 0; i < 2 * k; ++i) m[c[(start + i) % t]] = i < k ? 1 : 0;
    const PartitionLR p(m);
    const auto out = poly_alg(inst.graph, k, p);
    ASSERT_TRUE(out.accepted) << "trial " << trial;
    EXPECT_TRUE(validate_cycle(inst.graph, *out.witness, k));
    ++instances;
  }
  EXPECT_EQ(instances, 60);
}

TEST(PolyAlg, KernelMatchesSerialReference) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const auto g = testing::random_graph(n, 0.1 + 0.05 * (trial % 6), rng);
    const std::size_t k = 2 + trial % 4;
    const auto p = random_partition(n, rng);
    const auto a = poly_alg_serial(g, k, p);
    const auto b = poly_alg(g, k, p);
    ASSERT_EQ(a.accepted, b.accepted);
    EXPECT_EQ(a.pair, b.pair);
    EXPECT_EQ(a.witness.has_value(), b.witness.has_value());
    if (a.witness) {
      EXPECT_EQ(a.witness->vertices, b.witness->vertices);
    }
  }
}

TEST(PolyAlg, WitnessLengthFromOutcome) {
  Rng rng(51);
  int accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_graph(9, 0.25, rng);
    const std::size_t k = 2 + trial % 3;
    const auto out = poly_alg(g, k, random_partition(9, rng));
    if (!out.accepted) continue;
    ++accepted;
    EXPECT_EQ(out.first_path_vertices, k);
    EXPECT_EQ(out.witness->length(), out.first_path_vertices + out.second_path_vertices - 2);
  }
  EXPECT_GT(accepted, 0);
}

TEST(PolyAlg, LargeSparseGraphFinishes) {
  Rng rng(61);
  const std::size_t n = 2000;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    edges.emplace_back(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
  }
  const auto g = make_graph(n, edges);
  const auto p = random_partition(n, rng);
  const auto begin = std::chrono::steady_clock::now();
  const auto out = poly_alg(g, 40, p);
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  EXPECT_LE(out.bfs_calls, 2 * std::uint64_t{n} * n);
  EXPECT_LT(secs, 30.0);
  if (out.accepted) {
    EXPECT_TRUE(validate_cycle(g, *out.witness, 40));
  }
}

}  // namespace
}  // namespace ldc
