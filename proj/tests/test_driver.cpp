#include <gtest/gtest.h>

#include "ldc/driver.hpp"
#include "ldc/errors.hpp"
#include "ldc/harness.hpp"
#include "test_support.hpp"

namespace ldc {
namespace {

using testing::directed_cycle;
using testing::triangle;

SolverConfig det_config() { return SolverConfig{}; }

SolverConfig rand_config(std::uint64_t seed = 1) {
  SolverConfig cfg;
  cfg.mode = SolveMode::kRandomized;
  cfg.seed = seed;
  return cfg;
}

TEST(ShortCycleScan, TriangleFoundAtThree) {
  for (auto kind : {KPathKind::kSubsetDp, KPathKind::kColorCoding}) {
    KPathBackend backend;
    backend.kind = kind;
    const auto hit = short_cycle_scan(triangle(), 3, backend, 7);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->length, 3u);
    EXPECT_TRUE(validate_cycle(triangle(), hit->cycle, 3));
  }
}

TEST(ShortCycleScan, FiveCycleHasNothingBelowFive) {
  EXPECT_FALSE(short_cycle_scan(directed_cycle(5), 2, KPathBackend{}, 0));
  EXPECT_THROW(short_cycle_scan(directed_cycle(5), 1, KPathBackend{}, 0), ConfigError);
}

// Scan is positive iff some cycle length lies in [k, 2k].
TEST(ShortCycleScan, MatchesCycleLengthOracle) {
  Rng rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const auto g = testing::random_graph(n, 0.1 + 0.04 * (trial % 8), rng);
    const std::size_t k = 2 + trial % 3;
    const auto lengths = brute_force_cycle_lengths(g);
    bool expected = false;
    for (std::size_t l = k; l <= std::min(2 * k, n); ++l) expected = expected || lengths[l];
    const auto hit = short_cycle_scan(g, k, KPathBackend{}, 0);
    ASSERT_EQ(hit.has_value(), expected) << "trial " << trial;
    if (hit) {
      EXPECT_GE(hit->length, k);
      EXPECT_LE(hit->length, 2 * k);
      EXPECT_EQ(hit->cycle.length(), hit->length);
      EXPECT_TRUE(validate_cycle(g, hit->cycle, k));
    }
  }
}

TEST(LdcAlg, TriangleKThreeByScan) {
  for (const auto& cfg : {det_config(), rand_config()}) {
    const auto ans = answer_with_verification(triangle(), 3, cfg);
    ASSERT_TRUE(ans.yes);
    EXPECT_EQ(ans.provenance, Provenance::kShortScan);
    EXPECT_EQ(ans.witness->vertices, (std::vector<Vertex>{0, 1, 2}));
  }
}

TEST(LdcAlg, FiveCycleDetViaPolyAlg) {
  const auto ans = answer_with_verification(directed_cycle(5), 2, det_config());
  ASSERT_TRUE(ans.yes);
  EXPECT_EQ(ans.provenance, Provenance::kPolyAlg);
  EXPECT_EQ(ans.witness->vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(ans.partition_index.has_value());
  EXPECT_TRUE(ans.accepting_pair.has_value());
  EXPECT_GT(ans.counters.partitions_tried, 0u);
}

TEST(LdcAlg, NoAnswers) {
  EXPECT_FALSE(answer_with_verification(triangle(), 4, det_config()).yes);
  EXPECT_FALSE(answer_with_verification(triangle(), 4, rand_config()).yes);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto dag = testing::random_dag(9, 0.4, rng);
    for (std::size_t k = 2; k <= 4; ++k) {
      EXPECT_FALSE(ldc_alg(dag, k, det_config()).yes);
      EXPECT_FALSE(ldc_alg(dag, k, rand_config(trial)).yes);
    }
  }
}

TEST(LdcAlg, DetMatchesOracle) {
  Rng rng(200);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 4 + trial % 7;  // 4..10
    const auto g = testing::random_graph(n, 0.1 + 0.05 * (trial % 9), rng);
    const auto longest = brute_force_longest_cycle(g).longest;
    for (std::size_t k = 2; k <= 5; ++k) {
      const auto ans = answer_with_verification(g, k, det_config());
      ASSERT_EQ(ans.yes, longest >= k) << "trial " << trial << " k " << k;
    }
  }
}

TEST(LdcAlg, SerialAndParallelAgree) {
  Rng rng(300);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = generate_planted_instance(11, 7 + trial % 4, 0.15, rng, true);
    for (auto base : {det_config(), rand_config(trial)}) {
      auto serial = base;
      serial.parallel = false;
      const auto a = ldc_alg(inst.graph, 3, serial);
      const auto b = ldc_alg(inst.graph, 3, base);
      ASSERT_EQ(a.yes, b.yes);
      EXPECT_EQ(a.partition_index, b.partition_index);
      EXPECT_EQ(a.accepting_pair, b.accepting_pair);
      if (a.witness && b.witness) {
        EXPECT_EQ(a.witness->vertices, b.witness->vertices);
      }
    }
  }
}

TEST(LdcAlg, RandIsReproducible) {
  Rng rng(400);
  const auto inst = generate_planted_instance(12, 9, 0.2, rng, true);
  const auto a = ldc_alg(inst.graph, 4, rand_config(99));
  const auto b = ldc_alg(inst.graph, 4, rand_config(99));
  ASSERT_TRUE(a.yes);
  EXPECT_EQ(a.witness->vertices, b.witness->vertices);
  EXPECT_EQ(a.partition_index, b.partition_index);
}

TEST(SolverConfig, Validation) {
  EXPECT_THROW(ldc_alg(triangle(), 1, det_config()), ConfigError);
  auto cfg = rand_config();
  cfg.amplification = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.amplification = 10;
  cfg.repetition_constant = -1;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = det_config();
  cfg.subset_dp_cap = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(SolverConfig, TrialsAndBackends) {
  auto cfg = rand_config();
  EXPECT_EQ(cfg.random_trials(2), 160u);
  cfg.amplification = 1.5;
  EXPECT_EQ(cfg.random_trials(3), 96u);
  EXPECT_EQ(cfg.kpath_kind(), KPathKind::kColorCoding);
  EXPECT_FALSE(cfg.mixed_backend());
  cfg.kpath = KPathKind::kSubsetDp;
  EXPECT_TRUE(cfg.mixed_backend());
  EXPECT_EQ(det_config().kpath_kind(), KPathKind::kSubsetDp);

  const auto ans = ldc_alg(triangle(), 3, cfg);
  EXPECT_TRUE(ans.mixed_backend);
  EXPECT_EQ(ans.kpath, KPathKind::kSubsetDp);
}

TEST(LdcAlg, CapacityErrorNamesMode) {
  const auto big = directed_cycle(40);
  try {
    ldc_alg(big, 2, det_config());
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("det"), std::string::npos);
  }
}

}  // namespace
}  // namespace ldc
