#include <gtest/gtest.h>

#include <cmath>

#include "lcdeg/lll_bounds.hpp"

using namespace lcdeg;

TEST(Entropy, Values) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.110), 0.499915958164528, 1e-12);
  EXPECT_NEAR(binary_entropy(0.05), 0.28639695711595625, 1e-12);
  EXPECT_THROW(binary_entropy(-0.01), InputError);
  EXPECT_THROW(binary_entropy(1.5), InputError);
}

TEST(Entropy, Symmetry) {
  for (int i = 0; i <= 1000; ++i) {
    const double t = i / 1000.0;
    EXPECT_NEAR(binary_entropy(t), binary_entropy(1.0 - t), 1e-12);
  }
}

TEST(Condition, BipartiteMargins) {
  const auto low = condition_margin(GraphKind::bipartite, 0.05);
  EXPECT_LT(low.margin, 0.0);
  EXPECT_NEAR(low.margin, 2 * 0.28639695711595625 - 1.0, 1e-6);
  EXPECT_NEAR(low.worst_d, 0.05, 1e-3);
  const auto at = condition_margin(GraphKind::bipartite, 0.1100279);
  EXPECT_NEAR(at.margin, 0.0, 1e-5);
  EXPECT_NEAR(at.worst_d, 0.1100279, 1e-3);
}

TEST(Condition, GeneralMargins) {
  const auto high = condition_margin(GraphKind::general, 0.30);
  EXPECT_GT(high.margin, 0.0);
  EXPECT_NEAR(high.margin, 0.357, 1e-3);
  EXPECT_LT(condition_margin(GraphKind::general, 0.18).margin, 0.0);
  EXPECT_THROW(condition_margin(GraphKind::general, 0.0), InputError);
  EXPECT_THROW(condition_margin(GraphKind::general, 0.6), InputError);
}

TEST(Condition, MonotoneInC) {
  for (auto kind : {GraphKind::bipartite, GraphKind::general}) {
    EntropySolverConfig coarse;
    coarse.grid_step = 1e-3;
    double prev = -1e9;
    for (int i = 1; i <= 250; ++i) {
      const double m = condition_margin(kind, i * 1e-3, coarse).margin;
      EXPECT_GE(m, prev - 1e-9) << "c = " << i * 1e-3;
      prev = m;
    }
  }
}

TEST(Solver, RecoversConstants) {
  const double cb = solve_max_c(GraphKind::bipartite);
  const double cg = solve_max_c(GraphKind::general);
  EXPECT_NEAR(cb, 0.1100279, 2e-6);
  EXPECT_NEAR(cg, 0.1892896, 2e-6);
  EXPECT_NEAR(2 * binary_entropy(cb), 1.0, 1e-4);
  EXPECT_THROW(solve_max_c(GraphKind::general, 0.0), InputError);
}

TEST(Random, Determinism) {
  EXPECT_EQ(random_graph(10, 3), random_graph(10, 3));
  EXPECT_EQ(random_graph(1, 3).edge_count(), 0u);
  const Graph b = random_bipartite(4, 1);
  ASSERT_TRUE(b.bipartition().has_value());
  for (auto [u, v] : b.edges()) EXPECT_TRUE(u < 4 && v >= 4);
}

TEST(Profile, Examples) {
  const auto one = empirical_profile(GraphKind::general, 1, 10, 0);
  EXPECT_EQ(one.histogram.at(0), 10u);
  const auto ten = empirical_profile(GraphKind::general, 10, 100, 5, 0.1);
  EXPECT_TRUE(ten.min_degree_respected);
  std::size_t total = 0;
  for (auto [v, c] : ten.histogram) total += c;
  EXPECT_EQ(total, 100u);
  const auto bip = empirical_profile(GraphKind::bipartite, 8, 100, 5);
  ASSERT_TRUE(bip.oracles_agree.has_value());
  EXPECT_TRUE(*bip.oracles_agree);
  EXPECT_THROW(empirical_profile(GraphKind::general, 31, 1, 0), SearchTooLarge);
  EXPECT_EQ(empirical_profile(GraphKind::general, 10, 50, 7).histogram,
            empirical_profile(GraphKind::general, 10, 50, 7).histogram);
}
