#include <gtest/gtest.h>

#include <cmath>

#include "lcdeg/paley.hpp"
#include "oracles.hpp"

using namespace lcdeg;

TEST(Primes, TrialDivision) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(257));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(221));
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(5, 0), 0);
  EXPECT_EQ(legendre(5, 4), 1);
  EXPECT_EQ(legendre(13, 2), -1);
  EXPECT_EQ(legendre(13, -1), 1);
  EXPECT_THROW(legendre(15, 2), InputError);
}

TEST(Legendre, MatchesSquaringOracle) {
  for (std::uint64_t p : {3u, 5u, 7u, 13u, 17u, 29u, 61u, 101u}) {
    const auto squares = oracle::residues(p);
    long sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      const int want = x == 0 ? 0 : (squares.count(x) ? 1 : -1);
      EXPECT_EQ(legendre(p, static_cast<std::int64_t>(x)), want);
      sum += legendre(p, static_cast<std::int64_t>(x));
    }
    EXPECT_EQ(sum, 0);
  }
}

TEST(Legendre, Multiplicative) {
  for (std::int64_t a = 0; a < 29; ++a)
    for (std::int64_t b = 0; b < 29; ++b)
      EXPECT_EQ(legendre(29, a * b % 29), legendre(29, a) * legendre(29, b));
}

TEST(PaleyGraph, Construction) {
  EXPECT_EQ(paley_graph(5).graph, cycle_graph(5));
  const auto p13 = paley_graph(13);
  EXPECT_EQ(p13.graph.row(0), VertexSet::from_indices(13, {1, 3, 4, 9, 10, 12}));
  for (std::uint64_t p : {5u, 13u, 17u, 29u, 37u, 101u})
    for (Vertex v = 0; v < p; ++v) EXPECT_EQ(paley_graph(p).graph.degree(v), (p - 1) / 2);
}

TEST(PaleyGraph, Rejections) {
  try {
    paley_graph(7);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("p ≢ 1 mod 4"), std::string::npos);
  }
  try {
    paley_graph(21);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("not prime"), std::string::npos);
  }
  EXPECT_THROW(paley_graph(269), InputError);
  EXPECT_NO_THROW(paley_graph(269, 300));
}

TEST(CharSum, Examples) {
  const auto ctx = paley_graph(5);
  const auto r = char_sum(ctx, VertexSet::from_indices(5, {0}));
  EXPECT_EQ(r.sum, 0);
  EXPECT_EQ(r.odd_size, 3u);
  EXPECT_EQ(r.even_size, 3u);
  EXPECT_TRUE(char_sum(ctx, VertexSet::from_indices(5, {0, 1})).identity_holds());
  EXPECT_EQ(char_sum(ctx, VertexSet::full(5)).sum, 0);
  EXPECT_THROW(char_sum(ctx, VertexSet(5)), InputError);
}

TEST(CharSum, CountingIdentity) {
  const auto ctx = paley_graph(29);
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto s = detail::random_subset(29, 1, rng);
    const auto r = char_sum(ctx, s);
    EXPECT_EQ(r.odd_size + r.even_size, 29 + s.count());
    EXPECT_TRUE(r.identity_holds());
  }
}

TEST(Lemmas, OddEvenIdentity) {
  EXPECT_TRUE(verify_lemma_odd_even(paley_graph(13), 200, 1).passed());
  const auto small = verify_lemma_odd_even_exhaustive(paley_graph(17), 2);
  EXPECT_TRUE(small.passed());
  EXPECT_EQ(small.checked, 17u + 136u);
}

TEST(Lemmas, WeilBound) {
  const auto r = verify_weil_bound(paley_graph(29), 3, 0, 0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked, 29u + 406u + 3654u);
  EXPECT_TRUE(verify_weil_bound(paley_graph(13), 1, 50, 3).passed());
  EXPECT_EQ(char_sum(paley_graph(13), VertexSet::from_indices(13, {4})).sum, 0);
}

TEST(Bounds, ExactComparisons) {
  // sqrt(13) - 1.5 ~ 2.106: 2 fails, 3 passes.
  EXPECT_FALSE(at_least_sqrt_p_minus_three_halves(2, 13));
  EXPECT_TRUE(at_least_sqrt_p_minus_three_halves(3, 13));
  // sqrt(29) - 0.5 ~ 4.885.
  EXPECT_FALSE(at_least_sqrt_p_minus_half(4, 29));
  EXPECT_TRUE(at_least_sqrt_p_minus_half(5, 29));
  EXPECT_TRUE(weil_bound_holds(1, 1, 13));
  EXPECT_FALSE(weil_bound_holds(2, 1, 13));
  EXPECT_TRUE(weil_bound_holds(-8, 3, 13));  // 7^2 = 49 <= 4 * 13
  EXPECT_FALSE(weil_bound_holds(9, 3, 13));  // 64 > 52
}

TEST(Theorem, SmallPrimes) {
  const auto r5 = verify_paley_theorem(paley_graph(5));
  EXPECT_EQ(r5.mode, PaleyTheoremReport::Mode::verified);
  EXPECT_EQ(r5.delta_loc, 2u);
  EXPECT_NEAR(r5.bound, std::sqrt(5.0) - 1.5, 1e-12);
  EXPECT_TRUE(r5.holds);
  EXPECT_TRUE(r5.lemma_holds);
  EXPECT_EQ(closed_odd_size(paley_graph(5).graph, r5.witness), 3u);

  for (std::uint64_t p : {13u, 17u}) {
    const auto r = verify_paley_theorem(paley_graph(p), {30, 4});
    EXPECT_EQ(r.delta_loc, 4u);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.lemma_holds);
    EXPECT_EQ(r.sets_examined, (std::uint64_t{1} << p) - 1);
  }
}

TEST(Theorem, EvenMinimumMatchesBruteForce) {
  const auto ctx = paley_graph(13);
  std::size_t best = 14;
  for (std::uint64_t mask = 1; mask < (1u << 13); ++mask) {
    VertexSet s(13);
    for (Vertex v = 0; v < 13; ++v) s.set(v, (mask >> v) & 1);
    best = std::min(best, (s | even_neighborhood(ctx.graph, s)).count());
  }
  EXPECT_EQ(verify_paley_theorem(ctx).min_even_size, best);
}

TEST(Theorem, FalsifierModeAboveCap) {
  const auto r = verify_paley_theorem(paley_graph(37), {30, 1}, 20000, 3);
  EXPECT_EQ(r.mode, PaleyTheoremReport::Mode::not_falsified);
  EXPECT_FALSE(r.delta_loc.has_value());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.falsifier_trials, 20000u);
}
