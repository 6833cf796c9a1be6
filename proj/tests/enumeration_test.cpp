#include <gtest/gtest.h>

#include "cactus/enumeration.hpp"
#include "cactus/verification.hpp"
#include "oracles.hpp"

using namespace cactus;

TEST(Enumerate, SmallCases) {
  const auto tri = enumerate_cacti(3, 1);
  ASSERT_EQ(tri.size(), 1u);
  EXPECT_EQ(tri[0].size(), 3u);
  EXPECT_EQ(enumerate_cacti(4, 0).size(), 2u);
  EXPECT_EQ(enumerate_cacti(1, 0).size(), 1u);
  EXPECT_THROW(enumerate_cacti(4, 2), PreconditionError);
  EXPECT_THROW(enumerate_cacti(enumeration_max_order + 1, 0), PreconditionError);
  EXPECT_THROW(enumerate_cacti(0, 0), PreconditionError);
}

TEST(Enumerate, EveryResultIsACactusWithKCycles) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 0; 2 * k + 1 <= n; ++k)
      for (const Graph &g : enumerate_cacti(n, k)) {
        const auto p = cactus_profile(g);
        ASSERT_TRUE(p.is_cactus);
        ASSERT_EQ(p.k, k);
        ASSERT_EQ(g.order(), n);
      }
}

TEST(Enumerate, TreeCountsMatchPrueferOracle) {
  for (std::size_t n = 1; n <= 8; ++n)
    EXPECT_EQ(enumerate_cacti(n, 0).size(), oracle::count_trees(n)) << "n=" << n;
  EXPECT_EQ(enumerate_cacti(7, 0).size(), 11u);
}

TEST(Enumerate, TotalCountsMatchKnownSequence) {
  const std::size_t expected[] = {1, 1, 2, 4, 9, 23, 63, 188};
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t total = 0;
    for (std::size_t k = 0; 2 * k + 1 <= n; ++k)
      total += enumerate_cacti(n, k).size();
    EXPECT_EQ(total, expected[n - 1]) << "n=" << n;
  }
}

// The same classes as brute force over every labelled graph.
TEST(Enumerate, MatchesLabelledBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto classes = oracle::cactus_classes(n);
    for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
      std::set<std::uint64_t> got;
      for (const Graph &g : enumerate_cacti(n, k))
        got.insert(oracle::brute_code(g));
      const auto it = classes.find(k);
      ASSERT_NE(it, classes.end());
      EXPECT_EQ(got, it->second) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Extremal, BowtieAlone) {
  const auto r = verify_extremal(5, 2, Alpha(0));
  EXPECT_EQ(r.num_cacti, 1u);
  EXPECT_TRUE(r.is_cc_max);
  EXPECT_TRUE(r.is_cc_unique_max);
  EXPECT_FALSE(r.gap.has_value());
}

TEST(Extremal, UniqueMaximumAtHalf) {
  const auto r = verify_extremal(6, 1, Alpha(0.5));
  EXPECT_TRUE(r.is_cc_unique_max);
  EXPECT_GT(*r.gap, 1e-7);
  EXPECT_EQ(r.argmax_certificate, r.cc_certificate);
  EXPECT_FALSE(r.counterexample.has_value());
}

TEST(Extremal, ReportsCounterexampleWhenCcIsBeaten) {
  // a supplied list with a denser graph than any (6,1) cactus
  std::vector<Graph> classes{build_cc(6, 1), build_cc(6, 2)};
  const auto r = verify_extremal(classes, 6, 1, Alpha(0.3));
  EXPECT_FALSE(r.is_cc_max);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(*r.counterexample, to_edge_list(build_cc(6, 2)));
  EXPECT_LT(*r.gap, 0.0);
}

TEST(Extremal, MissingCcIsAnError) {
  std::vector<Graph> classes{Graph(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)})};
  EXPECT_THROW(verify_extremal(classes, 4, 0, Alpha(0)), Error);
}

TEST(Extremal, SpecialAlphasForAllSmallCases) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t k = 0; 2 * k + 1 <= n; ++k)
      for (double a : {0.0, 0.5}) {
        const auto r = verify_extremal(n, k, Alpha(a));
        EXPECT_TRUE(r.is_cc_unique_max) << n << " " << k << " " << a;
      }
}

TEST(LemmaSweep, SmallOrders) {
  const double alphas[] = {0.0, 0.5};
  const auto r = verify_lemma_sweep(5, alphas);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.graphs, 1u + 1 + 2 + 4 + 9);
  EXPECT_GT(r.checks.at("rotate"), 0u);
  EXPECT_GT(r.checks.at("merge_cut_edge"), 0u);
  EXPECT_GT(r.checks.at("shrink_cycle"), 0u);
}

TEST(LemmaSweep, RandomAlphasAreDeterministic) {
  const double alphas[] = {0.25};
  const auto a = verify_lemma_sweep(4, alphas, 99, 3);
  const auto b = verify_lemma_sweep(4, alphas, 99, 3);
  EXPECT_EQ(a.alphas, b.alphas);
  EXPECT_EQ(a.alphas.size(), 4u);
  EXPECT_EQ(a.total_checks(), b.total_checks());
}

TEST(LemmaSweep, RejectsAlphaOne) {
  const double alphas[] = {1.0};
  EXPECT_THROW(verify_lemma_sweep(4, alphas), AlphaDomainError);
}
