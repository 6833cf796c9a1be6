#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cactus/canonical.hpp"
#include "cactus/enumeration.hpp"
#include "oracles.hpp"

using namespace cactus;

namespace {

Graph random_permutation(const Graph &g, std::mt19937_64 &rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute(g, perm);
}

} // namespace

TEST(Canonical, PathReversal) {
  const Graph p4(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  const Vertex rev[] = {3, 2, 1, 0};
  EXPECT_EQ(canonical_form(p4), canonical_form(permute(p4, rev)));
}

TEST(Canonical, PathVsStar) {
  const Graph p4(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  const Graph s4(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  EXPECT_NE(canonical_form(p4), canonical_form(s4));
  EXPECT_NE(canonical_form(p4).hex(), canonical_form(s4).hex());
}

TEST(Canonical, RandomPermutationsOfACactus) {
  std::mt19937_64 rng(2024);
  const auto classes = enumerate_cacti(7, 2);
  const Graph g = classes[std::uniform_int_distribution<std::size_t>(0, classes.size() - 1)(rng)];
  const auto cf = canonical_form(g);
  for (int i = 0; i < 100; ++i)
    EXPECT_EQ(canonical_form(random_permutation(g, rng)), cf);
}

TEST(Canonical, InvariantAcrossAllSmallCacti) {
  std::mt19937_64 rng(8);
  for (std::size_t k = 0; k <= 3; ++k)
    for (const Graph &g : enumerate_cacti(8, k))
      for (int i = 0; i < 5; ++i)
        ASSERT_EQ(canonical_form(random_permutation(g, rng)), canonical_form(g)) << to_edge_list(g);
}

// Certificates separate exactly the classes the brute-force minimum separates.
TEST(Canonical, AgreesWithBruteForceOnAllGraphsWithFiveVertices) {
  const std::size_t n = 5;
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      pairs.emplace_back(i, j);
  std::map<CanonicalForm, std::uint64_t> seen;
  std::set<std::uint64_t> codes;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1)
        edges.push_back(pairs[b]);
    const Graph g(n, edges);
    const auto code = oracle::brute_code(g);
    codes.insert(code);
    const auto [it, fresh] = seen.emplace(canonical_form(g), code);
    if (!fresh) {
      ASSERT_EQ(it->second, code) << to_edge_list(g);
    }
  }
  EXPECT_EQ(seen.size(), codes.size());
  EXPECT_EQ(codes.size(), 34u); // graphs on 5 unlabelled vertices
}

TEST(Canonical, RegularGraphsNeedSearch) {
  // C6 and two disjoint triangles are both 2-regular on 6 vertices
  const Graph c6(6, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(5, 0)});
  const Graph two(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
  EXPECT_NE(canonical_form(c6), canonical_form(two));
}

TEST(Canonical, OrderLimit) {
  EXPECT_NO_THROW(canonical_form(Graph(canonical_max_order)));
  EXPECT_THROW(canonical_form(Graph(canonical_max_order + 1)), PreconditionError);
}
