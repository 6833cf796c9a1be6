#include <gtest/gtest.h>

#include "cactus/profile.hpp"
#include "oracles.hpp"

using namespace cactus;

namespace {

Graph bowtie() { return Graph(5, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(0, 3), Edge(3, 4), Edge(0, 4)}); }

Graph star(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v)
    e.emplace_back(0, v);
  return Graph(n, e);
}

} // namespace

TEST(Profile, Bowtie) {
  const auto p = cactus_profile(bowtie());
  EXPECT_TRUE(p.is_connected);
  EXPECT_TRUE(p.is_cactus);
  EXPECT_EQ(p.k, 2u);
  EXPECT_EQ(p.cut_vertices, std::vector<Vertex>{0});
  EXPECT_TRUE(p.proper_cut_edges.empty());
  EXPECT_TRUE(p.cut_edges.empty());
  EXPECT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.cycle_blocks().size(), 2u);
}

TEST(Profile, K4IsNotCactus) {
  const Graph k4(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
  const auto p = cactus_profile(k4);
  EXPECT_TRUE(p.is_connected);
  EXPECT_FALSE(p.is_cactus);
  EXPECT_EQ(p.blocks.size(), 1u);
}

TEST(Profile, TrianglesJoinedByEdge) {
  const Graph g(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
  const auto p = cactus_profile(g);
  EXPECT_TRUE(p.is_cactus);
  EXPECT_EQ(p.k, 2u);
  EXPECT_EQ(p.proper_cut_edges, std::vector<Edge>{Edge(2, 3)});
  EXPECT_EQ(p.cut_vertices, (std::vector<Vertex>{2, 3}));
}

TEST(Profile, Star) {
  const auto p = cactus_profile(star(6));
  EXPECT_TRUE(p.is_cactus);
  EXPECT_EQ(p.k, 0u);
  EXPECT_TRUE(p.proper_cut_edges.empty());
  EXPECT_EQ(p.cut_edges.size(), 5u);
  ASSERT_EQ(p.pendant_paths.size(), 5u);
  for (const auto &pp : p.pendant_paths) {
    EXPECT_EQ(pp.anchor, 0u);
    EXPECT_EQ(pp.length(), 1u);
  }
}

TEST(Profile, PendantPathRunsOutwards) {
  // triangle 0-1-2 with path 0-3-4-5
  const Graph g(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(0, 3), Edge(3, 4), Edge(4, 5)});
  const auto paths = pendant_paths(g);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].anchor, 0u);
  EXPECT_EQ(paths[0].path, (std::vector<Vertex>{3, 4, 5}));
  const auto p = cactus_profile(g);
  EXPECT_EQ(p.proper_cut_edges, (std::vector<Edge>{Edge(0, 3), Edge(3, 4)}));
}

TEST(Profile, PathHasNoPendantPaths) {
  const Graph p5(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
  EXPECT_TRUE(pendant_paths(p5).empty());
}

TEST(Profile, DisconnectedAndTrivial) {
  const auto p = cactus_profile(Graph(3, {Edge(0, 1)}));
  EXPECT_FALSE(p.is_connected);
  EXPECT_FALSE(p.is_cactus);
  const auto single = cactus_profile(Graph(1));
  EXPECT_TRUE(single.is_cactus);
  EXPECT_TRUE(single.blocks.empty());
}

TEST(Profile, TwoCyclesSharingOneVertexVsEdge) {
  // theta graph: two 4-cycles sharing the path 0-4-2 ... shares two vertices
  const Graph theta(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 0), Edge(0, 4), Edge(4, 2)});
  EXPECT_FALSE(cactus_profile(theta).is_cactus);
}

TEST(Profile, CycleOrderWalksTheCycle) {
  const Graph c5(5, {Edge(0, 3), Edge(3, 1), Edge(1, 4), Edge(4, 2), Edge(2, 0)});
  const auto b = blocks(c5);
  ASSERT_EQ(b.size(), 1u);
  const auto order = cycle_order(b[0]);
  EXPECT_EQ(order, (std::vector<Vertex>{0, 2, 4, 1, 3}));
}

// Agreement with the path-counting oracle on every graph with 5 vertices.
TEST(Profile, MatchesBruteForceOnAllSmallGraphs) {
  const std::size_t n = 5;
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      pairs.emplace_back(i, j);
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1)
        edges.push_back(pairs[b]);
    const Graph g(n, edges);
    const auto p = cactus_profile(g);
    ASSERT_EQ(p.is_cactus, oracle::is_cactus(g)) << to_edge_list(g);
    if (p.is_cactus) {
      EXPECT_EQ(p.k, g.size() + 1 - n);
      std::size_t block_edges = 0;
      for (const auto &blk : p.blocks)
        block_edges += blk.edges.size();
      EXPECT_EQ(block_edges, g.size());
    }
  }
}
