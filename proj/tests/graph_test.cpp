#include <gtest/gtest.h>

#include <algorithm>

#include "sepdraw/graph.hpp"
#include "sepdraw/ratio.hpp"
#include "test_support.hpp"

using namespace sepdraw;

TEST(Graph, RejectsSelfLoopsParallelEdgesAndUnknownEndpoints) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 5}}), InvalidInput);
  EXPECT_THROW(Graph(std::vector<VertexId>{1, 1}, {}), InvalidInput);
}

TEST(Graph, EdgesAreNormalizedAndSorted) {
  Graph g(4, {{3, 1}, {2, 0}, {1, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(0, 2));
  EXPECT_EQ(g.edges()[2], Edge(1, 3));
  EXPECT_EQ(g.neighbors(1), (std::vector<VertexId>{0, 3}));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
}

TEST(Potentials, SumOfSquaredDegrees) {
  EXPECT_EQ(ssqd(generators::empty(0)), 0);
  EXPECT_EQ(ssqd(generators::path(3)), 6);
  EXPECT_EQ(ssqd(generators::complete(4)), 36);
}

TEST(Potentials, DegreeSharingPairs) {
  EXPECT_EQ(bds(generators::path(3)), 1);
  EXPECT_EQ(bds(generators::complete(4)), 12);
  EXPECT_EQ(bds(generators::star(5)), 10);
}

TEST(Potentials, TwiceSharingPairsAtMostSquaredDegrees) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = generators::gnp(3 + seed % 15, 0.1 + 0.8 * ((seed * 7) % 10) / 10.0, seed);
    EXPECT_LE(2 * bds(g), ssqd(g));
  }
}

TEST(Potentials, InvariantUnderRelabelling) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = generators::gnp(10, 0.4, seed);
    std::vector<VertexId> perm(g.order());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<VertexId>(i);
    Rng rng(seed + 1000);
    rng.shuffle(perm);
    std::vector<Edge> relabelled;
    for (const auto& e : g.edges()) relabelled.emplace_back(perm[e.u], perm[e.v]);
    const Graph h(g.order(), relabelled);
    EXPECT_EQ(ssqd(g), ssqd(h));
    EXPECT_EQ(bds(g), bds(h));
  }
}

TEST(Potentials, SharingPairsSubadditiveOverVertexPartitions) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = generators::gnp(12, 0.35, seed);
    Rng rng(mix_seed(seed, 1));
    const std::size_t k = 2 + rng.below(4);
    std::vector<std::vector<VertexId>> parts(k);
    for (auto v : g.vertices()) parts[rng.below(k)].push_back(v);
    std::int64_t total = 0;
    for (const auto& p : parts) total += bds(induced_subgraph(g, p));
    EXPECT_LE(total, bds(g));
  }
}

TEST(InducedSubgraph, Examples) {
  const auto k4 = generators::complete(4);
  const auto pair = induced_subgraph(k4, std::vector<VertexId>{1, 3});
  EXPECT_EQ(pair.order(), 2u);
  ASSERT_EQ(pair.size(), 1u);
  EXPECT_EQ(pair.edges()[0], Edge(1, 3));

  const auto g = generators::gnp(9, 0.5, 3);
  EXPECT_EQ(induced_subgraph(g, g.vertices()), g);

  const auto c5 = generators::cycle(5);
  const auto p3 = induced_subgraph(c5, std::vector<VertexId>{1, 2, 3});
  EXPECT_EQ(p3.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));

  EXPECT_THROW(induced_subgraph(c5, std::vector<VertexId>{1, 9}), InvalidInput);
}

TEST(Components, OrderedBySmallestId) {
  const Graph g(6, {{4, 5}, {0, 3}, {1, 2}});
  const auto cc = connected_components(g);
  ASSERT_EQ(cc.size(), 3u);
  EXPECT_EQ(cc[0], (std::vector<VertexId>{0, 3}));
  EXPECT_EQ(cc[1], (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(cc[2], (std::vector<VertexId>{4, 5}));
}

TEST(Generators, Shapes) {
  EXPECT_EQ(generators::grid(3, 4).size(), 17u);
  EXPECT_EQ(generators::complete_bipartite(2, 3).size(), 6u);
  EXPECT_EQ(generators::cycle(5).size(), 5u);
  EXPECT_THROW(generators::cycle(2), InvalidInput);
  EXPECT_EQ(generators::gnp(20, 0.3, 42), generators::gnp(20, 0.3, 42));
  const auto u = generators::disjoint_union(generators::complete(3), generators::complete(3));
  EXPECT_EQ(u.order(), 6u);
  EXPECT_EQ(connected_components(u).size(), 2u);
}

TEST(Ratio, ParsingAndComparison) {
  EXPECT_EQ(parse_ratio("3/4"), Ratio(3, 4));
  EXPECT_EQ(parse_ratio("0.8"), Ratio(4, 5));
  EXPECT_EQ(parse_ratio("1"), Ratio(1, 1));
  EXPECT_THROW(parse_ratio("1/0"), InvalidInput);
  EXPECT_THROW(parse_ratio("x"), InvalidInput);
  EXPECT_TRUE(Ratio(2, 3) < Ratio(3, 4));
  EXPECT_TRUE(Ratio(3, 4).admits(9, 12));
  EXPECT_FALSE(Ratio(3, 4).admits(10, 12));
  EXPECT_EQ(Ratio(2, 3).floor_of(10), 6);
}
