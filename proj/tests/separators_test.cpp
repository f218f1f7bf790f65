#include <gtest/gtest.h>

#include <optional>

#include "sepdraw/separators.hpp"

using namespace sepdraw;

namespace {

// Minimum separator size by trying every labelling of V into (S, V1, V2).
std::optional<std::size_t> brute_min_separator(const Graph& g, Ratio r, std::optional<Ratio> edge_r) {
  const std::size_t n = g.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::optional<std::size_t> best;
  std::vector<int> lab(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code, s = 0, a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      lab[i] = static_cast<int>(c % 3);
      c /= 3;
      s += lab[i] == 0;
      a += lab[i] == 1;
      b += lab[i] == 2;
    }
    if (best && s >= *best) continue;
    const auto nn = static_cast<std::int64_t>(n);
    if (!r.admits(static_cast<std::int64_t>(a), nn) || !r.admits(static_cast<std::int64_t>(b), nn)) continue;
    bool ok = true;
    std::int64_t ea = 0, eb = 0;
    for (const auto& e : g.edges()) {
      const int x = lab[*g.index_of(e.u)], y = lab[*g.index_of(e.v)];
      if ((x == 1 && y == 2) || (x == 2 && y == 1)) ok = false;
      ea += x == 1 && y == 1;
      eb += x == 2 && y == 2;
    }
    if (!ok) continue;
    const auto m = static_cast<std::int64_t>(g.size());
    if (edge_r && (!edge_r->admits(ea, m) || !edge_r->admits(eb, m))) continue;
    best = s;
  }
  return best;
}

SeparatorOptions with(SeparatorBackend b, std::uint64_t seed = 0) {
  SeparatorOptions o;
  o.backend = b;
  o.seed = seed;
  return o;
}

}  // namespace

TEST(BalancedSeparator, PathOfFive) {
  const auto res = balanced_separator(generators::path(5), Ratio(2, 3));
  EXPECT_EQ(res.separator, (std::vector<VertexId>{2}));
  EXPECT_EQ(res.part1, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(res.part2, (std::vector<VertexId>{3, 4}));
  EXPECT_TRUE(verify_separator(generators::path(5), res).empty());
}

TEST(BalancedSeparator, CompleteGraphOnFourNeedsTwo) {
  const auto k4 = generators::complete(4);
  // frozen from exhaustive enumeration of all 81 labellings
  ASSERT_EQ(brute_min_separator(k4, Ratio(2, 3), std::nullopt), 2u);
  EXPECT_EQ(balanced_separator(k4, Ratio(2, 3)).size(), 2u);
}

TEST(BalancedSeparator, EdgelessSplitsEvenly) {
  const auto res = balanced_separator(generators::empty(6), Ratio(2, 3));
  EXPECT_TRUE(res.separator.empty());
  EXPECT_EQ(res.part1.size(), 3u);
  EXPECT_EQ(res.part2.size(), 3u);
}

TEST(BalancedSeparator, RejectsRatioOutsideRange) {
  EXPECT_THROW(balanced_separator(generators::path(4), Ratio(1, 3)), InvalidInput);
  EXPECT_THROW(balanced_separator(generators::path(4), Ratio(1, 1)), InvalidInput);
}

TEST(BalancedSeparator, BudgetTooSmallIsInfeasible) {
  SeparatorOptions o;
  o.budget = 1;
  EXPECT_THROW(balanced_separator(generators::complete(6), Ratio(1, 2), o), Infeasible);
}

TEST(BalancedSeparator, ExactMatchesEnumerationAndBoundsHeuristic) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto n = 3 + seed % 8;
    const auto g = generators::gnp(n, 0.2 + 0.1 * static_cast<double>(seed % 7), seed);
    const auto expected = brute_min_separator(g, Ratio(2, 3), std::nullopt);
    ASSERT_TRUE(expected.has_value());
    const auto exact = balanced_separator(g, Ratio(2, 3), with(SeparatorBackend::exact));
    EXPECT_EQ(exact.size(), *expected) << "seed " << seed;
    const auto heur = balanced_separator(g, Ratio(2, 3), with(SeparatorBackend::heuristic, seed));
    EXPECT_GE(heur.size(), *expected);
    EXPECT_TRUE(verify_separator(g, heur).empty());
  }
}

TEST(BalancedSeparator, HeuristicIsDeterministicPerSeed) {
  const auto g = generators::gnp(60, 0.08, 3);
  const auto a = balanced_separator(g, Ratio(2, 3), with(SeparatorBackend::heuristic, 17));
  const auto b = balanced_separator(g, Ratio(2, 3), with(SeparatorBackend::heuristic, 17));
  EXPECT_EQ(a.separator, b.separator);
  EXPECT_EQ(a.part1, b.part1);
}

TEST(BalancedSeparator, GridHeuristicIsSmall) {
  const auto g = generators::grid(10, 10);
  const auto res = balanced_separator(g, Ratio(2, 3));
  EXPECT_EQ(res.backend, "heuristic");
  EXPECT_TRUE(verify_separator(g, res).empty());
  EXPECT_LE(res.size(), 12u);
}

TEST(EdgeBalancedSeparator, AuxiliaryCount) {
  EXPECT_EQ(aux_vertices_per_edge(Ratio(3, 4)), 16);
  EXPECT_EQ(aux_vertices_per_edge(Ratio(4, 5)), 10);
  EXPECT_THROW(aux_vertices_per_edge(Ratio(2, 3)), InvalidInput);
  // smallest such t, checked against the defining inequality directly
  for (auto r : {Ratio(3, 4), Ratio(4, 5), Ratio(7, 10), Ratio(9, 10)}) {
    const auto t = aux_vertices_per_edge(r);
    EXPECT_TRUE(Ratio(2, 3) * Ratio(t + 2, t) <= r);
    EXPECT_FALSE(Ratio(2, 3) * Ratio(t + 1, t - 1) <= r);
  }
}

TEST(EdgeBalancedSeparator, TwoTriangles) {
  const auto g = generators::disjoint_union(generators::complete(3), generators::complete(3));
  const auto res = edge_balanced_separator(g, Ratio(3, 4));
  EXPECT_TRUE(res.separator.empty());
  EXPECT_EQ(res.part1_edges, 3u);
  EXPECT_EQ(res.part2_edges, 3u);
  EXPECT_EQ(res.aux_per_edge, 16);
}

TEST(EdgeBalancedSeparator, CompleteGraphOnFour) {
  const auto k4 = generators::complete(4);
  const auto res = edge_balanced_separator(k4, Ratio(3, 4));
  EXPECT_TRUE(verify_separator(k4, res).empty());
  EXPECT_LE(res.part1_edges, 4u);
  EXPECT_LE(res.part2_edges, 4u);
  EXPECT_TRUE(edge_balance_chain_holds(res));
}

TEST(EdgeBalancedSeparator, IsolatedVerticesGoToSmallerPart) {
  const Graph g(7, {{0, 1}, {1, 2}, {3, 4}});
  const auto res = edge_balanced_separator(g, Ratio(3, 4));
  EXPECT_TRUE(verify_separator(g, res).empty());
  EXPECT_EQ(res.part1.size() + res.part2.size() + res.separator.size(), 7u);
}

TEST(EdgeBalancedSeparator, RandomGraphsSatisfyChain) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = generators::gnp(4 + seed % 9, 0.5, seed);
    const auto res = edge_balanced_separator(g, Ratio(3, 4), with(SeparatorBackend::automatic, seed));
    EXPECT_TRUE(verify_separator(g, res).empty()) << "seed " << seed;
    EXPECT_TRUE(edge_balance_chain_holds(res)) << "seed " << seed;
  }
}

TEST(CombinedSeparator, Epsilon) {
  EXPECT_EQ(combined_epsilon(Ratio(4, 5)), Ratio(1, 40));
  EXPECT_EQ(combined_epsilon(Ratio(9, 10)), Ratio(1, 24));
  EXPECT_THROW(combined_separator(generators::path(4), Ratio(3, 4)), InvalidInput);
}

TEST(CombinedSeparator, TwoDisjointCompleteGraphs) {
  const auto g = generators::disjoint_union(generators::complete(4), generators::complete(4));
  const auto res = combined_separator(g, Ratio(4, 5));
  EXPECT_TRUE(res.separator.empty());
  EXPECT_EQ(res.branch, "first");
  EXPECT_TRUE(verify_separator(g, res).empty());
}

TEST(CombinedSeparator, RandomGraphsSatisfyBothBalances) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = generators::gnp(12, 0.15 + 0.1 * static_cast<double>(seed % 6), seed);
    const auto res = combined_separator(g, Ratio(4, 5), with(SeparatorBackend::automatic, seed));
    EXPECT_TRUE(verify_separator(g, res).empty()) << "seed " << seed;
    ASSERT_TRUE(res.balance_r && res.edge_balance_r);
    EXPECT_EQ(*res.balance_r, Ratio(2, 3));
    EXPECT_EQ(*res.edge_balance_r, Ratio(4, 5));
  }
}

TEST(VerifySeparator, DetectsBrokenResults) {
  const auto g = generators::path(4);
  SeparatorResult r;
  r.part1 = {0, 1};
  r.part2 = {2, 3};
  r.total_vertices = 4;
  r.total_edges = 3;
  r.part1_edges = 1;
  r.part2_edges = 1;
  EXPECT_FALSE(verify_separator(g, r).empty());
  r.separator = {1};
  r.part1 = {0};
  r.part1_edges = 0;
  EXPECT_TRUE(verify_separator(g, r).empty());
  r.balance_r = Ratio(1, 2);
  EXPECT_TRUE(verify_separator(g, r).empty());
  r.part2.push_back(9);
  EXPECT_FALSE(verify_separator(g, r).empty());
}
