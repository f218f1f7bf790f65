#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "sepdraw/oracles.hpp"
#include "test_support.hpp"

using namespace sepdraw;

namespace {

std::int64_t enumerate_cutwidth(const Graph& g) {
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::int64_t best = INT64_MAX;
  do {
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    std::int64_t w = 0;
    for (std::size_t gap = 1; gap < perm.size(); ++gap) {
      std::int64_t c = 0;
      for (const auto& e : g.edges())
        if ((pos[*g.index_of(e.u)] < gap) != (pos[*g.index_of(e.v)] < gap)) ++c;
      w = std::max(w, c);
    }
    best = std::min(best, w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g.order() <= 1 ? 0 : best;
}

// Three labels per vertex: separator, side 1, side 2.
std::size_t labelling_min_separator(const Graph& g, Ratio r, bool edge_mode) {
  const std::size_t n = g.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::size_t best = n;
  std::vector<int> lab(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code, sep = 0, n1 = 0, n2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      lab[i] = static_cast<int>(c % 3);
      c /= 3;
      sep += lab[i] == 0;
      n1 += lab[i] == 1;
      n2 += lab[i] == 2;
    }
    if (sep >= best) continue;
    std::int64_t e1 = 0, e2 = 0;
    bool ok = true;
    for (const auto& e : g.edges()) {
      const int a = lab[*g.index_of(e.u)], b = lab[*g.index_of(e.v)];
      if (a + b == 3 && a != 0 && b != 0) ok = false;
      if (a == 1 && b == 1) ++e1;
      if (a == 2 && b == 2) ++e2;
    }
    if (!ok) continue;
    const auto cap_v = r.floor_of(static_cast<std::int64_t>(n));
    const auto cap_e = r.floor_of(static_cast<std::int64_t>(g.size()));
    if (edge_mode ? (e1 <= cap_e && e2 <= cap_e)
                  : (static_cast<std::int64_t>(n1) <= cap_v && static_cast<std::int64_t>(n2) <= cap_v))
      best = sep;
  }
  return best;
}

Graph two_triangles_joined() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

}  // namespace

TEST(CutwidthOracle, Examples) {
  EXPECT_EQ(exact_cutwidth(generators::path(5)), 1);
  EXPECT_EQ(exact_cutwidth(generators::complete(4)), 4);
  EXPECT_EQ(exact_cutwidth(generators::cycle(4)), 2);
  EXPECT_EQ(exact_cutwidth(generators::path(1)), 0);
}

TEST(CutwidthOracle, MatchesFullEnumeration) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = generators::gnp(2 + seed % 7, 0.45, seed);
    EXPECT_EQ(exact_cutwidth(g), enumerate_cutwidth(g)) << "seed " << seed;
  }
}

TEST(CutwidthOracle, RejectsLargeGraphs) {
  EXPECT_THROW(exact_cutwidth(generators::path(19)), InvalidInput);
}

TEST(BisectionOracle, Examples) {
  EXPECT_EQ(exact_bisection_width(two_triangles_joined()), 1);
  EXPECT_EQ(exact_bisection_width(generators::complete(4)), 4);
  EXPECT_EQ(exact_bisection_width(Graph(std::size_t{6}, std::vector<Edge>{})), 0);
  EXPECT_THROW(exact_bisection_width(generators::path(1)), Infeasible);
  EXPECT_THROW(exact_bisection_width(generators::path(21)), InvalidInput);
}

TEST(BisectionOracle, NeverAboveCutwidth) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = generators::gnp(3 + seed % 6, 0.5, seed);
    EXPECT_LE(exact_bisection_width(g), exact_cutwidth(g)) << "seed " << seed;
  }
}

TEST(ConvexOracle, Examples) {
  EXPECT_EQ(exact_convex_optimum(generators::cycle(5)), 0);
  EXPECT_EQ(exact_convex_optimum(generators::complete(4)), 1);
  EXPECT_EQ(exact_convex_optimum(generators::complete(5)), 5);
  EXPECT_THROW(exact_convex_optimum(generators::path(10)), InvalidInput);
}

TEST(ConvexOracle, AtMostAnyParticularOrder) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = generators::gnp(7, 0.5, seed);
    std::vector<std::size_t> pos(g.order());
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    EXPECT_LE(exact_convex_optimum(g), sepdraw::testing::reference_interleavings(g, pos));
  }
}

TEST(SeparatorOracle, Examples) {
  EXPECT_EQ(exact_min_separator(generators::path(5), Ratio(2, 3), false).size(), 1u);
  EXPECT_EQ(exact_min_separator(generators::complete(4), Ratio(2, 3), false).size(), 2u);
  const auto two_k3 = Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(exact_min_separator(two_k3, Ratio(1, 2), false).size(), 0u);
  EXPECT_EQ(exact_min_separator(two_k3, Ratio(1, 2), true).size(), 0u);
}

TEST(SeparatorOracle, OutputPassesVerification) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = generators::gnp(4 + seed % 8, 0.4, seed);
    for (bool edge_mode : {false, true}) {
      const auto res = exact_min_separator(g, Ratio(2, 3), edge_mode);
      EXPECT_TRUE(verify_separator(g, res).empty()) << "seed " << seed;
    }
  }
}

TEST(SeparatorOracle, MatchesLabellingEnumeration) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = generators::gnp(3 + seed % 6, 0.5, seed);
    for (bool edge_mode : {false, true}) {
      for (Ratio r : {Ratio(1, 2), Ratio(2, 3), Ratio(4, 5)}) {
        EXPECT_EQ(exact_min_separator(g, r, edge_mode).size(), labelling_min_separator(g, r, edge_mode))
            << "seed " << seed << " r " << r.str() << " edge " << edge_mode;
      }
    }
  }
}

TEST(SeparatorOracle, BudgetMakesItInfeasible) {
  EXPECT_THROW(exact_min_separator(generators::complete(4), Ratio(2, 3), false, 1), Infeasible);
  EXPECT_THROW(exact_min_separator(generators::path(17), Ratio(2, 3), false), InvalidInput);
}

TEST(OracleReport, RelationIsReevaluated) {
  OracleReport rep{"k4", "cutwidth", 4, 5, Relation::at_least};
  EXPECT_TRUE(rep.pass());
  rep.pipeline_value = 3;
  EXPECT_FALSE(rep.pass());
  rep.relation = Relation::at_most;
  EXPECT_TRUE(rep.pass());
  rep.relation = Relation::equal;
  EXPECT_FALSE(rep.pass());
}
