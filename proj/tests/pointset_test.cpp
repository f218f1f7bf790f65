#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "sepdraw/pointset_embed.hpp"

using namespace sepdraw;

namespace {

// Every transversal triple, independent of the library's scan.
bool brute_same_type(const std::vector<PointSet>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (std::size_t l = j + 1; l < parts.size(); ++l) {
        int seen = 0;
        for (const auto& a : parts[i])
          for (const auto& b : parts[j])
            for (const auto& c : parts[l]) {
              const auto v = (static_cast<long double>(b.x) - a.x) * (static_cast<long double>(c.y) - a.y) -
                             (static_cast<long double>(b.y) - a.y) * (static_cast<long double>(c.x) - a.x);
              const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
              if (s == 0 || (seen != 0 && s != seen)) return false;
              seen = s;
            }
      }
  return true;
}

bool every_line_stabs_at_most_two(const std::vector<PointSet>& parts) {
  std::vector<Point> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (!line_stabs_at_most_two(parts, {all[a], all[b]})) return false;
  return true;
}

void expect_verified(const SameTypeFamily& fam, std::size_t k) {
  ASSERT_EQ(fam.parts.size(), k);
  for (const auto& p : fam.parts) EXPECT_EQ(p.size(), fam.part_size);
  EXPECT_TRUE(same_type_check(fam.parts).same_type);
  EXPECT_TRUE(brute_same_type(fam.parts));
  EXPECT_TRUE(hulls_pairwise_disjoint(fam.parts));
  EXPECT_TRUE(every_line_stabs_at_most_two(fam.parts));
}

}  // namespace

TEST(SameTypeCheck, ThreeSingletons) {
  const std::vector<PointSet> parts{{{0, 0}}, {{5, 1}}, {{2, 7}}};
  const auto cert = same_type_check(parts);
  EXPECT_TRUE(cert.same_type);
  ASSERT_EQ(cert.signs.size(), 1u);
  EXPECT_EQ(cert.signs[0].sign, 1);
}

TEST(SameTypeCheck, SeparatedPairs) {
  const std::vector<PointSet> parts{{{0, 0}, {0, 2}}, {{20, 0}, {20, 2}}, {{10, 20}, {10, 22}}};
  const auto cert = same_type_check(parts);
  EXPECT_TRUE(cert.same_type);
  ASSERT_EQ(cert.signs.size(), 1u);
  EXPECT_EQ(cert.signs[0].sign, 1);  // frozen: all 8 transversals turn left
  EXPECT_TRUE(brute_same_type(parts));
}

TEST(SameTypeCheck, ThirdPartBetweenTheOthers) {
  const std::vector<PointSet> parts{{{0, 0}, {0, 2}}, {{20, 0}, {20, 2}}, {{10, -1}, {10, 3}}};
  const auto cert = same_type_check(parts);
  EXPECT_FALSE(cert.same_type);
  ASSERT_TRUE(cert.positive && cert.negative);
  const auto& p = *cert.positive;
  const auto& n = *cert.negative;
  EXPECT_EQ(orientation(p[0], p[1], p[2]), 1);
  EXPECT_EQ(orientation(n[0], n[1], n[2]), -1);
  EXPECT_FALSE(brute_same_type(parts));
}

TEST(SameTypeCheck, RejectsDegenerateInput) {
  const std::vector<PointSet> collinear{{{0, 0}}, {{1, 1}}, {{2, 2}}};
  EXPECT_THROW(same_type_check(collinear), InvalidInput);
  const std::vector<PointSet> shared{{{0, 0}}, {{0, 0}}, {{2, 5}}};
  EXPECT_THROW(same_type_check(shared), InvalidInput);
}

TEST(SameTypeCheck, HullScanAgreesWithExhaustiveScan) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto pts = drawings::random_points(15, seed, 1000);
    std::vector<PointSet> parts(3);
    for (std::size_t i = 0; i < pts.size(); ++i) parts[i % 3].push_back(pts[i]);
    // also try tight clusters so that both answers occur
    if (seed % 2 == 0) {
      std::sort(parts[0].begin(), parts[0].end());
      parts[0].resize(2);
    }
    EXPECT_EQ(same_type_check(parts).same_type, same_type_check_hulls(parts).same_type) << "seed " << seed;
  }
}

TEST(SameTypeSubsets, SeparatedClustersComeBackWhole) {
  const PointSet a{{0, 0}, {3, 1}, {1, 4}, {5, 3}};
  const PointSet b{{1000, 0}, {1004, 2}, {1001, 5}, {1006, 6}};
  const PointSet c{{500, 900}, {503, 902}, {498, 905}, {502, 909}};
  PointSet all = a;
  all.insert(all.end(), b.begin(), b.end());
  all.insert(all.end(), c.begin(), c.end());
  const auto fam = same_type_disjoint_subsets(all, 3, 4);
  EXPECT_FALSE(fam.shortfall);
  expect_verified(fam, 3);
  std::vector<PointSet> got = fam.parts, want{a, b, c};
  for (auto& p : got) std::sort(p.begin(), p.end());
  for (auto& p : want) std::sort(p.begin(), p.end());
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(SameTypeSubsets, CirclePointsGiveArcs) {
  const auto circle = drawings::regular_polygon(12);
  const auto fam = same_type_disjoint_subsets(circle, 3, 2);
  EXPECT_EQ(fam.part_size, 2u);
  expect_verified(fam, 3);
}

TEST(SameTypeSubsets, SingletonsWhenTight) {
  const PointSet three{{0, 0}, {100, 1}, {50, 2}};
  const auto fam = same_type_disjoint_subsets(three, 3, 1);
  EXPECT_EQ(fam.part_size, 1u);
  expect_verified(fam, 3);
}

TEST(SameTypeSubsets, RejectsBadRequests) {
  const PointSet pts{{0, 0}, {1, 5}, {7, 2}};
  EXPECT_THROW(same_type_disjoint_subsets(pts, 3, 2), InvalidInput);
  EXPECT_THROW(same_type_disjoint_subsets(pts, 1, 1), InvalidInput);
  EXPECT_THROW(same_type_disjoint_subsets(pts, 3, 0), InvalidInput);
  const PointSet line{{0, 0}, {1, 1}, {2, 2}, {3, 5}};
  EXPECT_THROW(same_type_disjoint_subsets(line, 3, 1), InvalidInput);
}

TEST(SameTypeSubsets, RandomSetsVerifyAndReportShortfall) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto pts = drawings::random_points(60, seed, 1 << 16);
    const auto fam = same_type_disjoint_subsets(pts, 3, 20);
    expect_verified(fam, 3);
    EXPECT_EQ(fam.shortfall, fam.part_size < 20);
    EXPECT_DOUBLE_EQ(fam.fraction, static_cast<double>(fam.part_size) / 60.0);
    EXPECT_GE(fam.part_size, 1u);
  }
}

TEST(SameTypeSubsets, FourParts) {
  const auto pts = drawings::random_points(80, 7, 1 << 16);
  const auto fam = same_type_disjoint_subsets(pts, 4, 10);
  expect_verified(fam, 4);
}

TEST(Embedding, TriangleOnThreePoints) {
  const auto g = generators::complete(3);
  const PointSet s{{0, 0}, {9, 1}, {4, 7}};
  const auto r = embed_on_pointset(g, drawings::convex(g), s);
  EXPECT_EQ(r.crossings, 0);
  EXPECT_EQ(r.tree.verify(), std::vector<std::string>{});
}

TEST(Embedding, CompleteGraphOnFourConvexPoints) {
  const auto g = generators::complete(4);
  const PointSet s{{0, 0}, {10, 1}, {11, 9}, {1, 12}};
  const auto r = embed_on_pointset(g, drawings::convex(g), s);
  EXPECT_EQ(r.crossings, 1);  // every placement on 4 convex points crosses once
  EXPECT_EQ(r.ancestor_violations, 0);
}

TEST(Embedding, FailsLoudlyWithoutEnoughPoints) {
  const auto g = generators::path(5);
  const PointSet s{{0, 0}, {10, 1}, {11, 9}, {1, 12}};
  EXPECT_THROW(embed_on_pointset(g, drawings::convex(g), s), Infeasible);

  EmbedOptions strict;
  strict.direct_fallback = false;
  const auto k4 = generators::complete(4);
  try {
    embed_on_pointset(k4, drawings::convex(k4), s, strict);
    FAIL() << "expected an infeasibility report";
  } catch (const Infeasible& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("depth 1"), std::string::npos) << msg;
    EXPECT_NE(msg.find("needs at least 2 points, has 1"), std::string::npos) << msg;
  }
}

TEST(Embedding, RejectsBadInput) {
  const auto g = generators::complete(3);
  EXPECT_THROW(embed_on_pointset(g, drawings::convex(g), PointSet{{0, 0}, {1, 1}, {2, 2}}), InvalidInput);
  EmbedOptions two;
  two.k = 2;
  EXPECT_THROW(embed_on_pointset(g, drawings::convex(g), PointSet{{0, 0}, {9, 1}, {4, 7}}, two), InvalidInput);
}

TEST(Embedding, PlanarGraphOnRandomPoints) {
  const auto d = drawings::random_planar(32, 60, 3);
  const auto& g = d.graph();
  const auto pts = drawings::random_points(500, 11, 1 << 20);
  const auto r = embed_on_pointset(g, d, pts);
  // placement: injective and taken from the point set
  auto used = r.placement;
  std::sort(used.begin(), used.end());
  EXPECT_EQ(std::adjacent_find(used.begin(), used.end()), used.end());
  auto pool = pts;
  std::sort(pool.begin(), pool.end());
  for (const auto& p : used) EXPECT_TRUE(std::binary_search(pool.begin(), pool.end(), p));
  // independent all-pairs recount
  std::int64_t recount = 0;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].shares_endpoint(es[j])) continue;
      const auto [a, b] = r.drawing.segment(es[i]);
      const auto [c, e] = r.drawing.segment(es[j]);
      if (segments_cross(a, b, c, e)) ++recount;
    }
  EXPECT_EQ(r.crossings, recount);
  EXPECT_EQ(r.ancestor_violations, 0);
  EXPECT_TRUE(r.tree.verify().empty());
  EXPECT_LE(static_cast<double>(r.crossings), 50.0 * std::log(32.0) * static_cast<double>(bds(g)));
}

TEST(Embedding, DeterministicForFixedSeed) {
  const auto d = drawings::random_planar(20, 34, 9);
  const auto pts = drawings::modular_parabola_points(8000, 4);
  const auto a = embed_on_pointset(d.graph(), d, pts);
  const auto b = embed_on_pointset(d.graph(), d, pts);
  EXPECT_EQ(a.placement, b.placement);
  EXPECT_EQ(a.crossings, b.crossings);
}

TEST(Feasibility, EstimateGrowsWithDepth) {
  EXPECT_EQ(feasibility_estimate(2, 3, {}), 2u);
  const std::vector<double> f{0.1, 0.1, 0.1};
  EXPECT_GT(feasibility_estimate(30, 3, f), feasibility_estimate(9, 3, f));
  EXPECT_GE(feasibility_estimate(9, 3, f), 9u);
}
