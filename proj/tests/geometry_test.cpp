#include <gtest/gtest.h>

#include "sepdraw/geometry.hpp"
#include "sepdraw/random.hpp"
#include "test_support.hpp"

using namespace sepdraw;
using sepdraw::testing::reference_cross;
using sepdraw::testing::reference_orientation;

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), -1);
}

TEST(Orientation, ExactAtCoordinateLimit) {
  const auto L = kMaxCoordinate;
  EXPECT_EQ(orientation({-L, -L}, {L, L}, {L - 1, L}), 1);
  EXPECT_EQ(orientation({-L, -L}, {L, L}, {L, L - 1}), -1);
  EXPECT_EQ(orientation({-L, -L}, {0, 0}, {L, L}), 0);
  EXPECT_THROW(check_coordinate_range({L + 1, 0}), InvalidInput);
}

TEST(Orientation, AntisymmetricAndMatchesReference) {
  Rng rng(7);
  for (int it = 0; it < 2000; ++it) {
    Point p{rng.between(-50, 50), rng.between(-50, 50)};
    Point q{rng.between(-50, 50), rng.between(-50, 50)};
    Point r{rng.between(-50, 50), rng.between(-50, 50)};
    const int o = orientation(p, q, r);
    EXPECT_EQ(o, reference_orientation(p, q, r));
    EXPECT_EQ(orientation(q, p, r), -o);
    EXPECT_EQ(orientation(p, r, q), -o);
    EXPECT_EQ(orientation(r, q, p), -o);
  }
}

TEST(GeneralPosition, Examples) {
  EXPECT_TRUE(general_position(PointSet{{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_FALSE(general_position(PointSet{{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_TRUE(general_position(PointSet{{0, 0}, {1, 0}}));
  EXPECT_TRUE(general_position(PointSet{}));
  EXPECT_FALSE(general_position(PointSet{{3, 3}, {3, 3}}));
}

TEST(GeneralPosition, TriplesAgreeWithCubicScan) {
  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    PointSet ps;
    const auto n = 3 + rng.below(12);
    for (std::size_t i = 0; i < n; ++i) ps.push_back({rng.between(0, 6), rng.between(0, 6)});
    std::vector<CollinearTriple> expected;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
          if (reference_orientation(ps[i], ps[j], ps[l]) == 0) expected.push_back({i, j, l});
    EXPECT_EQ(collinear_triples(ps), expected);
  }
}

TEST(SegmentsCross, Examples) {
  EXPECT_TRUE(segments_cross({0, 0}, {1, 1}, {0, 1}, {1, 0}));
  EXPECT_FALSE(segments_cross({0, 0}, {1, 0}, {1, 0}, {1, 1}));
  EXPECT_FALSE(segments_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  EXPECT_THROW(segments_cross({0, 0}, {4, 0}, {2, 0}, {2, 5}), InvalidInput);
  EXPECT_THROW(segments_cross({0, 0}, {4, 0}, {2, 0}, {6, 0}), InvalidInput);
}

TEST(SegmentsCross, SymmetricAndMatchesReference) {
  Rng rng(5);
  int crossings = 0;
  for (int it = 0; it < 3000; ++it) {
    Point a{rng.between(-30, 30), rng.between(-30, 30)}, b{rng.between(-30, 30), rng.between(-30, 30)};
    Point c{rng.between(-30, 30), rng.between(-30, 30)}, d{rng.between(-30, 30), rng.between(-30, 30)};
    if (!general_position(PointSet{a, b, c, d})) continue;
    const bool x = segments_cross(a, b, c, d);
    EXPECT_EQ(x, reference_cross(a, b, c, d));
    EXPECT_EQ(x, segments_cross(c, d, a, b));
    EXPECT_EQ(x, segments_cross(b, a, c, d));
    EXPECT_EQ(x, segments_cross(a, b, d, c));
    crossings += x;
  }
  EXPECT_GT(crossings, 100);
}

TEST(OrderType, Examples) {
  const PointSet tri{{0, 0}, {1, 0}, {0, 1}};
  const auto ot = order_type(tri);
  EXPECT_EQ(ot.triple_count(), 1u);
  EXPECT_EQ(ot.sign(0, 1, 2), 1);

  const PointSet square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto sq = order_type(square);
  EXPECT_EQ(sq.triple_count(), 4u);
  EXPECT_EQ(sq.sign(0, 1, 2), 1);
  EXPECT_EQ(sq.sign(0, 1, 3), 1);
  EXPECT_EQ(sq.sign(0, 2, 3), 1);
  EXPECT_EQ(sq.sign(1, 2, 3), 1);

  // frozen from four direct determinant evaluations
  const PointSet inner{{0, 0}, {4, 0}, {2, 3}, {2, 1}};
  const auto in = order_type(inner);
  EXPECT_EQ(in.sign(0, 1, 2), 1);
  EXPECT_EQ(in.sign(0, 1, 3), 1);
  EXPECT_EQ(in.sign(0, 2, 3), -1);
  EXPECT_EQ(in.sign(1, 2, 3), 1);

  EXPECT_THROW(order_type(PointSet{{0, 0}, {1, 1}, {2, 2}}), InvalidInput);
}

TEST(OrderType, AffineInvarianceAndMirror) {
  Rng rng(21);
  for (int it = 0; it < 40; ++it) {
    PointSet ps;
    while (ps.size() < 8) {
      ps.push_back({rng.between(-1000, 1000), rng.between(-1000, 1000)});
      if (!general_position(ps)) ps.pop_back();
    }
    const auto base = order_type(ps);
    const std::int64_t s = 1 + static_cast<std::int64_t>(rng.below(7));
    const std::int64_t tx = rng.between(-500, 500), ty = rng.between(-500, 500);
    PointSet moved, mirrored;
    for (const auto& p : ps) {
      moved.push_back({s * p.x + tx, s * p.y + ty});
      mirrored.push_back({-p.x, p.y});
    }
    EXPECT_EQ(order_type(moved), base);
    const auto mir = order_type(mirrored);
    for (std::size_t l = 2; l < ps.size(); ++l)
      for (std::size_t j = 1; j < l; ++j)
        for (std::size_t i = 0; i < j; ++i) EXPECT_EQ(mir.sign(i, j, l), -base.sign(i, j, l));
  }
}

TEST(Hulls, ConvexHullCounterclockwise) {
  const PointSet ps{{0, 0}, {4, 0}, {2, 1}, {4, 4}, {0, 4}, {2, 2}};
  const auto h = convex_hull(ps);
  EXPECT_EQ(h, (std::vector<Point>{{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
  EXPECT_TRUE(in_hull(h, {2, 2}));
  EXPECT_TRUE(in_hull(h, {4, 2}));
  EXPECT_FALSE(in_hull(h, {5, 2}));
}

TEST(Hulls, PairwiseDisjointExamples) {
  EXPECT_TRUE(hulls_pairwise_disjoint(std::vector<PointSet>{{{0, 0}}, {{10, 0}}, {{5, 10}}}));
  EXPECT_FALSE(hulls_pairwise_disjoint(std::vector<PointSet>{{{0, 0}, {3, 1}}, {{3, 1}, {7, 9}}}));
  // a small triangle strictly inside a large one
  EXPECT_FALSE(hulls_pairwise_disjoint(
      std::vector<PointSet>{{{0, 0}, {30, 0}, {15, 30}}, {{14, 5}, {16, 5}, {15, 8}}}));
  // crossing segments without shared vertices
  EXPECT_FALSE(hulls_pairwise_disjoint(std::vector<PointSet>{{{0, 0}, {10, 10}}, {{0, 10}, {10, 0}}}));
}

TEST(LineStabbing, Examples) {
  const std::vector<PointSet> one{{{0, 0}, {1, 5}, {3, 2}}};
  EXPECT_TRUE(line_stabs_at_most_two(one, {Point{-100, 1}, Point{100, 2}}));

  const std::vector<PointSet> corners{{{0, 0}, {2, 1}}, {{40, 0}, {41, 2}}, {{20, 40}, {22, 41}}};
  EXPECT_TRUE(line_stabs_at_most_two(corners, {Point{0, 0}, Point{40, 0}}));

  const std::vector<PointSet> row{{{0, -1}, {1, 1}}, {{20, -1}, {21, 1}}, {{40, -1}, {41, 1}}};
  EXPECT_FALSE(line_stabs_at_most_two(row, {Point{-5, 0}, Point{50, 0}}));
  EXPECT_THROW(line_stabs_at_most_two(row, {Point{1, 1}, Point{1, 1}}), InvalidInput);
}
