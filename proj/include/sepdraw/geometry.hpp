#pragma once

// Exact planar predicates over integer coordinates. Every decision is made with
// 128-bit integer determinants; nothing is rounded.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sepdraw/error.hpp"

namespace sepdraw {

/// Inputs are restricted to |coordinate| <= 2^30.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;
};

using PointSet = std::vector<Point>;

inline void check_coordinate_range(const Point& p) {
  if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
      p.y < -kMaxCoordinate) {
    throw InvalidInput("coordinate out of range (|c| <= 2^30): (" + std::to_string(p.x) + "," +
                       std::to_string(p.y) + ")");
  }
}

inline __int128 cross(const Point& p, const Point& q, const Point& r) {
  const __int128 ax = q.x - p.x, ay = q.y - p.y;
  const __int128 bx = r.x - p.x, by = r.y - p.y;
  return ax * by - ay * bx;
}

/// Sign of (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orientation(const Point& p, const Point& q, const Point& r) {
  const auto c = cross(p, q, r);
  return (c > 0) - (c < 0);
}

/// r lies on the closed segment pq (p != q or r == p).
inline bool on_segment(const Point& p, const Point& q, const Point& r) {
  if (orientation(p, q, r) != 0) return false;
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

/// Closed segments ab and cd share at least one point.
inline bool segments_intersect_closed(const Point& a, const Point& b, const Point& c,
                                      const Point& d) {
  const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b) || (o1 * o2 < 0 && o3 * o4 < 0);
}

/// True iff the open segments a1a2 and b1b2 meet in exactly one interior point.
///
/// Segments with a common endpoint never cross. A configuration where an
/// endpoint lies on the other segment, or the segments overlap collinearly,
/// is rejected: it means the input is not in general position.
inline bool segments_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  const int o1 = orientation(a1, a2, b1), o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1), o4 = orientation(b1, b2, a2);
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return o1 != o2 && o3 != o4;
  if (on_segment(a1, a2, b1) || on_segment(a1, a2, b2) || on_segment(b1, b2, a1) ||
      on_segment(b1, b2, a2)) {
    throw InvalidInput("degenerate segment pair: an endpoint touches the other segment");
  }
  return false;
}

struct CollinearTriple {
  std::size_t i, j, l;
  friend auto operator<=>(const CollinearTriple&, const CollinearTriple&) = default;
};

/// Collinear (or coincident) index triples i < j < l, at most `limit` of them.
///
/// For each i the directions to all later points are reduced and sorted, so
/// equal directions expose collinear triples in O(n^2 log n).
inline std::vector<CollinearTriple> collinear_triples(std::span<const Point> ps,
                                                      std::size_t limit = SIZE_MAX) {
  std::vector<CollinearTriple> out;
  struct Dir {
    std::int64_t dx, dy;
    std::size_t j;
  };
  std::vector<Dir> dirs;
  for (std::size_t i = 0; i < ps.size() && out.size() < limit; ++i) {
    dirs.clear();
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      std::int64_t dx = ps[j].x - ps[i].x, dy = ps[j].y - ps[i].y;
      const std::int64_t g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
      if (g > 0) {
        dx /= g;
        dy /= g;
      }
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({dx, dy, j});
    }
    std::sort(dirs.begin(), dirs.end(), [](const Dir& a, const Dir& b) {
      return a.dx != b.dx ? a.dx < b.dx : (a.dy != b.dy ? a.dy < b.dy : a.j < b.j);
    });
    for (std::size_t s = 0; s < dirs.size();) {
      std::size_t e = s;
      while (e < dirs.size() && dirs[e].dx == dirs[s].dx && dirs[e].dy == dirs[s].dy) ++e;
      // coincident points (direction 0,0) are collinear with everything
      const bool coincident = dirs[s].dx == 0 && dirs[s].dy == 0;
      for (std::size_t a = s; a < e && out.size() < limit; ++a) {
        for (std::size_t b = a + 1; b < e && out.size() < limit; ++b) {
          out.push_back({i, dirs[a].j, dirs[b].j});
        }
        if (coincident) {
          for (std::size_t b = 0; b < dirs.size() && out.size() < limit; ++b) {
            if (b >= s && b < e) continue;
            const auto j = std::min(dirs[a].j, dirs[b].j), l = std::max(dirs[a].j, dirs[b].j);
            out.push_back({i, j, l});
          }
        }
      }
      s = e;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > limit) out.resize(limit);
  return out;
}

/// No three points collinear and no two coincide.
inline bool general_position(std::span<const Point> ps) {
  std::vector<Point> sorted(ps.begin(), ps.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return collinear_triples(ps, 1).empty();
}

/// Orientation signs of every index triple i < j < l, stored in colex rank order.
class OrderType {
 public:
  OrderType() = default;

  explicit OrderType(std::span<const Point> ps) : n_(ps.size()) {
    signs_.reserve(n_ < 3 ? 0 : n_ * (n_ - 1) * (n_ - 2) / 6);
    for (std::size_t l = 2; l < n_; ++l) {
      for (std::size_t j = 1; j < l; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          const int s = orientation(ps[i], ps[j], ps[l]);
          if (s == 0) {
            throw InvalidInput("collinear triple (" + std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(l) + ")");
          }
          signs_.push_back(static_cast<std::int8_t>(s));
        }
      }
    }
  }

  std::size_t point_count() const { return n_; }
  std::size_t triple_count() const { return signs_.size(); }

  /// Sign of the triple (i, j, l); arguments must satisfy i < j < l.
  int sign(std::size_t i, std::size_t j, std::size_t l) const {
    return signs_[l * (l - 1) * (l - 2) / 6 + j * (j - 1) / 2 + i];
  }

  friend bool operator==(const OrderType&, const OrderType&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> signs_;
};

inline OrderType order_type(std::span<const Point> ps) { return OrderType(ps); }

/// Strict convex hull, counterclockwise, starting at the lexicographically
/// smallest point. One or two points are returned as-is (deduplicated).
inline std::vector<Point> convex_hull(std::span<const Point> input) {
  std::vector<Point> ps(input.begin(), input.end());
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  if (ps.size() <= 2) return ps;
  std::vector<Point> hull(2 * ps.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], ps[i]) <= 0) --k;
    hull[k++] = ps[i];
  }
  for (std::size_t i = ps.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orientation(hull[k - 2], hull[k - 1], ps[i]) <= 0) --k;
    hull[k++] = ps[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

/// p lies in the closed convex polygon `hull` (counterclockwise, as from convex_hull).
inline bool in_hull(std::span<const Point> hull, const Point& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (orientation(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  }
  return true;
}

/// Two closed convex polygons meet.
inline bool hulls_intersect(std::span<const Point> a, std::span<const Point> b) {
  for (const auto& p : a)
    if (in_hull(b, p)) return true;
  for (const auto& p : b)
    if (in_hull(a, p)) return true;
  if (a.size() < 2 || b.size() < 2) return false;
  const std::size_t ea = a.size() == 2 ? 1 : a.size();
  const std::size_t eb = b.size() == 2 ? 1 : b.size();
  for (std::size_t i = 0; i < ea; ++i) {
    for (std::size_t j = 0; j < eb; ++j) {
      if (segments_intersect_closed(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()])) {
        return true;
      }
    }
  }
  return false;
}

/// Convex hulls of the parts are pairwise disjoint (closed hulls; touching counts as meeting).
inline bool hulls_pairwise_disjoint(std::span<const PointSet> parts) {
  std::vector<std::vector<Point>> hulls;
  hulls.reserve(parts.size());
  for (const auto& p : parts) hulls.push_back(convex_hull(p));
  for (std::size_t i = 0; i < hulls.size(); ++i)
    for (std::size_t j = i + 1; j < hulls.size(); ++j)
      if (hulls_intersect(hulls[i], hulls[j])) return false;
  return true;
}

/// The line through p and q meets the convex hull of `part`.
inline bool line_meets_hull(const Point& p, const Point& q, std::span<const Point> part) {
  bool neg = false, pos = false;
  for (const auto& r : part) {
    const int s = orientation(p, q, r);
    if (s == 0) return true;
    (s < 0 ? neg : pos) = true;
    if (neg && pos) return true;
  }
  return false;
}

/// The line through `line[0]`, `line[1]` meets at most two of the part hulls.
inline bool line_stabs_at_most_two(std::span<const PointSet> parts, const std::array<Point, 2>& line) {
  if (line[0] == line[1]) throw InvalidInput("line needs two distinct points");
  int met = 0;
  for (const auto& part : parts) {
    if (line_meets_hull(line[0], line[1], part) && ++met > 2) return false;
  }
  return true;
}

}  // namespace sepdraw
