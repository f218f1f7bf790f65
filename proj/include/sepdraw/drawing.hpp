#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sepdraw/error.hpp"
#include "sepdraw/geometry.hpp"
#include "sepdraw/graph.hpp"
#include "sepdraw/random.hpp"

namespace sepdraw {

/// A graph with every vertex mapped to a distinct integer point and every
/// edge drawn as the segment between its endpoints.
///
/// Validity: the placement is injective and no vertex point lies on a segment
/// of an edge it is not incident to. (Unit-lattice grid drawings are valid
/// even though they are not in general position.)
class StraightLineDrawing {
 public:
  StraightLineDrawing() = default;

  /// `placement[i]` is the point of the vertex with local index i.
  StraightLineDrawing(Graph graph, std::vector<Point> placement)
      : graph_(std::move(graph)), placement_(std::move(placement)) {
    validate();
  }

  const Graph& graph() const { return graph_; }
  const std::vector<Point>& placement() const { return placement_; }

  const Point& position(VertexId id) const { return placement_[graph_.checked_index(id)]; }

  std::pair<Point, Point> segment(const Edge& e) const {
    return {placement_[*graph_.index_of(e.u)], placement_[*graph_.index_of(e.v)]};
  }

  /// Drawing of `sub` (a subgraph of graph()) on the inherited points.
  StraightLineDrawing restrict_to(const Graph& sub) const {
    std::vector<Point> pts;
    pts.reserve(sub.order());
    for (auto id : sub.vertices()) pts.push_back(position(id));
    for (const auto& e : sub.edges()) {
      if (!graph_.has_edge(e.u, e.v)) throw InvalidInput("restriction target is not a subgraph");
    }
    StraightLineDrawing d;
    d.graph_ = sub;
    d.placement_ = std::move(pts);
    return d;
  }

 private:
  void validate() const {
    if (placement_.size() != graph_.order()) {
      throw InvalidInput("placement has " + std::to_string(placement_.size()) +
                         " points for a graph of order " + std::to_string(graph_.order()));
    }
    for (const auto& p : placement_) check_coordinate_range(p);
    std::vector<Point> sorted = placement_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("placement is not injective");
    }
    for (const auto& e : graph_.edges()) {
      const auto [a, b] = segment(e);
      for (std::size_t i = 0; i < graph_.order(); ++i) {
        const auto id = graph_.id_at(i);
        if (e.touches(id)) continue;
        if (on_segment(a, b, placement_[i])) {
          throw InvalidInput("vertex " + std::to_string(id) + " lies on edge " +
                             std::to_string(e.u) + "-" + std::to_string(e.v));
        }
      }
    }
  }

  Graph graph_;
  std::vector<Point> placement_;
};

/// Index pairs (i < j) into graph().edges() of edges that cross.
inline std::vector<std::pair<std::size_t, std::size_t>> crossing_edge_pairs(
    const StraightLineDrawing& d) {
  const auto& edges = d.graph().edges();
  struct Box {
    Point a, b;
    std::int64_t x0, x1, y0, y1;
  };
  std::vector<Box> boxes;
  boxes.reserve(edges.size());
  for (const auto& e : edges) {
    const auto [a, b] = d.segment(e);
    boxes.push_back({a, b, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                     std::max(a.y, b.y)});
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].shares_endpoint(edges[j])) continue;
      const auto& p = boxes[i];
      const auto& q = boxes[j];
      if (p.x1 < q.x0 || q.x1 < p.x0 || p.y1 < q.y0 || q.y1 < p.y0) continue;
      if (segments_cross(p.a, p.b, q.a, q.b)) out.emplace_back(i, j);
    }
  }
  return out;
}

struct CrossingMetrics {
  std::int64_t crossings = 0;       // crossing points
  std::int64_t crossing_pairs = 0;  // crossing edge pairs; equal to crossings for segments
  std::vector<Edge> crossing_edges;
  std::vector<Edge> empty_edges;
};

inline CrossingMetrics crossing_metrics(const StraightLineDrawing& d) {
  const auto pairs = crossing_edge_pairs(d);
  const auto& edges = d.graph().edges();
  std::vector<char> crossed(edges.size(), 0);
  for (const auto& [i, j] : pairs) crossed[i] = crossed[j] = 1;
  CrossingMetrics m;
  m.crossings = m.crossing_pairs = static_cast<std::int64_t>(pairs.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    (crossed[i] ? m.crossing_edges : m.empty_edges).push_back(edges[i]);
  }
  return m;
}

inline std::int64_t crossing_pairs(const StraightLineDrawing& d) {
  return static_cast<std::int64_t>(crossing_edge_pairs(d).size());
}

/// Drawing-relative potential: crossing pairs of the drawing plus bds of the graph.
inline std::int64_t phi(const StraightLineDrawing& d) { return crossing_pairs(d) + bds(d.graph()); }

struct Potentials {
  std::int64_t ssqd = 0;
  std::int64_t bds = 0;
  std::int64_t crossing_pairs = 0;
  std::int64_t phi = 0;
};

inline Potentials potentials(const StraightLineDrawing& d) {
  Potentials p;
  p.ssqd = sepdraw::ssqd(d.graph());
  p.bds = sepdraw::bds(d.graph());
  p.crossing_pairs = sepdraw::crossing_pairs(d);
  p.phi = p.crossing_pairs + p.bds;
  return p;
}

/// Graph on the crossing edges (ids = indices into graph().edges()), adjacent iff they cross.
inline Graph crossing_graph(const StraightLineDrawing& d) {
  const auto pairs = crossing_edge_pairs(d);
  std::vector<VertexId> ids;
  std::vector<Edge> adj;
  for (const auto& [i, j] : pairs) {
    ids.push_back(static_cast<VertexId>(i));
    ids.push_back(static_cast<VertexId>(j));
    adj.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Graph(std::move(ids), std::move(adj));
}

enum class ConflictKind { crossing, shared_endpoint };

/// Conflict graph of a drawing: one vertex per edge of G (id = index into
/// G.edges()), adjacent iff the edges cross or share an endpoint.
struct ConflictGraph {
  Graph graph;
  std::vector<ConflictKind> kinds;  // parallel to graph.edges()
  std::vector<Edge> base_edges;     // base_edges[id] is the edge of G behind vertex id

  std::size_t count(ConflictKind k) const {
    return static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), k));
  }
};

inline ConflictGraph conflict_graph(const StraightLineDrawing& d) {
  const auto& g = d.graph();
  const auto& edges = g.edges();
  std::vector<std::pair<Edge, ConflictKind>> labelled;
  for (const auto& [i, j] : crossing_edge_pairs(d)) {
    labelled.emplace_back(Edge(static_cast<VertexId>(i), static_cast<VertexId>(j)),
                          ConflictKind::crossing);
  }
  std::vector<std::vector<VertexId>> incident(g.order());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    incident[*g.index_of(edges[k].u)].push_back(static_cast<VertexId>(k));
    incident[*g.index_of(edges[k].v)].push_back(static_cast<VertexId>(k));
  }
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b)
        labelled.emplace_back(Edge(inc[a], inc[b]), ConflictKind::shared_endpoint);
  }
  std::sort(labelled.begin(), labelled.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  ConflictGraph cg;
  std::vector<Edge> adj;
  adj.reserve(labelled.size());
  for (const auto& [e, k] : labelled) {
    adj.push_back(e);
    cg.kinds.push_back(k);
  }
  std::vector<VertexId> ids(edges.size());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  cg.graph = Graph(std::move(ids), std::move(adj));
  cg.base_edges = edges;
  return cg;
}

namespace drawings {

/// Unit lattice drawing of generators::grid(rows, cols): vertex (r, c) at (c, r).
inline StraightLineDrawing grid(std::size_t rows, std::size_t cols) {
  std::vector<Point> pts;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      pts.push_back({static_cast<std::int64_t>(c), static_cast<std::int64_t>(r)});
  return StraightLineDrawing(generators::grid(rows, cols), std::move(pts));
}

/// n points on a circle of radius 2^20 (rounded n-th roots of unity),
/// nudged by +1 in x until they are in general position.
inline std::vector<Point> regular_polygon(std::size_t n) {
  constexpr double kRadius = 1048576.0;
  std::vector<Point> pts;
  pts.reserve(n);
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * pi * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1));
    pts.push_back({static_cast<std::int64_t>(std::llround(kRadius * std::cos(a))),
                   static_cast<std::int64_t>(std::llround(kRadius * std::sin(a)))});
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto bad = collinear_triples(pts, 1);
    if (bad.empty()) return pts;
    pts[bad.front().l].x += 1;
  }
  throw InvalidInput("could not place " + std::to_string(n) + " points in convex general position");
}

inline StraightLineDrawing convex(const Graph& g) {
  auto pts = regular_polygon(g.order());
  return StraightLineDrawing(g, std::move(pts));
}

/// n uniformly random points in [0, extent)^2, resampled until no three are collinear.
inline std::vector<Point> random_points(std::size_t n, std::uint64_t seed,
                                        std::int64_t extent = std::int64_t{1} << 20) {
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  std::vector<std::pair<std::int64_t, std::int64_t>> dirs;
  while (pts.size() < n) {
    const Point p{rng.between(0, extent - 1), rng.between(0, extent - 1)};
    dirs.clear();
    bool ok = true;
    for (const auto& q : pts) {
      std::int64_t dx = q.x - p.x, dy = q.y - p.y;
      const auto g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
      if (g == 0) {
        ok = false;
        break;
      }
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.emplace_back(dx, dy);
    }
    if (!ok) continue;
    std::sort(dirs.begin(), dirs.end());
    if (std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end()) continue;
    pts.push_back(p);
  }
  return pts;
}

/// n points in general position by construction: the points (i, i^2 mod p)
/// for a prime p have no three collinear (collinearity over the integers would
/// imply it over F_p, where they lie on a parabola). A random subset of the
/// i's is drawn and a random shear applied, which preserves collinearity.
inline std::vector<Point> modular_parabola_points(std::size_t n, std::uint64_t seed) {
  auto is_prime = [](std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  std::int64_t p = static_cast<std::int64_t>(2 * n + 11);
  while (!is_prime(p)) ++p;
  Rng rng(seed);
  std::vector<std::int64_t> xs(static_cast<std::size_t>(p));
  std::iota(xs.begin(), xs.end(), std::int64_t{0});
  rng.shuffle(xs);
  xs.resize(n);
  std::sort(xs.begin(), xs.end());
  const std::int64_t shear = rng.between(-3, 3);
  std::vector<Point> pts;
  pts.reserve(n);
  for (auto x : xs) {
    const std::int64_t y = (x * x) % p;
    pts.push_back({x + shear * y, y});
  }
  return pts;
}

inline StraightLineDrawing random_general_position(const Graph& g, std::uint64_t seed) {
  return StraightLineDrawing(g, random_points(g.order(), seed));
}

/// Random planar straight-line drawing: random points, then candidate pairs in
/// random order, each kept if it crosses no kept edge, until `target_edges`.
inline StraightLineDrawing random_planar(std::size_t n, std::size_t target_edges, std::uint64_t seed) {
  auto pts = random_points(n, seed);
  Rng rng(mix_seed(seed, 1));
  std::vector<Edge> candidates;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
  rng.shuffle(candidates);
  std::vector<Edge> kept;
  for (const auto& c : candidates) {
    if (kept.size() >= target_edges) break;
    bool ok = true;
    for (const auto& e : kept) {
      if (e.shares_endpoint(c)) continue;
      if (segments_cross(pts[c.u], pts[c.v], pts[e.u], pts[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(c);
  }
  return StraightLineDrawing(Graph(n, std::move(kept)), std::move(pts));
}

}  // namespace drawings

}  // namespace sepdraw
