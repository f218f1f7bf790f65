#pragma once

// Layouts built from the conflict partition tree: linear orderings of small
// cutwidth, bisections read off an ordering, and convex drawings whose
// crossings are charged to tree nodes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sepdraw/drawing.hpp"
#include "sepdraw/error.hpp"
#include "sepdraw/graph.hpp"
#include "sepdraw/partition.hpp"

namespace sepdraw {

struct LinearOrdering {
  std::vector<VertexId> order;
  /// cut_profile[i] = edges between the first i+1 vertices and the rest
  std::vector<std::int64_t> cut_profile;
  std::int64_t width = 0;
  /// sum over tree levels of the largest number of edges removed at one node
  std::int64_t level_bound = 0;
};

/// Gap counts of `order`, which must be a permutation of g's vertices.
inline std::vector<std::int64_t> cut_profile(const Graph& g, const std::vector<VertexId>& order) {
  if (order.size() != g.order()) throw InvalidInput("ordering length differs from graph order");
  std::vector<std::size_t> pos(g.order(), SIZE_MAX);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto idx = g.checked_index(order[i]);
    if (pos[idx] != SIZE_MAX) throw InvalidInput("vertex " + std::to_string(order[i]) + " repeated in ordering");
    pos[idx] = i;
  }
  // difference array: an edge spans gaps lo .. hi-1
  std::vector<std::int64_t> diff(order.size() + 1, 0);
  for (const auto& e : g.edges()) {
    auto a = pos[*g.index_of(e.u)], b = pos[*g.index_of(e.v)];
    if (a > b) std::swap(a, b);
    ++diff[a];
    --diff[b];
  }
  std::vector<std::int64_t> profile;
  std::int64_t run = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    run += diff[i];
    profile.push_back(run);
  }
  return profile;
}

inline LinearOrdering make_ordering(const Graph& g, std::vector<VertexId> order) {
  LinearOrdering o;
  o.cut_profile = cut_profile(g, order);
  o.order = std::move(order);
  for (auto c : o.cut_profile) o.width = std::max(o.width, c);
  return o;
}

inline std::int64_t level_bound(const PartitionTree& tree) {
  std::map<int, std::int64_t> widest;
  for (const auto& nd : tree.nodes()) {
    auto& w = widest[nd.depth];
    w = std::max(w, static_cast<std::int64_t>(nd.removed.size()));
  }
  std::int64_t total = 0;
  for (const auto& [depth, w] : widest) total += w;
  return total;
}

/// Ordering from the recursive conflict partition: at every node the part
/// with the smaller minimum id is placed first, then the other part.
inline LinearOrdering cutwidth_ordering(const Graph& g, const StraightLineDrawing& d, const SplitOptions& opt = {},
                                        PartitionTree* tree_out = nullptr) {
  if (d.graph().vertices() != g.vertices() || d.graph().edges() != g.edges()) throw InvalidInput("drawing does not draw this graph");
  auto tree = conflict_tree(d, opt);
  auto o = make_ordering(g, tree.leaf_order());
  o.level_bound = level_bound(tree);
  if (o.width > o.level_bound) throw InvariantViolation("ordering width exceeds the level-sum bound");
  if (tree_out) *tree_out = std::move(tree);
  return o;
}

struct Bisection {
  std::int64_t cut = 0;
  std::size_t position = 0;  // number of vertices on the left
  std::vector<VertexId> part1;
  std::vector<VertexId> part2;
};

/// Best single gap of the ordering with both sides holding at most
/// floor(2n/3) vertices; ties go to the more balanced, then the earlier gap.
inline Bisection bisection_from_ordering(const Graph& g, const LinearOrdering& o) {
  const std::size_t n = g.order();
  if (n < 3) throw InvalidInput("bisection needs at least 3 vertices");
  const auto profile = cut_profile(g, o.order);
  const std::size_t cap = 2 * n / 3;
  Bisection best;
  bool found = false;
  for (std::size_t left = 1; left < n; ++left) {
    if (left > cap || n - left > cap) continue;
    const auto c = profile[left - 1];
    auto imbalance = [&](std::size_t l) { return l > n - l ? 2 * l - n : n - 2 * l; };
    if (!found || c < best.cut || (c == best.cut && imbalance(left) < imbalance(best.position))) {
      best.cut = c;
      best.position = left;
      found = true;
    }
  }
  best.part1.assign(o.order.begin(), o.order.begin() + static_cast<std::ptrdiff_t>(best.position));
  best.part2.assign(o.order.begin() + static_cast<std::ptrdiff_t>(best.position), o.order.end());
  std::sort(best.part1.begin(), best.part1.end());
  std::sort(best.part2.begin(), best.part2.end());
  return best;
}

/// Edge pairs whose endpoints interleave on a circle, counted from positions alone.
inline std::int64_t interleaving_pairs(const Graph& g, const std::vector<VertexId>& circular_order) {
  std::vector<std::size_t> pos(g.order());
  for (std::size_t i = 0; i < circular_order.size(); ++i) pos[g.checked_index(circular_order[i])] = i;
  struct Chord {
    std::size_t a, b;
  };
  std::vector<Chord> chords;
  for (const auto& e : g.edges()) {
    auto a = pos[*g.index_of(e.u)], b = pos[*g.index_of(e.v)];
    chords.push_back({std::min(a, b), std::max(a, b)});
  }
  std::int64_t count = 0;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const auto& x = chords[i];
      const auto& y = chords[j];
      if (x.a < y.a && y.a < x.b && x.b < y.b) ++count;
      if (y.a < x.a && x.a < y.b && y.b < x.b) ++count;
    }
  }
  return count;
}

struct ChargingReport {
  std::int64_t total = 0;
  std::int64_t ancestor_violations = 0;
  /// crossings charged to each edge, parallel to graph().edges()
  std::vector<std::int64_t> per_edge;
  /// charged crossings grouped by the depth of the charged edge's node
  std::vector<std::int64_t> per_level;
  /// potential summed over the tree nodes of each depth
  std::vector<std::int64_t> level_phi;
  /// edges whose charge exceeds the sum of |E(t)| along their tree path
  std::int64_t path_bound_violations = 0;
};

/// Charges each crossing of a drawing to one of its two edges: the one whose
/// separating node is the (strict) ancestor of the other's; when both edges
/// separate at the same node, the smaller edge. A crossing between edges whose
/// nodes are unrelated is counted as a violation.
inline ChargingReport charge_crossings(const StraightLineDrawing& drawn, const PartitionTree& tree) {
  const auto& g = drawn.graph();
  const auto& edges = g.edges();
  ChargingReport rep;
  rep.per_edge.assign(edges.size(), 0);
  rep.per_level.assign(static_cast<std::size_t>(tree.depth()) + 1, 0);
  rep.level_phi.assign(static_cast<std::size_t>(tree.depth()) + 1, 0);
  for (const auto& nd : tree.nodes()) rep.level_phi[static_cast<std::size_t>(nd.depth)] += nd.phi;
  std::vector<int> home(edges.size());
  std::vector<std::int64_t> cut_size(tree.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    home[i] = tree.edge_node(edges[i]);
    ++cut_size[static_cast<std::size_t>(home[i])];
  }
  for (const auto& [i, j] : crossing_edge_pairs(drawn)) {
    const int a = home[i], b = home[j];
    std::size_t charged;
    if (a == b) {
      charged = i;
    } else if (tree.is_ancestor(a, b)) {
      charged = i;
    } else if (tree.is_ancestor(b, a)) {
      charged = j;
    } else {
      ++rep.ancestor_violations;
      continue;
    }
    ++rep.per_edge[charged];
    ++rep.per_level[static_cast<std::size_t>(tree.node(home[charged]).depth)];
    ++rep.total;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (rep.per_edge[i] == 0) continue;
    std::int64_t bound = 0;
    for (auto t : tree.path(edges[i].u, edges[i].v)) bound += cut_size[static_cast<std::size_t>(t)];
    if (rep.per_edge[i] > bound) ++rep.path_bound_violations;
  }
  return rep;
}

struct ConvexDrawing {
  std::vector<VertexId> circular_order;
  StraightLineDrawing drawing;
  std::int64_t crossings = 0;
  std::int64_t interleavings = 0;
  PartitionTree tree;
  ChargingReport charging;
};

/// Places the vertices on a regular polygon in the leaf order of the conflict
/// tree, so that each tree node occupies a contiguous arc.
inline ConvexDrawing convex_drawing(const Graph& g, const StraightLineDrawing& d, const SplitOptions& opt = {}) {
  ConvexDrawing cd;
  const auto o = cutwidth_ordering(g, d, opt, &cd.tree);
  cd.circular_order = o.order;
  const auto polygon = drawings::regular_polygon(g.order());
  std::vector<Point> placement(g.order());
  for (std::size_t i = 0; i < o.order.size(); ++i) placement[g.checked_index(o.order[i])] = polygon[i];
  cd.drawing = StraightLineDrawing(g, std::move(placement));
  cd.crossings = crossing_pairs(cd.drawing);
  cd.interleavings = interleaving_pairs(g, cd.circular_order);
  if (cd.crossings != cd.interleavings) {
    throw InvariantViolation("convex crossing count " + std::to_string(cd.crossings) +
                             " differs from interleaving count " + std::to_string(cd.interleavings));
  }
  cd.charging = charge_crossings(cd.drawing, cd.tree);
  if (cd.charging.ancestor_violations != 0) throw InvariantViolation("crossing between unrelated tree nodes");
  if (cd.charging.total != cd.crossings) throw InvariantViolation("charges do not add up to the crossings");
  return cd;
}

}  // namespace sepdraw
