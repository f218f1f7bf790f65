#pragma once

// Straight-line drawings on a prescribed point set. Parts of the point set
// with same-type transversals and disjoint hulls are found by search and
// verified; the graph is split k ways recursively and each part is sent to
// its own point subset.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepdraw/drawing.hpp"
#include "sepdraw/error.hpp"
#include "sepdraw/geometry.hpp"
#include "sepdraw/graph.hpp"
#include "sepdraw/layout.hpp"
#include "sepdraw/partition.hpp"
#include "sepdraw/random.hpp"

namespace sepdraw {

/// Full general-position checks above this many points are skipped (they are
/// quadratic); injectivity is still checked and every orientation the search
/// relies on must be non-zero.
inline constexpr std::size_t kGeneralPositionCheckLimit = 4096;

struct TripleSign {
  std::size_t i = 0, j = 0, l = 0;
  int sign = 0;
};

struct SameTypeCertificate {
  bool same_type = true;
  std::vector<TripleSign> signs;  // one per part triple i < j < l
  /// two transversals of the offending part triple with opposite signs
  std::optional<std::array<Point, 3>> positive;
  std::optional<std::array<Point, 3>> negative;
  std::string reason;
};

namespace detail {

inline void require_disjoint_parts(std::span<const PointSet> parts) {
  std::vector<Point> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InvalidInput("parts share a point or repeat one");
}

/// Sign agreement over the given representatives of every part triple.
inline SameTypeCertificate sign_scan(std::span<const PointSet> reps) {
  SameTypeCertificate cert;
  const std::size_t k = reps.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        TripleSign ts{i, j, l, 0};
        std::optional<std::array<Point, 3>> pos, neg;
        for (const auto& a : reps[i]) {
          for (const auto& b : reps[j]) {
            for (const auto& c : reps[l]) {
              const int s = orientation(a, b, c);
              if (s == 0) {
                cert.same_type = false;
                cert.reason = "collinear transversal";
                cert.positive = cert.negative = std::array<Point, 3>{a, b, c};
                return cert;
              }
              if (s > 0 && !pos) pos = std::array<Point, 3>{a, b, c};
              if (s < 0 && !neg) neg = std::array<Point, 3>{a, b, c};
              if (pos && neg) {
                cert.same_type = false;
                cert.reason = "parts " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) +
                              " have transversals of both orientations";
                cert.positive = pos;
                cert.negative = neg;
                return cert;
              }
            }
          }
        }
        ts.sign = pos ? 1 : (neg ? -1 : 0);
        cert.signs.push_back(ts);
      }
    }
  }
  return cert;
}

}  // namespace detail

/// Exhaustive check: every transversal triple of every part triple.
inline SameTypeCertificate same_type_check(std::span<const PointSet> parts) {
  detail::require_disjoint_parts(parts);
  std::vector<Point> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  if (!general_position(all)) throw InvalidInput("union of the parts is not in general position");
  return detail::sign_scan(parts);
}

/// Same answer as same_type_check for parts in general position, scanning
/// only hull vertices: the orientation of (a, b, c) is affine in each
/// argument, so its sign over a product of hulls is fixed by the vertices.
inline SameTypeCertificate same_type_check_hulls(std::span<const PointSet> parts) {
  std::vector<PointSet> hulls;
  hulls.reserve(parts.size());
  for (const auto& p : parts) hulls.push_back(convex_hull(p));
  return detail::sign_scan(hulls);
}

struct SameTypeOptions {
  /// rotations of the direction fan tried by the cap search
  std::size_t rotations = 16;
  /// point removals allowed in the conflict-driven shrinking phase
  std::size_t shrink_steps = 256;
};

struct SameTypeFamily {
  std::vector<PointSet> parts;
  std::vector<TripleSign> certificate;
  bool equalized = true;
  bool shortfall = false;
  std::size_t target = 0;
  std::size_t part_size = 0;
  double fraction = 0.0;  // part_size / |s|
  std::string method;
};

namespace detail {

struct CapOrder {
  double angle = 0.0;
  std::vector<std::size_t> ranked;  // point indices, largest projection first
};

inline std::vector<CapOrder> cap_orders(std::span<const Point> s, std::size_t k, double offset) {
  std::vector<CapOrder> out;
  for (std::size_t i = 0; i < k; ++i) {
    CapOrder co;
    co.angle = std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k) + offset;
    const long double cx = std::cos(static_cast<long double>(co.angle));
    const long double cy = std::sin(static_cast<long double>(co.angle));
    std::vector<long double> proj(s.size());
    for (std::size_t p = 0; p < s.size(); ++p)
      proj[p] = cx * static_cast<long double>(s[p].x) + cy * static_cast<long double>(s[p].y);
    co.ranked.resize(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) co.ranked[p] = p;
    std::sort(co.ranked.begin(), co.ranked.end(), [&](std::size_t a, std::size_t b) {
      return proj[a] != proj[b] ? proj[a] > proj[b] : s[a] < s[b];
    });
    out.push_back(std::move(co));
  }
  return out;
}

inline std::vector<PointSet> caps_of_size(std::span<const Point> s, const std::vector<CapOrder>& orders,
                                          std::size_t size) {
  std::vector<PointSet> parts;
  for (const auto& co : orders) {
    PointSet p;
    for (std::size_t r = 0; r < size; ++r) p.push_back(s[co.ranked[r]]);
    parts.push_back(std::move(p));
  }
  return parts;
}

inline bool family_ok(const std::vector<PointSet>& parts) {
  std::vector<Point> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  if (!hulls_pairwise_disjoint(parts)) return false;
  return same_type_check_hulls(parts).same_type;
}

/// Largest s with caps of size s forming a verified family (caps are nested
/// in s and subfamilies of verified families are verified, so this is monotone).
inline std::size_t largest_cap(std::span<const Point> s, const std::vector<CapOrder>& orders, std::size_t hi) {
  std::size_t lo = 0;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (family_ok(caps_of_size(s, orders, mid))) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

/// Removes conflicting points from oversized caps one at a time: a hull vertex
/// lying in another part's hull, or else the hull vertex in the most
/// minority-sign transversals. Returns the parts once they verify, equalized.
inline std::optional<std::vector<PointSet>> shrink_caps(std::span<const Point> s, const std::vector<CapOrder>& orders,
                                                        std::size_t start, std::size_t steps) {
  const std::size_t k = orders.size();
  std::vector<std::vector<std::size_t>> idx(k);
  std::vector<int> owner(s.size(), -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < start; ++r) {
      const auto p = orders[i].ranked[r];
      owner[p] = owner[p] == -1 ? static_cast<int>(i) : -2;
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < start; ++r)
      if (owner[orders[i].ranked[r]] == static_cast<int>(i)) idx[i].push_back(orders[i].ranked[r]);

  auto materialize = [&]() {
    std::vector<PointSet> parts(k);
    for (std::size_t i = 0; i < k; ++i)
      for (auto p : idx[i]) parts[i].push_back(s[p]);
    return parts;
  };
  for (std::size_t step = 0; step <= steps; ++step) {
    auto parts = materialize();
    for (const auto& p : parts)
      if (p.empty()) return std::nullopt;
    std::vector<PointSet> hulls;
    for (const auto& p : parts) hulls.push_back(convex_hull(p));
    // a point inside another part's hull
    std::optional<Point> drop;
    for (std::size_t i = 0; i < k && !drop; ++i)
      for (std::size_t j = 0; j < k && !drop; ++j)
        if (i != j)
          for (const auto& q : hulls[i])
            if (in_hull(hulls[j], q)) {
              drop = q;
              break;
            }
    if (!drop) {
      // hull vertices in the most transversals of the minority sign
      std::vector<std::vector<std::size_t>> votes(k);
      for (std::size_t i = 0; i < k; ++i) votes[i].assign(hulls[i].size(), 0);
      bool conflict = false;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          for (std::size_t l = j + 1; l < k; ++l) {
            std::int64_t balance = 0;
            for (const auto& a : hulls[i])
              for (const auto& b : hulls[j])
                for (const auto& c : hulls[l]) balance += orientation(a, b, c);
            const int majority = balance >= 0 ? 1 : -1;
            for (std::size_t x = 0; x < hulls[i].size(); ++x)
              for (std::size_t y = 0; y < hulls[j].size(); ++y)
                for (std::size_t z = 0; z < hulls[l].size(); ++z)
                  if (orientation(hulls[i][x], hulls[j][y], hulls[l][z]) != majority) {
                    ++votes[i][x];
                    ++votes[j][y];
                    ++votes[l][z];
                    conflict = true;
                  }
          }
      if (conflict) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t x = 0; x < hulls[i].size(); ++x)
            if (votes[i][x] > best) {
              best = votes[i][x];
              drop = hulls[i][x];
            }
      }
    }
    if (!drop) {
      // hull edges may still cross without a vertex inside; fall back to the
      // weakest point (smallest projection) of the largest part
      if (hulls_pairwise_disjoint(parts)) {
        std::size_t m = SIZE_MAX;
        for (const auto& p : parts) m = std::min(m, p.size());
        for (std::size_t i = 0; i < k; ++i) idx[i].resize(m);
        return materialize();
      }
      std::size_t big = 0;
      for (std::size_t i = 1; i < k; ++i)
        if (idx[i].size() > idx[big].size()) big = i;
      idx[big].pop_back();
      continue;
    }
    for (auto& v : idx) {
      auto it = std::find_if(v.begin(), v.end(), [&](std::size_t p) { return s[p] == *drop; });
      if (it != v.end()) {
        v.erase(it);
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// k pairwise disjoint subsets of s of equal size with disjoint hulls and
/// same-type transversals. Parts are caps (the points extreme in k evenly
/// spread directions); the cap size is maximized by binary search over a
/// fan of rotations and then improved by conflict-driven shrinking. When
/// `target` cannot be reached the largest verified family is returned with
/// `shortfall` set.
inline SameTypeFamily same_type_disjoint_subsets(std::span<const Point> s, std::size_t k, std::size_t target,
                                                 const SameTypeOptions& opt = {}) {
  if (k < 2) throw InvalidInput("need at least two parts");
  if (target < 1) throw InvalidInput("target size must be positive");
  if (s.size() < k * target)
    throw InvalidInput("point set of size " + std::to_string(s.size()) + " cannot hold " + std::to_string(k) +
                       " parts of " + std::to_string(target));
  {
    std::vector<Point> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("point set repeats a point");
    if (s.size() <= kGeneralPositionCheckLimit && !general_position(s))
      throw InvalidInput("point set is not in general position");
  }
  SameTypeFamily fam;
  fam.target = target;
  std::size_t best = 0;
  std::vector<detail::CapOrder> best_orders;
  const std::size_t rotations = std::max<std::size_t>(opt.rotations, 1);
  for (std::size_t r = 0; r < rotations && best < target; ++r) {
    const double offset = 2 * std::numbers::pi / static_cast<double>(k) * static_cast<double>(r) /
                          static_cast<double>(rotations);
    auto orders = detail::cap_orders(s, k, offset);
    const auto got = detail::largest_cap(s, orders, target);
    if (got > best || best_orders.empty()) {
      best = got;
      best_orders = std::move(orders);
    }
  }
  fam.method = "caps";
  if (best > 0) fam.parts = detail::caps_of_size(s, best_orders, best);
  if (best < target && opt.shrink_steps > 0) {
    const auto start = std::min(target, std::max<std::size_t>(2 * best, best + 1));
    if (auto shrunk = detail::shrink_caps(s, best_orders, start, opt.shrink_steps)) {
      if (!shrunk->empty() && shrunk->front().size() > best && detail::family_ok(*shrunk)) {
        best = shrunk->front().size();
        fam.parts = std::move(*shrunk);
        fam.method = "caps+shrink";
      }
    }
  }
  if (best == 0) {
    // any k distinct points form a family of singletons
    std::vector<Point> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    fam.parts.clear();
    for (std::size_t i = 0; i < k; ++i) fam.parts.push_back({sorted[i]});
    best = 1;
    fam.method = "singletons";
  }
  for (auto& p : fam.parts) std::sort(p.begin(), p.end());
  const auto cert = same_type_check_hulls(fam.parts);
  if (!cert.same_type || !hulls_pairwise_disjoint(fam.parts))
    throw InvariantViolation("same-type search returned an unverified family");
  fam.certificate = cert.signs;
  fam.part_size = best;
  fam.shortfall = best < target;
  fam.fraction = static_cast<double>(best) / static_cast<double>(s.size());
  return fam;
}

struct EmbedOptions {
  std::size_t k = 3;
  SplitOptions split;
  SameTypeOptions same_type;
  /// place a node's vertices directly on its points when the same-type
  /// parts are too small for its children but the node itself still fits
  bool direct_fallback = true;
};

struct EmbeddingNodeRecord {
  int node = -1;
  int depth = 0;
  std::size_t vertices = 0;
  std::size_t points = 0;
  std::size_t part_size = 0;  // points handed to each child
  double fraction = 0.0;
  bool shortfall = false;
  std::int64_t phi = 0;
  std::int64_t max_child_phi = 0;
  /// some child kept more than half of this node's potential
  bool slow_decay = false;
  bool direct = false;
};

struct EmbeddingTelemetry {
  /// smallest realized part fraction at each depth
  std::vector<double> level_fraction;
  /// points needed by the bottom-up estimate with a 2x margin
  std::size_t feasibility = 0;
  std::size_t available = 0;
  std::size_t slow_decay_nodes = 0;
  std::size_t direct_nodes = 0;
};

struct EmbeddingResult {
  /// placement[i] is the point of the vertex with local index i
  std::vector<Point> placement;
  StraightLineDrawing drawing;
  std::int64_t crossings = 0;
  PartitionTree tree;
  std::vector<EmbeddingNodeRecord> records;
  /// crossing pairs whose separating nodes are unrelated
  std::int64_t ancestor_violations = 0;
  /// (edge, depth offset d) pairs where the edge crosses E(t') for more than
  /// 2^d nodes t' that lie d levels below its own node
  std::int64_t stab_bound_violations = 0;
  EmbeddingTelemetry telemetry;
};

/// Points needed for n vertices if every level keeps `fraction[depth]` of
/// its points per part, with a factor 2 safety margin per level.
inline std::size_t feasibility_estimate(std::size_t n, std::size_t k, const std::vector<double>& fraction,
                                        std::size_t depth = 0) {
  if (n < k) return n;
  double f = fraction.empty() ? 1.0 / static_cast<double>(k) : fraction[std::min(depth, fraction.size() - 1)];
  if (f <= 0) f = 1.0 / static_cast<double>(n);
  const auto child = feasibility_estimate((n + k - 1) / k, k, fraction, depth + 1);
  const double need = std::ceil(2.0 * static_cast<double>(child) / f);
  return std::max(n, static_cast<std::size_t>(std::min(need, 1e18)));
}

namespace detail {

/// Near-equal sizes for k parts, arranged in pairs for multiway_split: for
/// odd k a zero-size part is paired with the largest part.
inline std::vector<std::size_t> paired_sizes(std::size_t n, std::size_t k) {
  std::vector<std::size_t> parts(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++parts[i];
  if (k % 2 == 0) return parts;
  std::vector<std::size_t> out{parts[0], 0};
  out.insert(out.end(), parts.begin() + 1, parts.end());
  return out;
}

struct EmbedState {
  const Graph* base;
  const EmbedOptions* opt;
  PartitionTree* tree;
  std::vector<Point>* placement;
  std::vector<char>* placed;
  std::vector<EmbeddingNodeRecord>* records;
  std::size_t visits = 0;
};

inline void embed_node(EmbedState& st, const StraightLineDrawing& d, std::vector<Point> pts, int parent, int depth) {
  const auto& g = d.graph();
  const std::size_t k = st.opt->k;
  TreeNode nd;
  nd.vertices = g.vertices();
  std::sort(nd.vertices.begin(), nd.vertices.end());
  nd.parent = parent;
  nd.depth = depth;
  nd.phi = phi(d);
  nd.edge_count = g.size();
  auto describe = [&]() {
    return "tree node at depth " + std::to_string(depth) + " with " + std::to_string(g.order()) +
           " vertices (smallest id " + (nd.vertices.empty() ? std::string("-") : std::to_string(nd.vertices[0])) +
           ")";
  };
  if (pts.size() < g.order()) {
    throw Infeasible(describe() + " needs at least " + std::to_string(g.order()) + " points, has " +
                     std::to_string(pts.size()));
  }
  auto place_directly = [&]() {
    // ascending ids onto lexicographically sorted points
    std::sort(pts.begin(), pts.end());
    if (nd.vertices.size() > 1) nd.removed = g.edges();
    const int id = st.tree->add_node(nd);
    for (std::size_t i = 0; i < nd.vertices.size(); ++i) {
      const auto v = nd.vertices[i];
      const auto bi = st.base->checked_index(v);
      (*st.placement)[bi] = pts[i];
      (*st.placed)[bi] = 1;
      if (nd.vertices.size() > 1) {
        TreeNode leaf;
        leaf.vertices = {v};
        leaf.parent = id;
        leaf.depth = depth + 1;
        st.tree->add_node(std::move(leaf));
      }
    }
    return id;
  };
  if (g.order() < k) {
    place_directly();
    return;
  }
  const auto fam = same_type_disjoint_subsets(pts, k, pts.size() / k, st.opt->same_type);
  const std::size_t largest_child = (g.order() + k - 1) / k;
  if (fam.part_size < largest_child && st.opt->direct_fallback) {
    EmbeddingNodeRecord rec;
    rec.depth = depth;
    rec.vertices = g.order();
    rec.points = pts.size();
    rec.part_size = fam.part_size;
    rec.fraction = fam.fraction;
    rec.shortfall = true;
    rec.phi = nd.phi;
    rec.direct = true;
    rec.node = place_directly();
    st.records->push_back(rec);
    return;
  }
  auto local = st.opt->split;
  local.separator.seed = mix_seed(st.opt->split.separator.seed, st.visits++);
  auto res = multiway_split(g, d, paired_sizes(g.order(), k), local);
  nd.removed = res.cut_edges;
  const int id = st.tree->add_node(nd);

  EmbeddingNodeRecord rec;
  rec.node = id;
  rec.depth = depth;
  rec.vertices = g.order();
  rec.points = pts.size();
  rec.part_size = fam.part_size;
  rec.fraction = fam.fraction;
  rec.shortfall = fam.shortfall;
  rec.phi = nd.phi;
  for (const auto& p : res.parts) rec.max_child_phi = std::max(rec.max_child_phi, p.phi);
  rec.slow_decay = 2 * rec.max_child_phi > rec.phi;
  st.records->push_back(rec);

  std::size_t slot = 0;
  for (auto& part : res.parts) {
    if (part.graph.order() == 0) continue;
    if (slot >= fam.parts.size()) throw InvariantViolation("more nonempty parts than point subsets");
    embed_node(st, part.drawing, fam.parts[slot], id, depth + 1);
    ++slot;
  }
}

}  // namespace detail

/// Draws g on points of s, following the reference drawing d: a k-way
/// recursion where every node splits its subgraph into near-equal parts and
/// hands each part a same-type point subset of its own.
inline EmbeddingResult embed_on_pointset(const Graph& g, const StraightLineDrawing& d, std::span<const Point> s,
                                         const EmbedOptions& opt = {}) {
  if (!(d.graph() == g)) throw InvalidInput("drawing does not draw this graph");
  if (opt.k < 3) throw InvalidInput("branching must be at least 3");
  for (const auto& p : s) check_coordinate_range(p);
  {
    std::vector<Point> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("point set repeats a point");
    if (s.size() <= kGeneralPositionCheckLimit && !general_position(s))
      throw InvalidInput("point set is not in general position");
  }
  EmbeddingResult out;
  out.telemetry.available = s.size();
  if (g.order() == 0) return out;
  out.placement.assign(g.order(), Point{});
  std::vector<char> placed(g.order(), 0);
  out.tree = PartitionTree(g);
  detail::EmbedState st{&g, &opt, &out.tree, &out.placement, &placed, &out.records};
  detail::embed_node(st, d, std::vector<Point>(s.begin(), s.end()), -1, 0);
  out.tree.finalize();
  for (auto c : placed)
    if (!c) throw InvariantViolation("vertex left unplaced");

  out.drawing = StraightLineDrawing(g, out.placement);
  out.crossings = crossing_pairs(out.drawing);

  // crossing locality and the per-level stabbing count
  const auto& edges = g.edges();
  std::vector<int> home(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) home[i] = out.tree.edge_node(edges[i]);
  std::vector<std::set<std::pair<int, int>>> reached(edges.size());  // (depth offset, node)
  for (const auto& [i, j] : crossing_edge_pairs(out.drawing)) {
    const int a = home[i], b = home[j];
    if (!out.tree.is_ancestor(a, b) && !out.tree.is_ancestor(b, a)) {
      ++out.ancestor_violations;
      continue;
    }
    const auto da = out.tree.node(a).depth, db = out.tree.node(b).depth;
    if (da <= db) reached[i].insert({db - da, b});
    if (db <= da) reached[j].insert({da - db, a});
  }
  for (const auto& r : reached) {
    std::vector<std::size_t> per_offset;
    for (const auto& [off, node] : r) {
      if (per_offset.size() <= static_cast<std::size_t>(off)) per_offset.resize(static_cast<std::size_t>(off) + 1, 0);
      ++per_offset[static_cast<std::size_t>(off)];
    }
    for (std::size_t off = 0; off < per_offset.size(); ++off)
      if (off < 62 && per_offset[off] > (std::size_t{1} << off)) ++out.stab_bound_violations;
  }

  auto& tel = out.telemetry;
  tel.available = s.size();
  for (const auto& rec : out.records) {
    const auto dpt = static_cast<std::size_t>(rec.depth);
    if (tel.level_fraction.size() <= dpt) tel.level_fraction.resize(dpt + 1, 1.0);
    tel.level_fraction[dpt] = std::min(tel.level_fraction[dpt], rec.fraction);
    if (rec.slow_decay) ++tel.slow_decay_nodes;
    if (rec.direct) ++tel.direct_nodes;
  }
  tel.feasibility = feasibility_estimate(g.order(), opt.k, tel.level_fraction);
  return out;
}

}  // namespace sepdraw
