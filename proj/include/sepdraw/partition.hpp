#pragma once

// Potential-reducing splits of a drawn graph.
//
// A split removes a set of cut edges and distributes the vertices over parts.
// Parts are subgraphs of G minus the cut edges: a cut edge may have both
// endpoints in one part, in which case it is simply absent from that part.
// Every edge of G is either cut or belongs to exactly one part.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepdraw/drawing.hpp"
#include "sepdraw/error.hpp"
#include "sepdraw/graph.hpp"
#include "sepdraw/random.hpp"
#include "sepdraw/ratio.hpp"
#include "sepdraw/separators.hpp"

namespace sepdraw {

struct SplitPart {
  Graph graph;
  StraightLineDrawing drawing;
  std::int64_t phi = 0;
};

struct SplitResult {
  std::string mode;
  std::vector<Edge> cut_edges;  // sorted
  std::vector<SplitPart> parts;
  std::int64_t parent_phi = 0;
  /// conflict: the separator met its edge-balance contract and every part has
  /// phi <= 3/4 parent; careful: every part has phi <= 7/8 parent.
  bool contract_held = true;
  std::vector<std::string> warnings;
  /// careful: index t of the boundary realized by parts[0]
  std::optional<std::size_t> boundary_index;
  std::size_t moved = 0;       // vertices moved by the rounding step
  std::size_t candidates = 0;  // disjoint prefixes that were available
  std::size_t separator_size = 0;
};

struct SplitOptions {
  SeparatorOptions separator;
  /// blocks used by multiway_split when assembling size groups
  std::size_t blocks = 8;
  /// careful_split refuses graphs with fewer vertices
  std::size_t n_min = 64;
  /// disjoint rounding prefixes looked for by careful_split
  std::size_t q = 8;
};

/// Independent re-check of a split: vertex partition, edge accounting, stored
/// potentials, subadditivity and (when given) exact part orders.
inline std::vector<std::string> verify_split(const StraightLineDrawing& d, const SplitResult& res,
                                             const std::vector<std::size_t>* sizes = nullptr) {
  std::vector<std::string> bad;
  const auto& g = d.graph();
  std::vector<int> owner(g.order(), -1);
  for (std::size_t p = 0; p < res.parts.size(); ++p) {
    const auto& part = res.parts[p];
    for (auto v : part.graph.vertices()) {
      const auto i = g.index_of(v);
      if (!i) {
        bad.push_back("part " + std::to_string(p) + " has unknown vertex " + std::to_string(v));
        continue;
      }
      if (owner[*i] >= 0) bad.push_back("vertex " + std::to_string(v) + " in two parts");
      owner[*i] = static_cast<int>(p);
      if (part.drawing.position(v) != d.position(v)) {
        bad.push_back("vertex " + std::to_string(v) + " moved in part drawing");
      }
    }
    for (const auto& e : part.graph.edges()) {
      if (!g.has_edge(e.u, e.v)) bad.push_back("part edge not in graph");
    }
    if (part.graph.order() != part.drawing.graph().order() || !(part.graph == part.drawing.graph())) {
      bad.push_back("part drawing does not draw part graph");
    }
    if (phi(part.drawing) != part.phi) bad.push_back("stored part potential is stale");
  }
  for (std::size_t i = 0; i < g.order(); ++i)
    if (owner[i] < 0) bad.push_back("vertex " + std::to_string(g.id_at(i)) + " in no part");
  if (!std::is_sorted(res.cut_edges.begin(), res.cut_edges.end()) ||
      std::adjacent_find(res.cut_edges.begin(), res.cut_edges.end()) != res.cut_edges.end()) {
    bad.push_back("cut edges not sorted and unique");
  }
  for (const auto& e : g.edges()) {
    const bool cut = std::binary_search(res.cut_edges.begin(), res.cut_edges.end(), e);
    int holders = 0;
    for (const auto& part : res.parts) holders += part.graph.has_vertex(e.u) && part.graph.has_edge(e.u, e.v);
    if (cut && holders != 0) bad.push_back("cut edge still present in a part");
    if (!cut && holders != 1) {
      bad.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " neither cut nor kept");
    }
    const int a = owner[*g.index_of(e.u)], b = owner[*g.index_of(e.v)];
    if (a != b && !cut) bad.push_back("edge between parts not cut");
  }
  for (const auto& e : res.cut_edges)
    if (!g.has_edge(e.u, e.v)) bad.push_back("cut edge not in graph");
  if (res.parent_phi != phi(d)) bad.push_back("parent potential is stale");
  std::int64_t total = 0;
  for (const auto& part : res.parts) total += part.phi;
  if (total > res.parent_phi) bad.push_back("part potentials exceed parent potential");
  if (sizes) {
    if (sizes->size() != res.parts.size()) {
      bad.push_back("part count differs from size spec");
    } else {
      for (std::size_t p = 0; p < sizes->size(); ++p)
        if (res.parts[p].graph.order() != (*sizes)[p]) bad.push_back("part " + std::to_string(p) + " has wrong order");
    }
  }
  return bad;
}

namespace detail {

inline SplitPart make_part(const StraightLineDrawing& d, std::vector<VertexId> vertices, std::vector<Edge> edges) {
  SplitPart p;
  p.graph = Graph(std::move(vertices), std::move(edges));
  p.drawing = d.restrict_to(p.graph);
  p.phi = phi(p.drawing);
  return p;
}

/// Builds parts from a side label per vertex index of d.graph(); edges of the
/// graph inside a side are kept unless listed in `removed`.
inline SplitResult split_by_sides(const StraightLineDrawing& d, const std::vector<int>& side, std::size_t count,
                                  const std::vector<Edge>& removed) {
  const auto& g = d.graph();
  std::vector<std::vector<VertexId>> verts(count);
  std::vector<std::vector<Edge>> edges(count);
  std::vector<Edge> cut;
  for (std::size_t i = 0; i < g.order(); ++i) verts[side[i]].push_back(g.id_at(i));
  for (const auto& e : g.edges()) {
    const int a = side[*g.index_of(e.u)], b = side[*g.index_of(e.v)];
    if (a != b || std::binary_search(removed.begin(), removed.end(), e)) {
      cut.push_back(e);
    } else {
      edges[a].push_back(e);
    }
  }
  SplitResult res;
  res.cut_edges = std::move(cut);
  for (std::size_t p = 0; p < count; ++p) res.parts.push_back(make_part(d, std::move(verts[p]), std::move(edges[p])));
  res.parent_phi = phi(d);
  return res;
}

}  // namespace detail

/// Two-way split driven by a 3/4-edge-balanced separator of the conflict graph.
///
/// The separator's vertices are edges of G; they become the cut. The two
/// separated edge classes E1, E2 give the parts: V_i = endpoints of E_i, and
/// the remaining vertices are dealt out one at a time (by id) to the smaller
/// part. The part with the smaller minimum id comes first.
inline SplitResult conflict_split(const Graph& g, const StraightLineDrawing& d, const SplitOptions& opt = {}) {
  if (!(d.graph() == g)) throw InvalidInput("drawing does not draw this graph");
  const std::size_t n = g.order();
  const auto cg = conflict_graph(d);
  std::vector<Edge> cut;
  std::vector<int> side(n, -1);
  bool contract = true;
  std::size_t sep_size = 0;
  if (cg.graph.order() > 0) {
    const auto sep = edge_balanced_separator(cg.graph, Ratio(3, 4), opt.separator);
    contract = verify_separator(cg.graph, sep).empty();
    sep_size = sep.size();
    for (auto id : sep.separator) cut.push_back(cg.base_edges[id]);
    auto mark = [&](const std::vector<VertexId>& ids, int s) {
      for (auto id : ids) {
        const auto& e = cg.base_edges[id];
        for (auto v : {e.u, e.v}) {
          auto& slot = side[*g.index_of(v)];
          if (slot >= 0 && slot != s) throw InvariantViolation("separated edge classes share a vertex");
          slot = s;
        }
      }
    };
    mark(sep.part1, 0);
    mark(sep.part2, 1);
  }
  std::size_t count[2] = {0, 0};
  for (auto s : side)
    if (s >= 0) ++count[s];
  for (auto& s : side) {
    if (s >= 0) continue;
    s = count[1] < count[0] ? 1 : 0;
    ++count[s];
  }
  if (n >= 2 && (count[0] == 0 || count[1] == 0)) {
    // move a vertex of least degree (then least id) into the empty part
    const int full = count[0] == 0 ? 1 : 0;
    std::size_t pick = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (side[i] != full) continue;
      if (!found || g.degree_of_index(i) < g.degree_of_index(pick)) {
        pick = i;
        found = true;
      }
    }
    side[pick] = 1 - full;
  }
  // the part holding the smallest id goes first
  if (n > 0 && side[0] == 1)
    for (auto& s : side) s = 1 - s;
  std::sort(cut.begin(), cut.end());
  auto res = detail::split_by_sides(d, side, 2, cut);
  res.mode = "conflict";
  res.separator_size = sep_size;
  for (const auto& p : res.parts) contract = contract && 4 * p.phi <= 3 * res.parent_phi;
  res.contract_held = contract;
  return res;
}

/// Rooted tree of a recursive partition. Every leaf is a single vertex; the
/// children of a node partition its vertex set.
struct TreeNode {
  std::vector<VertexId> vertices;  // sorted
  int parent = -1;
  std::vector<int> children;
  int depth = 0;
  /// edges deleted when this node was split (a superset of the edges between children)
  std::vector<Edge> removed;
  /// potential of the graph that was split at this node
  std::int64_t phi = 0;
  std::size_t edge_count = 0;
};

class PartitionTree {
 public:
  PartitionTree() = default;
  explicit PartitionTree(Graph base) : base_(std::move(base)) {}

  const Graph& base() const { return base_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(int t) const { return nodes_[static_cast<std::size_t>(t)]; }
  std::size_t size() const { return nodes_.size(); }

  int add_node(TreeNode node) {
    nodes_.push_back(std::move(node));
    const int id = static_cast<int>(nodes_.size() - 1);
    if (nodes_.back().parent >= 0) nodes_[static_cast<std::size_t>(nodes_.back().parent)].children.push_back(id);
    return id;
  }
  TreeNode& mutable_node(int t) { return nodes_[static_cast<std::size_t>(t)]; }

  /// Must be called once all nodes exist.
  void finalize() {
    leaf_.assign(base_.order(), -1);
    for (std::size_t t = 0; t < nodes_.size(); ++t) {
      const auto& nd = nodes_[t];
      if (nd.children.empty()) {
        if (nd.vertices.size() != 1) throw InvariantViolation("tree leaf is not a single vertex");
        leaf_[base_.checked_index(nd.vertices[0])] = static_cast<int>(t);
      }
    }
    for (auto l : leaf_)
      if (l < 0) throw InvariantViolation("vertex without a tree leaf");
  }

  int depth() const {
    int d = 0;
    for (const auto& nd : nodes_) d = std::max(d, nd.depth);
    return d;
  }

  int leaf_of(VertexId v) const { return leaf_[base_.checked_index(v)]; }

  /// Reflexive: a node is its own ancestor.
  bool is_ancestor(int a, int b) const {
    while (b >= 0 && nodes_[static_cast<std::size_t>(b)].depth > nodes_[static_cast<std::size_t>(a)].depth)
      b = nodes_[static_cast<std::size_t>(b)].parent;
    return a == b;
  }

  int lca(int a, int b) const {
    while (a != b) {
      if (nodes_[static_cast<std::size_t>(a)].depth >= nodes_[static_cast<std::size_t>(b)].depth) {
        a = nodes_[static_cast<std::size_t>(a)].parent;
      } else {
        b = nodes_[static_cast<std::size_t>(b)].parent;
      }
    }
    return a;
  }

  /// Node where the endpoints of e are separated.
  int edge_node(const Edge& e) const { return lca(leaf_of(e.u), leaf_of(e.v)); }

  /// Edges of the base graph whose endpoints lie in different children of t.
  std::vector<Edge> cut_set(int t) const {
    std::vector<Edge> out;
    for (const auto& e : base_.edges())
      if (edge_node(e) == t) out.push_back(e);
    return out;
  }

  /// Nodes on the tree path between the leaves of u and v.
  std::vector<int> path(VertexId u, VertexId v) const {
    int a = leaf_of(u), b = leaf_of(v);
    const int top = lca(a, b);
    std::vector<int> left, right;
    for (; a != top; a = nodes_[static_cast<std::size_t>(a)].parent) left.push_back(a);
    for (; b != top; b = nodes_[static_cast<std::size_t>(b)].parent) right.push_back(b);
    left.push_back(top);
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
  }

  /// Leaves from left to right; nodes listed in `flipped` visit children in reverse.
  std::vector<VertexId> leaf_order(const std::vector<char>* flipped = nullptr) const {
    std::vector<VertexId> out;
    if (nodes_.empty()) return out;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      const auto& nd = nodes_[static_cast<std::size_t>(t)];
      if (nd.children.empty()) {
        out.push_back(nd.vertices[0]);
        continue;
      }
      const bool flip = flipped && (*flipped)[static_cast<std::size_t>(t)];
      if (flip) {
        for (auto c : nd.children) stack.push_back(c);
      } else {
        for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
      }
    }
    return out;
  }

  /// Structural problems: children not partitioning the parent, bad depths, leaves.
  std::vector<std::string> verify() const {
    std::vector<std::string> bad;
    if (nodes_.empty()) {
      if (base_.order() > 0) bad.push_back("empty tree for nonempty graph");
      return bad;
    }
    if (nodes_[0].vertices != base_.vertices()) bad.push_back("root does not hold every vertex");
    for (std::size_t t = 0; t < nodes_.size(); ++t) {
      const auto& nd = nodes_[t];
      if (nd.children.empty()) {
        if (nd.vertices.size() != 1) bad.push_back("leaf " + std::to_string(t) + " is not a singleton");
        continue;
      }
      std::vector<VertexId> joined;
      for (auto c : nd.children) {
        const auto& ch = nodes_[static_cast<std::size_t>(c)];
        if (ch.parent != static_cast<int>(t) || ch.depth != nd.depth + 1) bad.push_back("bad child link");
        if (ch.vertices.empty()) bad.push_back("empty child at node " + std::to_string(t));
        joined.insert(joined.end(), ch.vertices.begin(), ch.vertices.end());
      }
      std::sort(joined.begin(), joined.end());
      if (joined != nd.vertices) bad.push_back("children of node " + std::to_string(t) + " do not partition it");
    }
    return bad;
  }

 private:
  Graph base_;
  std::vector<TreeNode> nodes_;
  std::vector<int> leaf_;
};

namespace detail {

inline void grow_conflict_tree(PartitionTree& tree, const StraightLineDrawing& d, int parent, int depth,
                               const SplitOptions& opt) {
  const auto& g = d.graph();
  TreeNode node;
  node.vertices = g.vertices();
  node.parent = parent;
  node.depth = depth;
  node.phi = phi(d);
  node.edge_count = g.size();
  if (g.order() <= 1) {
    tree.add_node(std::move(node));
    return;
  }
  if (g.order() == 2) {
    node.removed = g.edges();
    const int t = tree.add_node(std::move(node));
    for (auto v : g.vertices()) {
      TreeNode leaf;
      leaf.vertices = {v};
      leaf.parent = t;
      leaf.depth = depth + 1;
      tree.add_node(std::move(leaf));
    }
    return;
  }
  auto local = opt;
  local.separator.seed = mix_seed(opt.separator.seed, tree.size());
  auto split = conflict_split(g, d, local);
  node.removed = split.cut_edges;
  const int t = tree.add_node(std::move(node));
  for (auto& part : split.parts) grow_conflict_tree(tree, part.drawing, t, depth + 1, opt);
}

}  // namespace detail

/// Recursive conflict_split down to single vertices (parts of two vertices are
/// split into singletons by id).
inline PartitionTree conflict_tree(const StraightLineDrawing& d, const SplitOptions& opt = {}) {
  PartitionTree tree(d.graph());
  if (d.graph().order() > 0) detail::grow_conflict_tree(tree, d, -1, 0, opt);
  tree.finalize();
  return tree;
}

/// Up to `q` pairwise disjoint vertex sets of size `length`, each the prefix of
/// a leaf order of `tree` under some choice of child flips.
inline std::vector<std::vector<VertexId>> disjoint_prefixes(const PartitionTree& tree, std::size_t length,
                                                            std::size_t q) {
  std::vector<std::vector<VertexId>> out;
  const auto& base = tree.base();
  if (tree.size() == 0 || length == 0 || length > base.order()) return out;
  std::vector<char> used(base.order(), 0);
  auto clean = [&](const TreeNode& nd) {
    for (auto v : nd.vertices)
      if (used[base.checked_index(v)]) return false;
    return true;
  };
  // prefix of `need` vertices drawn from the subtree of t, avoiding used ones
  auto take = [&](auto&& self, int t, std::size_t need, std::vector<VertexId>& acc) -> bool {
    const auto& nd = tree.node(t);
    if (need == 0) return true;
    if (nd.children.empty()) {
      if (need != 1 || used[base.checked_index(nd.vertices[0])]) return false;
      acc.push_back(nd.vertices[0]);
      return true;
    }
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<int> order = nd.children;
      if (flip) std::reverse(order.begin(), order.end());
      const auto mark = acc.size();
      std::size_t rem = need;
      bool ok = true;
      for (auto c : order) {
        if (rem == 0) break;
        const auto& ch = tree.node(c);
        if (ch.vertices.size() <= rem) {
          if (!clean(ch)) {
            ok = false;
            break;
          }
          acc.insert(acc.end(), ch.vertices.begin(), ch.vertices.end());
          rem -= ch.vertices.size();
        } else {
          ok = self(self, c, rem, acc);
          rem = 0;
          break;
        }
      }
      if (ok && rem == 0) return true;
      acc.resize(mark);
    }
    return false;
  };
  while (out.size() < q) {
    std::vector<VertexId> acc;
    if (!take(take, 0, length, acc)) break;
    for (auto v : acc) used[base.checked_index(v)] = 1;
    std::sort(acc.begin(), acc.end());
    out.push_back(std::move(acc));
  }
  return out;
}

/// Checks 0 = a_0 < a_1 < ... < a_B = n with a_{i+1} - a_i <= 2 (a_{j+1} - a_j).
inline void validate_boundaries(const std::vector<std::size_t>& a, std::size_t n) {
  if (a.size() < 3) throw InvalidInput("size spec needs at least two blocks");
  if (a.front() != 0 || a.back() != n) throw InvalidInput("size spec must run from 0 to n = " + std::to_string(n));
  std::size_t lo = SIZE_MAX, hi = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] <= a[i - 1]) throw InvalidInput("size spec boundaries must increase strictly");
    lo = std::min(lo, a[i] - a[i - 1]);
    hi = std::max(hi, a[i] - a[i - 1]);
  }
  if (hi > 2 * lo) throw InvalidInput("size spec block ratio exceeds 2");
}

/// a_i = floor(i n / B).
inline std::vector<std::size_t> uniform_boundaries(std::size_t n, std::size_t blocks) {
  std::vector<std::size_t> a(blocks + 1);
  for (std::size_t i = 0; i <= blocks; ++i) a[i] = i * n / blocks;
  return a;
}

namespace detail {

inline SplitResult careful_split_impl(const Graph& g, const StraightLineDrawing& d, const std::vector<std::size_t>& a,
                                      const SplitOptions& opt) {
  const std::size_t n = g.order();
  validate_boundaries(a, n);
  auto base = conflict_split(g, d, opt);
  const std::int64_t parent = base.parent_phi;
  // admissible orders for either part, with the boundary each realizes
  std::map<std::size_t, std::pair<std::size_t, bool>> targets;  // size -> (t, this part is the prefix)
  for (std::size_t t = a.size() - 2; t >= 1; --t) {
    targets[a[t]] = {t, true};
    if (!targets.count(n - a[t])) targets[n - a[t]] = {t, false};
  }
  auto order_parts = [&](SplitResult res, std::size_t first_size) {
    const auto [t, prefix] = targets.at(first_size);
    if (!prefix) std::swap(res.parts[0], res.parts[1]);
    res.boundary_index = t;
    return res;
  };
  const std::size_t n0 = base.parts[0].graph.order();
  const std::size_t n1 = base.parts[1].graph.order();
  base.mode = "careful";
  base.contract_held = true;
  for (const auto& p : base.parts) base.contract_held = base.contract_held && 8 * p.phi <= 7 * parent;
  if (targets.count(n0)) return order_parts(std::move(base), n0);
  if (targets.count(n1)) {
    std::swap(base.parts[0], base.parts[1]);
    return order_parts(std::move(base), n1);
  }

  // small part S (size r) must reach a target: grow it from the large part,
  // or shrink it into the large part
  const std::size_t small = n0 <= n1 ? 0 : 1;
  const std::size_t r = base.parts[small].graph.order();
  auto above = targets.upper_bound(r);
  auto below = targets.lower_bound(r);
  std::vector<std::pair<std::size_t, std::size_t>> plans;  // (donor part, new size of small part)
  if (above != targets.end()) plans.emplace_back(1 - small, above->first);
  if (below != targets.begin()) plans.emplace_back(small, std::prev(below)->first);

  std::optional<SplitResult> fallback;
  std::int64_t fallback_worst = 0;
  for (const auto& [donor, goal] : plans) {
    const std::size_t recipient = 1 - donor;
    const std::size_t delta = donor == small ? r - goal : goal - r;
    const auto& dpart = base.parts[donor];
    const auto& rpart = base.parts[recipient];
    auto local = opt;
    local.separator.seed = mix_seed(opt.separator.seed, 77);
    const auto tree = conflict_tree(dpart.drawing, local);
    const auto prefixes = disjoint_prefixes(tree, delta, opt.q);
    if (prefixes.size() < opt.q) {
      base.warnings.push_back("only " + std::to_string(prefixes.size()) + " disjoint prefixes of length " +
                              std::to_string(delta) + " (wanted " + std::to_string(opt.q) + ")");
    }
    for (const auto& prefix : prefixes) {
      std::vector<int> side(n, -1);
      for (auto v : dpart.graph.vertices()) side[*g.index_of(v)] = static_cast<int>(donor);
      for (auto v : rpart.graph.vertices()) side[*g.index_of(v)] = static_cast<int>(recipient);
      for (auto v : prefix) side[*g.index_of(v)] = static_cast<int>(recipient);
      // previously cut edges stay cut; edges of the donor leaving the prefix become cut
      auto res = split_by_sides(d, side, 2, base.cut_edges);
      res.mode = "careful";
      res.moved = delta;
      res.candidates = prefixes.size();
      res.separator_size = base.separator_size;
      res.warnings = base.warnings;
      std::int64_t worst = 0;
      for (const auto& p : res.parts) worst = std::max(worst, p.phi);
      res.contract_held = 8 * worst <= 7 * parent;
      const std::size_t first = res.parts[small].graph.order();
      if (small == 1) std::swap(res.parts[0], res.parts[1]);
      res = order_parts(std::move(res), first);
      if (res.contract_held) return res;
      if (!fallback || worst < fallback_worst) {
        fallback = std::move(res);
        fallback_worst = worst;
      }
    }
  }
  if (!fallback) throw InvariantViolation("careful split found no rounding candidate");
  fallback->warnings.push_back("no transfer kept both parts within 7/8 of the parent potential");
  return std::move(*fallback);
}

}  // namespace detail

/// Two-way split whose first part has exactly a_t vertices for some 1 <= t < B,
/// with both parts' potentials at most 7/8 of the parent's (flagged otherwise).
inline SplitResult careful_split(const Graph& g, const StraightLineDrawing& d, const std::vector<std::size_t>& a,
                                 const SplitOptions& opt = {}) {
  if (!(d.graph() == g)) throw InvalidInput("drawing does not draw this graph");
  if (g.order() < opt.n_min) {
    throw InvalidInput("careful split needs at least " + std::to_string(opt.n_min) + " vertices, got " +
                       std::to_string(g.order()));
  }
  return detail::careful_split_impl(g, d, a, opt);
}

/// Validates 2s part sizes: even count, sum n, and consecutive pair sums
/// m_i = n_{2i-1} + n_{2i} within a factor 2 of each other.
inline void validate_part_sizes(const std::vector<std::size_t>& sizes, std::size_t n) {
  if (sizes.empty() || sizes.size() % 2 != 0) throw InvalidInput("part sizes must come in pairs");
  std::size_t total = 0, lo = SIZE_MAX, hi = 0;
  for (std::size_t i = 0; i < sizes.size(); i += 2) {
    const auto m = sizes[i] + sizes[i + 1];
    total += m;
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  if (total != n) throw InvalidInput("part sizes sum to " + std::to_string(total) + ", graph has " + std::to_string(n));
  if (hi > 2 * lo) throw InvalidInput("pair sums differ by more than a factor 2");
}

/// Groups `weights` (all positive) into at most `blocks` blocks whose sums are
/// within a factor 2: longest first onto the lightest block, then improving
/// moves and swaps. Fewer blocks are used if needed.
inline std::vector<std::vector<std::size_t>> assemble_blocks(const std::vector<std::size_t>& weights,
                                                             std::size_t blocks) {
  std::vector<std::size_t> order(weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return weights[x] > weights[y]; });
  for (std::size_t b = std::min(blocks, weights.size()); b >= 1; --b) {
    std::vector<std::vector<std::size_t>> out(b);
    std::vector<std::size_t> sum(b, 0);
    for (auto i : order) {
      const auto k = static_cast<std::size_t>(std::min_element(sum.begin(), sum.end()) - sum.begin());
      out[k].push_back(i);
      sum[k] += weights[i];
    }
    for (int round = 0; round < 200; ++round) {
      const auto hi = static_cast<std::size_t>(std::max_element(sum.begin(), sum.end()) - sum.begin());
      const auto lo = static_cast<std::size_t>(std::min_element(sum.begin(), sum.end()) - sum.begin());
      if (sum[hi] <= 2 * sum[lo]) break;
      const auto spread = sum[hi] - sum[lo];
      bool improved = false;
      for (std::size_t x = 0; x < out[hi].size() && !improved; ++x) {
        const auto wx = weights[out[hi][x]];
        if (2 * wx < 2 * spread && wx > 0 && out[hi].size() > 1) {
          out[lo].push_back(out[hi][x]);
          out[hi].erase(out[hi].begin() + static_cast<std::ptrdiff_t>(x));
          sum[hi] -= wx;
          sum[lo] += wx;
          improved = true;
          break;
        }
        for (std::size_t y = 0; y < out[lo].size(); ++y) {
          const auto wy = weights[out[lo][y]];
          if (wx > wy && 2 * (wx - wy) < 2 * spread) {
            std::swap(out[hi][x], out[lo][y]);
            sum[hi] = sum[hi] - wx + wy;
            sum[lo] = sum[lo] - wy + wx;
            improved = true;
            break;
          }
        }
      }
      if (!improved) break;
    }
    const auto mx = *std::max_element(sum.begin(), sum.end());
    const auto mn = *std::min_element(sum.begin(), sum.end());
    if (mx <= 2 * mn) {
      for (auto& blk : out) std::sort(blk.begin(), blk.end());
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  throw InvariantViolation("block assembly failed");
}

/// One recorded split of the multiway recursion.
struct SplitRecord {
  int depth = 0;
  std::size_t order = 0;
  std::int64_t phi = 0;
  std::size_t cut = 0;
  bool contract_held = true;
  int height = 0;
};

struct MultiwayReport {
  std::vector<SplitRecord> splits;
  int height = 0;
};

namespace detail {

/// Cuts a drawn graph into a prefix of `first` vertices and the rest, along a
/// leaf order of its conflict tree.
inline SplitResult slice_by_ordering(const StraightLineDrawing& d, std::size_t first, const SplitOptions& opt) {
  const auto tree = conflict_tree(d, opt);
  const auto order = tree.leaf_order();
  const auto& g = d.graph();
  std::vector<int> side(g.order(), 1);
  for (std::size_t i = 0; i < first; ++i) side[*g.index_of(order[i])] = 0;
  auto res = split_by_sides(d, side, 2, {});
  res.mode = "slice";
  return res;
}

inline int multiway_recurse(const StraightLineDrawing& d, const std::vector<std::size_t>& groups,
                            const std::vector<std::size_t>& sizes, const SplitOptions& opt, int depth,
                            std::vector<std::pair<std::size_t, SplitPart>>& out, std::vector<Edge>& cut,
                            MultiwayReport& report) {
  const auto& g = d.graph();
  auto record = [&](const SplitResult& res, int height) {
    SplitRecord r;
    r.depth = depth;
    r.order = g.order();
    r.phi = res.parent_phi;
    r.cut = res.cut_edges.size();
    r.contract_held = res.contract_held;
    r.height = height;
    report.splits.push_back(r);
    cut.insert(cut.end(), res.cut_edges.begin(), res.cut_edges.end());
  };
  if (groups.size() == 1) {
    const auto gi = groups[0];
    auto res = slice_by_ordering(d, sizes[2 * gi], opt);
    record(res, 0);
    out.emplace_back(2 * gi, std::move(res.parts[0]));
    out.emplace_back(2 * gi + 1, std::move(res.parts[1]));
    return 0;
  }
  std::vector<std::size_t> weights;
  for (auto gi : groups) weights.push_back(sizes[2 * gi] + sizes[2 * gi + 1]);
  const auto blocks = assemble_blocks(weights, opt.blocks);
  std::vector<std::size_t> a{0};
  for (const auto& blk : blocks) {
    std::size_t s = 0;
    for (auto i : blk) s += weights[i];
    a.push_back(a.back() + s);
  }
  auto local = opt;
  local.separator.seed = mix_seed(opt.separator.seed, report.splits.size() + 1);
  auto res = careful_split_impl(g, d, a, local);
  const auto t = *res.boundary_index;
  std::vector<std::size_t> left, right;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto i : blocks[b]) (b < t ? left : right).push_back(groups[i]);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  const std::size_t slot = report.splits.size();
  record(res, 0);
  const int h1 = multiway_recurse(res.parts[0].drawing, left, sizes, opt, depth + 1, out, cut, report);
  const int h2 = multiway_recurse(res.parts[1].drawing, right, sizes, opt, depth + 1, out, cut, report);
  const int height = 1 + std::max(h1, h2);
  report.splits[slot].height = height;
  return height;
}

}  // namespace detail

/// Splits g into 2s parts of exactly the given orders by recursive careful
/// splits on assembled blocks of size pairs, finishing each pair with a slice
/// of a low-cutwidth ordering.
inline SplitResult multiway_split(const Graph& g, const StraightLineDrawing& d, const std::vector<std::size_t>& sizes,
                                  const SplitOptions& opt = {}, MultiwayReport* report = nullptr) {
  if (!(d.graph() == g)) throw InvalidInput("drawing does not draw this graph");
  validate_part_sizes(sizes, g.order());
  MultiwayReport local_report;
  auto& rep = report ? *report : local_report;
  rep = {};
  SplitResult res;
  res.mode = "multiway";
  res.parent_phi = phi(d);
  std::vector<std::pair<std::size_t, SplitPart>> parts;
  if (g.order() == 0) {
    for (std::size_t i = 0; i < sizes.size(); ++i) parts.emplace_back(i, detail::make_part(d, {}, {}));
  } else {
    std::vector<std::size_t> groups(sizes.size() / 2);
    for (std::size_t i = 0; i < groups.size(); ++i) groups[i] = i;
    rep.height = detail::multiway_recurse(d, groups, sizes, opt, 0, parts, res.cut_edges, rep);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [i, p] : parts) res.parts.push_back(std::move(p));
  std::sort(res.cut_edges.begin(), res.cut_edges.end());
  for (const auto& r : rep.splits) res.contract_held = res.contract_held && r.contract_held;
  return res;
}

}  // namespace sepdraw
