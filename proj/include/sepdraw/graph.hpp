#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepdraw/error.hpp"
#include "sepdraw/random.hpp"

namespace sepdraw {

using VertexId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool touches(VertexId x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const {
    return u == o.u || u == o.v || v == o.u || v == o.v;
  }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over an arbitrary sorted set of vertex ids.
///
/// Values are immutable once built. Induced subgraphs keep the ids of the
/// parent so that recursive partitions can be audited against the original.
class Graph {
 public:
  Graph() = default;

  /// Vertices 0..n-1 with the given edges.
  Graph(std::size_t n, std::vector<Edge> edges) : Graph(iota_ids(n), std::move(edges)) {}

  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw InvalidInput("duplicate vertex id");
    }
    for (auto& e : edges_) {
      if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
      e = Edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end()) {
      throw InvalidInput("parallel edge " + std::to_string(it->u) + " " + std::to_string(it->v));
    }
    adjacency_.assign(vertices_.size(), {});
    for (const auto& e : edges_) {
      const auto iu = index_of(e.u);
      const auto iv = index_of(e.v);
      if (!iu || !iv) {
        throw InvalidInput("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                           " has an endpoint that is not a vertex");
      }
      adjacency_[*iu].push_back(*iv);
      adjacency_[*iv].push_back(*iu);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
  }

  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> index_of(VertexId id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  bool has_vertex(VertexId id) const { return index_of(id).has_value(); }

  std::size_t checked_index(VertexId id) const {
    auto i = index_of(id);
    if (!i) throw InvalidInput("unknown vertex id " + std::to_string(id));
    return *i;
  }

  VertexId id_at(std::size_t index) const { return vertices_[index]; }

  /// Neighbours as local indices, sorted.
  std::span<const std::size_t> neighbors_of_index(std::size_t index) const {
    return adjacency_[index];
  }

  std::vector<VertexId> neighbors(VertexId id) const {
    std::vector<VertexId> out;
    for (auto j : adjacency_[checked_index(id)]) out.push_back(vertices_[j]);
    return out;
  }

  std::size_t degree(VertexId id) const { return adjacency_[checked_index(id)].size(); }
  std::size_t degree_of_index(std::size_t index) const { return adjacency_[index].size(); }

  std::optional<std::size_t> edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }
  bool has_edge(VertexId a, VertexId b) const { return a != b && edge_index(Edge(a, b)).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  static std::vector<VertexId> iota_ids(std::size_t n) {
    std::vector<VertexId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
    return ids;
  }

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Sum of squared degrees.
inline std::int64_t ssqd(const Graph& g) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto d = static_cast<std::int64_t>(g.degree_of_index(i));
    total += d * d;
  }
  return total;
}

/// Number of edge pairs sharing an endpoint: sum of C(d, 2).
inline std::int64_t bds(const Graph& g) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto d = static_cast<std::int64_t>(g.degree_of_index(i));
    total += d * (d - 1) / 2;
  }
  return total;
}

inline Graph induced_subgraph(const Graph& g, std::span<const VertexId> subset) {
  std::vector<char> keep(g.order(), 0);
  std::vector<VertexId> ids;
  ids.reserve(subset.size());
  for (auto id : subset) {
    const auto i = g.checked_index(id);
    if (!keep[i]) {
      keep[i] = 1;
      ids.push_back(id);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep[*g.index_of(e.u)] && keep[*g.index_of(e.v)]) edges.push_back(e);
  }
  return Graph(std::move(ids), std::move(edges));
}

inline Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& subset) {
  return induced_subgraph(g, std::span<const VertexId>(subset));
}

/// Same vertex set, without the listed edges (those absent from g are ignored).
inline Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> sorted(removed.begin(), removed.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Edge> kept;
  kept.reserve(g.size());
  std::set_difference(g.edges().begin(), g.edges().end(), sorted.begin(), sorted.end(),
                      std::back_inserter(kept));
  return Graph(g.vertices(), std::move(kept));
}

/// Connected components as sorted lists of vertex ids, ordered by smallest id.
inline std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<VertexId>> out;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      out.back().push_back(g.id_at(x));
      for (auto y : g.neighbors_of_index(x)) {
        if (comp[y] < 0) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// Number of edges of g with both endpoints in `subset` (given as a membership mask by index).
inline std::size_t count_induced_edges(const Graph& g, const std::vector<char>& member_by_index) {
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (member_by_index[*g.index_of(e.u)] && member_by_index[*g.index_of(e.v)]) ++count;
  }
  return count;
}

namespace generators {

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(i - 1, i);
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

/// K_{1,leaves}; vertex 0 is the centre.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

/// rows x cols lattice; vertex (r, c) has id r * cols + c.
inline Graph grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto id = r * cols + c;
      if (c + 1 < cols) e.emplace_back(id, id + 1);
      if (r + 1 < rows) e.emplace_back(id, id + cols);
    }
  }
  return Graph(rows * cols, e);
}

inline Graph empty(std::size_t n) { return Graph(n, {}); }

/// G(n, p): pairs (i, j), i < j, visited in lexicographic order, one unit draw each.
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.unit() < p) e.emplace_back(i, j);
  return Graph(n, e);
}

/// Disjoint union; ids of `b` are shifted past the largest id of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const VertexId shift = a.empty() ? 0 : a.vertices().back() + 1;
  std::vector<VertexId> ids = a.vertices();
  std::vector<Edge> e = a.edges();
  for (auto v : b.vertices()) ids.push_back(v + shift);
  for (const auto& x : b.edges()) e.emplace_back(x.u + shift, x.v + shift);
  return Graph(std::move(ids), std::move(e));
}

}  // namespace generators

}  // namespace sepdraw
