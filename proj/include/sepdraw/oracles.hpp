#pragma once

// Exhaustive reference values for small graphs. Nothing here reuses the
// pipeline's search code; graphs are turned into adjacency bitmasks and
// searched directly.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepdraw/error.hpp"
#include "sepdraw/graph.hpp"
#include "sepdraw/ratio.hpp"
#include "sepdraw/separators.hpp"

namespace sepdraw {

inline constexpr std::size_t kCutwidthOracleLimit = 18;
inline constexpr std::size_t kBisectionOracleLimit = 20;
inline constexpr std::size_t kConvexOracleLimit = 9;
inline constexpr std::size_t kSeparatorOracleLimit = 16;

namespace oracle_detail {

inline void require_order(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit) {
    throw InvalidInput(std::string(what) + " oracle handles at most " + std::to_string(limit) + " vertices, got " +
                       std::to_string(g.order()));
  }
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    const auto a = *g.index_of(e.u), b = *g.index_of(e.v);
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  return adj;
}

inline std::int64_t edges_inside(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  std::int64_t twice = 0;
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) twice += std::popcount(adj[std::countr_zero(rest)] & mask);
  return twice / 2;
}

}  // namespace oracle_detail

/// Minimum cutwidth. best[S] is the least possible maximum gap cut when the
/// vertices of S fill the first |S| positions; the gap after S cuts the
/// edges leaving S.
inline std::int64_t exact_cutwidth(const Graph& g) {
  oracle_detail::require_order(g, kCutwidthOracleLimit, "cutwidth");
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  const auto adj = oracle_detail::adjacency_masks(g);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::int32_t> boundary(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t prev = s & (s - 1);
    boundary[s] = boundary[prev] + std::popcount(adj[v]) - 2 * std::popcount(adj[v] & prev);
  }
  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  std::vector<std::int32_t> best(std::size_t{1} << n, kInf);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::int32_t b = kInf;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const std::uint32_t prev = s & ~(1u << std::countr_zero(rest));
      b = std::min(b, best[prev]);
    }
    // the final gap (s = full) is not a gap
    best[s] = s == full ? b : std::max(b, boundary[s]);
  }
  return best[full];
}

/// Minimum number of edges between two sides, each with at most floor(2n/3) vertices.
inline std::int64_t exact_bisection_width(const Graph& g) {
  oracle_detail::require_order(g, kBisectionOracleLimit, "bisection");
  const std::size_t n = g.order();
  const std::size_t cap = 2 * n / 3;
  if (n == 0) return 0;
  if (n - cap > cap) throw Infeasible("no bipartition of " + std::to_string(n) + " vertices is admissible");
  const auto adj = oracle_detail::adjacency_masks(g);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  // vertex 0 stays on the left; the mirror image has the same cut
  for (std::uint32_t left = 1; left < (1u << n); left += 2) {
    const auto l = static_cast<std::size_t>(std::popcount(left));
    if (l > cap || n - l > cap) continue;
    std::int64_t cut = 0;
    for (std::uint32_t rest = left; rest; rest &= rest - 1)
      cut += std::popcount(adj[std::countr_zero(rest)] & ~left & ((1u << n) - 1));
    best = std::min(best, cut);
  }
  return best;
}

/// Fewest interleaving edge pairs over all circular orders (vertex 0 pinned first).
inline std::int64_t exact_convex_optimum(const Graph& g) {
  oracle_detail::require_order(g, kConvexOracleLimit, "convex drawing");
  const std::size_t n = g.order();
  if (n < 4) return 0;
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (const auto& e : g.edges()) es.emplace_back(*g.index_of(e.u), *g.index_of(e.v));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> pos(n);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < es.size() && count < best; ++i) {
      auto a = pos[es[i].first], b = pos[es[i].second];
      if (a > b) std::swap(a, b);
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        const auto c = pos[es[j].first], d = pos[es[j].second];
        const bool c_in = a < c && c < b;
        const bool d_in = a < d && d < b;
        const bool c_end = c == a || c == b;
        const bool d_end = d == a || d == b;
        if (!c_end && !d_end && c_in != d_in) ++count;
      }
    }
    best = std::min(best, count);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

/// Smallest S for which the components of G - S split into two sides within
/// the balance: at most floor(r n) vertices per side, or with `edge_mode`
/// at most floor(r m) induced edges per side. Every S is tried in order of
/// size, and every grouping of the remaining components.
inline SeparatorResult exact_min_separator(const Graph& g, Ratio r, bool edge_mode,
                                           std::optional<std::size_t> budget = std::nullopt) {
  oracle_detail::require_order(g, kSeparatorOracleLimit, "separator");
  if (r.num <= 0 || r >= Ratio(1, 1)) throw InvalidInput("separator oracle needs 0 < r < 1, got " + r.str());
  const std::size_t n = g.order();
  const auto adj = oracle_detail::adjacency_masks(g);
  const std::uint32_t full = n == 0 ? 0u : ((1u << n) - 1);
  const auto vcap = r.floor_of(static_cast<std::int64_t>(n));
  const auto ecap = r.floor_of(static_cast<std::int64_t>(g.size()));
  const std::size_t limit = budget ? std::min(*budget, n) : n;

  for (std::size_t size = 0; size <= limit; ++size) {
    // all S of this size, in increasing mask order
    std::vector<std::uint32_t> sets;
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) == size) sets.push_back(s);
      if (s == full) break;
    }
    for (const auto s : sets) {
      std::vector<std::uint32_t> comps;
      std::uint32_t left = full & ~s;
      while (left) {
        std::uint32_t comp = left & (~left + 1), frontier = comp;
        while (frontier) {
          std::uint32_t grow = 0;
          for (std::uint32_t rest = frontier; rest; rest &= rest - 1) grow |= adj[std::countr_zero(rest)];
          grow &= left & ~comp;
          comp |= grow;
          frontier = grow;
        }
        comps.push_back(comp);
        left &= ~comp;
      }
      const std::size_t c = comps.size();
      const std::uint64_t groupings = c == 0 ? 1 : (std::uint64_t{1} << (c - 1));
      for (std::uint64_t pick = 0; pick < groupings; ++pick) {
        std::uint32_t side1 = 0;
        for (std::size_t i = 0; i < c; ++i)
          if (i == 0 || !((pick >> (i - 1)) & 1u)) side1 |= comps[i];
        const std::uint32_t side2 = full & ~s & ~side1;
        const auto e1 = oracle_detail::edges_inside(adj, side1);
        const auto e2 = oracle_detail::edges_inside(adj, side2);
        bool ok;
        if (edge_mode) {
          ok = e1 <= ecap && e2 <= ecap;
        } else {
          ok = std::popcount(side1) <= vcap && std::popcount(side2) <= vcap;
        }
        if (!ok) continue;
        SeparatorResult res;
        for (std::size_t i = 0; i < n; ++i) {
          const auto id = g.id_at(i);
          if ((s >> i) & 1u) {
            res.separator.push_back(id);
          } else if ((side1 >> i) & 1u) {
            res.part1.push_back(id);
          } else {
            res.part2.push_back(id);
          }
        }
        std::sort(res.separator.begin(), res.separator.end());
        std::sort(res.part1.begin(), res.part1.end());
        std::sort(res.part2.begin(), res.part2.end());
        (edge_mode ? res.edge_balance_r : res.balance_r) = r;
        res.total_vertices = n;
        res.total_edges = g.size();
        res.part1_edges = static_cast<std::size_t>(e1);
        res.part2_edges = static_cast<std::size_t>(e2);
        res.backend = "oracle";
        return res;
      }
    }
  }
  throw Infeasible("no " + std::string(edge_mode ? "edge-" : "") + "balanced separator of size at most " +
                   std::to_string(limit));
}

enum class Relation { at_least, equal, at_most };

inline const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::at_least: return ">=";
    case Relation::equal: return "=";
    case Relation::at_most: return "<=";
  }
  return "?";
}

/// One comparison of a pipeline value against an oracle value, read as
/// "pipeline <relation> oracle".
struct OracleReport {
  std::string instance;
  std::string quantity;
  std::int64_t oracle_value = 0;
  std::int64_t pipeline_value = 0;
  Relation relation = Relation::at_least;

  bool pass() const {
    switch (relation) {
      case Relation::at_least: return pipeline_value >= oracle_value;
      case Relation::equal: return pipeline_value == oracle_value;
      case Relation::at_most: return pipeline_value <= oracle_value;
    }
    return false;
  }
};

}  // namespace sepdraw
