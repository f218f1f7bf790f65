#pragma once

// Balanced and edge-balanced vertex separators.
//
// A separator S of G comes with a partition V = V1 + V2 + S with no edge
// between V1 and V2. Every search below evaluates a candidate S by taking the
// connected components of G - S and grouping them into two sides with a
// subset-sum program, so any S reported is valid by construction; results are
// additionally re-checked by verify_separator() before they are returned.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepdraw/error.hpp"
#include "sepdraw/graph.hpp"
#include "sepdraw/random.hpp"
#include "sepdraw/ratio.hpp"

namespace sepdraw {

enum class SeparatorBackend { automatic, exact, heuristic };

inline const char* to_string(SeparatorBackend b) {
  switch (b) {
    case SeparatorBackend::automatic: return "automatic";
    case SeparatorBackend::exact: return "exact";
    case SeparatorBackend::heuristic: return "heuristic";
  }
  return "?";
}

struct SeparatorOptions {
  SeparatorBackend backend = SeparatorBackend::automatic;
  /// automatic uses exhaustive search when at most this many vertices may enter S
  std::size_t exact_limit = 16;
  std::uint64_t seed = 0;
  /// BFS sources tried by the heuristic
  std::size_t seeds = 8;
  /// maximum admissible separator size; exceeding it is reported as Infeasible
  std::optional<std::size_t> budget;
};

struct SeparatorResult {
  std::vector<VertexId> separator;
  std::vector<VertexId> part1;
  std::vector<VertexId> part2;
  std::optional<Ratio> balance_r;
  std::optional<Ratio> edge_balance_r;
  std::size_t total_vertices = 0;
  std::size_t total_edges = 0;
  std::size_t part1_edges = 0;
  std::size_t part2_edges = 0;
  std::string backend;
  /// auxiliary vertices attached per edge by the edge-balancing reduction
  std::optional<std::int64_t> aux_per_edge;
  /// which case of the combined construction produced the result
  std::string branch;

  std::size_t size() const { return separator.size(); }
};

/// Independent re-check of a SeparatorResult against g. Returns the list of
/// violated invariants (empty when the result is valid).
inline std::vector<std::string> verify_separator(const Graph& g, const SeparatorResult& r) {
  std::vector<std::string> bad;
  std::vector<int> label(g.order(), -2);
  auto put = [&](const std::vector<VertexId>& ids, int lab, const char* name) {
    for (auto id : ids) {
      const auto i = g.index_of(id);
      if (!i) {
        bad.push_back(std::string(name) + " contains unknown vertex " + std::to_string(id));
        continue;
      }
      if (label[*i] != -2) bad.push_back("vertex " + std::to_string(id) + " listed twice");
      label[*i] = lab;
    }
  };
  put(r.separator, -1, "separator");
  put(r.part1, 0, "part1");
  put(r.part2, 1, "part2");
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (label[i] == -2) bad.push_back("vertex " + std::to_string(g.id_at(i)) + " not covered");
  }
  std::size_t e1 = 0, e2 = 0;
  for (const auto& e : g.edges()) {
    const int a = label[*g.index_of(e.u)], b = label[*g.index_of(e.v)];
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) {
      bad.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins the parts");
    }
    if (a == 0 && b == 0) ++e1;
    if (a == 1 && b == 1) ++e2;
  }
  const auto n = static_cast<std::int64_t>(g.order());
  const auto m = static_cast<std::int64_t>(g.size());
  if (r.balance_r) {
    if (!r.balance_r->admits(static_cast<std::int64_t>(r.part1.size()), n) ||
        !r.balance_r->admits(static_cast<std::int64_t>(r.part2.size()), n)) {
      bad.push_back("vertex balance " + r.balance_r->str() + " violated");
    }
  }
  if (r.edge_balance_r) {
    if (!r.edge_balance_r->admits(static_cast<std::int64_t>(e1), m) ||
        !r.edge_balance_r->admits(static_cast<std::int64_t>(e2), m)) {
      bad.push_back("edge balance " + r.edge_balance_r->str() + " violated");
    }
  }
  if (r.total_vertices != g.order() || r.total_edges != g.size() || r.part1_edges != e1 ||
      r.part2_edges != e2) {
    bad.push_back("cached counts disagree with recount");
  }
  return bad;
}

namespace detail {

/// Side label per vertex index: -1 separator, 0 or 1 a side.
using Labels = std::vector<std::int8_t>;

/// Searches separators of `h` whose vertices are drawn from `eligible`, such
/// that the components of h - S can be grouped into two sides each holding at
/// most `cap_vertices` vertices and, optionally, at most `cap_edges` edges.
///
/// With `aux_per_edge` = t > 0 the search acts on h augmented by t private
/// vertices per edge, each adjacent to both endpoints, without building it:
/// such a vertex can never be a separator vertex, it belongs to the component
/// of any endpoint outside S, and it is an isolated unit when both endpoints
/// are in S. Vertex weights and caps then count the augmented graph.
class SeparatorSearch {
 public:
  SeparatorSearch(const Graph& h, std::vector<char> eligible, std::int64_t cap_vertices,
                  std::optional<std::int64_t> cap_edges = std::nullopt, std::int64_t aux_per_edge = 0)
      : h_(h), eligible_(std::move(eligible)), cap_v_(cap_vertices), cap_e_(cap_edges),
        aux_(aux_per_edge) {
    for (std::size_t i = 0; i < h_.order(); ++i)
      if (eligible_[i]) eligible_list_.push_back(i);
  }

  std::size_t eligible_count() const { return eligible_list_.size(); }

  /// Grouping of the components of h - S, or nullopt when no grouping meets the caps.
  std::optional<Labels> evaluate(const std::vector<char>& in_sep) const {
    const std::size_t n = h_.order();
    std::vector<int> comp(n, -1);
    std::vector<std::int64_t> w, e;
    std::vector<std::size_t> stack;
    std::int64_t loose = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (in_sep[s]) {
        if (aux_ > 0)
          for (auto y : h_.neighbors_of_index(s)) loose += in_sep[y] && y > s ? aux_ : 0;
        continue;
      }
      if (comp[s] >= 0) continue;
      const int c = static_cast<int>(w.size());
      w.push_back(0);
      e.push_back(0);
      comp[s] = c;
      stack.push_back(s);
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        ++w[c];
        for (auto y : h_.neighbors_of_index(x)) {
          if (in_sep[y]) {
            w[c] += aux_;
            continue;
          }
          if (y > x) {
            ++e[c];
            w[c] += aux_;
          }
          if (comp[y] < 0) {
            comp[y] = c;
            stack.push_back(y);
          }
        }
      }
    }
    auto sides = group(w, e, loose);
    if (!sides) return std::nullopt;
    Labels lab(n, -1);
    for (std::size_t i = 0; i < n; ++i)
      if (!in_sep[i]) lab[i] = (*sides)[comp[i]];
    return lab;
  }

  /// Minimum-size feasible S; among minima the most balanced split, then the
  /// lexicographically smallest S.
  std::optional<Labels> exact(std::optional<std::size_t> budget) const {
    const std::size_t k = eligible_list_.size();
    const std::size_t max_size = budget ? std::min(*budget, k) : k;
    std::vector<char> in_sep(h_.order(), 0);
    std::vector<std::size_t> pick;
    for (std::size_t size = 0; size <= max_size; ++size) {
      pick.resize(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      std::optional<Labels> best;
      std::int64_t best_gap = 0;
      while (true) {
        std::fill(in_sep.begin(), in_sep.end(), 0);
        for (auto p : pick) in_sep[eligible_list_[p]] = 1;
        if (auto lab = evaluate(in_sep)) {
          std::int64_t gap = 0;
          for (auto x : *lab) gap += x == 0 ? 1 : (x == 1 ? -1 : 0);
          gap = gap < 0 ? -gap : gap;
          if (!best || gap < best_gap) {
            best = std::move(lab);
            best_gap = gap;
          }
        }
        // next combination in lexicographic order
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == k - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (best) return best;
    }
    return std::nullopt;
  }

  /// Level cuts of BFS trees from several sources, pruned greedily; best of all sources.
  std::optional<Labels> heuristic(std::uint64_t seed, std::size_t seed_count,
                                  std::optional<std::size_t> budget) const {
    std::optional<Labels> best;
    std::vector<VertexId> best_ids;
    for (auto source : sources(seed, seed_count)) {
      auto lab = from_source(source);
      if (!lab) continue;
      auto ids = separator_ids(*lab);
      if (!best || ids.size() < best_ids.size() ||
          (ids.size() == best_ids.size() && ids < best_ids)) {
        best = std::move(lab);
        best_ids = std::move(ids);
      }
    }
    if (!best) {
      // every eligible vertex removed, then pruned
      std::vector<char> in_sep(h_.order(), 0);
      for (auto i : eligible_list_) in_sep[i] = 1;
      if (evaluate(in_sep)) {
        prune(in_sep);
        best = evaluate(in_sep);
        best_ids = separator_ids(*best);
      }
    }
    if (best && budget && best_ids.size() > *budget) return std::nullopt;
    return best;
  }

  std::vector<VertexId> separator_ids(const Labels& lab) const {
    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < lab.size(); ++i)
      if (lab[i] < 0) ids.push_back(h_.id_at(i));
    return ids;
  }

 private:
  std::vector<std::size_t> sources(std::uint64_t seed, std::size_t count) const {
    std::vector<std::size_t> out;
    if (eligible_list_.empty()) return out;
    auto add = [&](std::size_t s) {
      if (out.size() < count && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    add(eligible_list_.front());
    // pseudo-peripheral: farthest eligible vertex from the first, twice
    std::size_t far = eligible_list_.front();
    for (int sweep = 0; sweep < 2; ++sweep) {
      const auto dist = bfs(far);
      std::size_t arg = far;
      for (auto i : eligible_list_)
        if (dist[i] != kUnreached && dist[i] > dist[arg]) arg = i;
      far = arg;
      add(far);
    }
    std::size_t maxdeg = eligible_list_.front();
    for (auto i : eligible_list_)
      if (h_.degree_of_index(i) > h_.degree_of_index(maxdeg)) maxdeg = i;
    add(maxdeg);
    add(eligible_list_.back());
    Rng rng(seed);
    for (std::size_t tries = 0; out.size() < std::min(count, eligible_list_.size()) && tries < 8 * count; ++tries) {
      add(eligible_list_[rng.below(eligible_list_.size())]);
    }
    return out;
  }

  static constexpr std::size_t kUnreached = SIZE_MAX;

  std::vector<std::size_t> bfs(std::size_t source) const {
    std::vector<std::size_t> dist(h_.order(), kUnreached);
    std::vector<std::size_t> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto x = queue[head];
      for (auto y : h_.neighbors_of_index(x)) {
        if (dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    return dist;
  }

  std::optional<Labels> from_source(std::size_t source) const {
    const auto dist = bfs(source);
    std::size_t depth = 0;
    for (auto d : dist)
      if (d != kUnreached) depth = std::max(depth, d);
    std::vector<std::vector<std::size_t>> levels(depth + 1);
    for (auto i : eligible_list_)
      if (dist[i] != kUnreached) levels[dist[i]].push_back(i);
    std::vector<std::size_t> order(levels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return levels[a].size() < levels[b].size();
    });
    std::vector<char> in_sep(h_.order(), 0);
    if (evaluate(in_sep)) return evaluate(in_sep);
    for (auto l : order) {
      if (levels[l].empty()) continue;
      std::fill(in_sep.begin(), in_sep.end(), 0);
      for (auto i : levels[l]) in_sep[i] = 1;
      if (evaluate(in_sep)) {
        prune(in_sep);
        return evaluate(in_sep);
      }
    }
    return std::nullopt;
  }

  /// Greedily returns separator vertices to the graph while the caps still hold.
  void prune(std::vector<char>& in_sep) const {
    for (std::size_t i = 0; i < in_sep.size(); ++i) {
      if (!in_sep[i]) continue;
      in_sep[i] = 0;
      if (!evaluate(in_sep)) in_sep[i] = 1;
    }
  }

  /// Assigns each component (weight w, edges e) to side 0 or 1 under the caps,
  /// most balanced by vertex count first, then by edge count.
  std::optional<std::vector<std::int8_t>> group(const std::vector<std::int64_t>& w,
                                                const std::vector<std::int64_t>& e,
                                                std::int64_t loose) const {
    std::int64_t total_w = loose, total_e = 0, units = loose;
    std::vector<std::size_t> items;
    for (std::size_t c = 0; c < w.size(); ++c) {
      total_w += w[c];
      total_e += e[c];
      if (w[c] == 1 && e[c] == 0) {
        ++units;
      } else {
        items.push_back(c);
      }
    }
    if (cap_e_) return group2d(w, e, items, units, total_w, total_e);
    std::int64_t item_w = total_w - units;
    const std::size_t words = static_cast<std::size_t>(item_w / 64 + 1);
    std::vector<std::vector<std::uint64_t>> reach(items.size() + 1, std::vector<std::uint64_t>(words, 0));
    reach[0][0] = 1;
    for (std::size_t k = 0; k < items.size(); ++k) {
      const auto shift = static_cast<std::size_t>(w[items[k]]);
      const auto& prev = reach[k];
      auto& next = reach[k + 1];
      next = prev;
      const std::size_t ws = shift / 64, bs = shift % 64;
      for (std::size_t i = words; i-- > ws;) {
        std::uint64_t v = prev[i - ws] << bs;
        if (bs && i - ws >= 1) v |= prev[i - ws - 1] >> (64 - bs);
        next[i] |= v;
      }
    }
    const auto& last = reach.back();
    std::int64_t best_score = -1, best_x = -1, best_s = -1;
    for (std::int64_t x = 0; x <= item_w; ++x) {
      if (!((last[static_cast<std::size_t>(x / 64)] >> (x % 64)) & 1)) continue;
      const std::int64_t lo = std::max(x, total_w - cap_v_);
      const std::int64_t hi = std::min(x + units, cap_v_);
      if (lo > hi) continue;
      std::int64_t s = std::clamp<std::int64_t>(total_w / 2, lo, hi);
      if (total_w % 2 == 1 && s < hi && s == total_w / 2 && std::abs(total_w - 2 * (s + 1)) < std::abs(total_w - 2 * s)) ++s;
      const std::int64_t score = std::abs(total_w - 2 * s);
      if (best_score < 0 || score < best_score) {
        best_score = score;
        best_x = x;
        best_s = s;
      }
    }
    if (best_score < 0) return std::nullopt;
    std::vector<std::int8_t> side(w.size(), 1);
    std::int64_t x = best_x;
    for (std::size_t k = items.size(); k-- > 0;) {
      const bool without = (reach[k][static_cast<std::size_t>(x / 64)] >> (x % 64)) & 1;
      if (!without) {
        side[items[k]] = 0;
        x -= w[items[k]];
      }
    }
    std::int64_t need = best_s - best_x;
    for (std::size_t c = 0; c < w.size() && need > 0; ++c) {
      if (w[c] == 1 && e[c] == 0) {
        side[c] = 0;
        --need;
      }
    }
    return side;
  }

  std::optional<std::vector<std::int8_t>> group2d(const std::vector<std::int64_t>& w,
                                                  const std::vector<std::int64_t>& e,
                                                  const std::vector<std::size_t>& items,
                                                  std::int64_t units, std::int64_t total_w,
                                                  std::int64_t total_e) const {
    const std::int64_t cap_e = *cap_e_;
    const std::int64_t item_w = total_w - units;
    const std::size_t ew = static_cast<std::size_t>(total_e / 64 + 1);
    const std::size_t cells = static_cast<std::size_t>(item_w + 1) * ew;
    if (cells * (items.size() + 1) > (std::size_t{1} << 25)) {
      throw InvalidInput("joint vertex/edge grouping too large for the exact program");
    }
    // reach[k][x * ew + word]: after k items, weight x and edge count bit
    std::vector<std::vector<std::uint64_t>> reach(items.size() + 1, std::vector<std::uint64_t>(cells, 0));
    reach[0][0] = 1;
    for (std::size_t k = 0; k < items.size(); ++k) {
      const auto dw = w[items[k]];
      const auto de = static_cast<std::size_t>(e[items[k]]);
      const auto& prev = reach[k];
      auto& next = reach[k + 1];
      next = prev;
      const std::size_t ws = de / 64, bs = de % 64;
      for (std::int64_t x = 0; x + dw <= item_w; ++x) {
        const std::uint64_t* src = &prev[static_cast<std::size_t>(x) * ew];
        std::uint64_t* dst = &next[static_cast<std::size_t>(x + dw) * ew];
        for (std::size_t i = ew; i-- > ws;) {
          std::uint64_t v = src[i - ws] << bs;
          if (bs && i - ws >= 1) v |= src[i - ws - 1] >> (64 - bs);
          dst[i] |= v;
        }
      }
    }
    auto bit = [&](const std::vector<std::uint64_t>& layer, std::int64_t x, std::int64_t ea) {
      return (layer[static_cast<std::size_t>(x) * ew + static_cast<std::size_t>(ea / 64)] >> (ea % 64)) & 1;
    };
    std::int64_t best_x = -1, best_e = -1, best_s = -1;
    std::pair<std::int64_t, std::int64_t> best_score{-1, -1};
    for (std::int64_t x = 0; x <= item_w; ++x) {
      const std::int64_t lo = std::max(x, total_w - cap_v_);
      const std::int64_t hi = std::min(x + units, cap_v_);
      if (lo > hi) continue;
      const std::int64_t s = std::clamp<std::int64_t>((total_w + 1) / 2, lo, hi);
      for (std::int64_t ea = std::max<std::int64_t>(0, total_e - cap_e); ea <= std::min(total_e, cap_e); ++ea) {
        if (!bit(reach.back(), x, ea)) continue;
        const std::pair<std::int64_t, std::int64_t> score{std::abs(total_w - 2 * s), std::abs(total_e - 2 * ea)};
        if (best_x < 0 || score < best_score) {
          best_score = score;
          best_x = x;
          best_e = ea;
          best_s = s;
        }
      }
    }
    if (best_x < 0) return std::nullopt;
    std::vector<std::int8_t> side(w.size(), 1);
    std::int64_t x = best_x, ea = best_e;
    for (std::size_t k = items.size(); k-- > 0;) {
      if (!bit(reach[k], x, ea)) {
        side[items[k]] = 0;
        x -= w[items[k]];
        ea -= e[items[k]];
      }
    }
    std::int64_t need = best_s - best_x;
    for (std::size_t c = 0; c < w.size() && need > 0; ++c) {
      if (w[c] == 1 && e[c] == 0) {
        side[c] = 0;
        --need;
      }
    }
    return side;
  }

  const Graph& h_;
  std::vector<char> eligible_;
  std::vector<std::size_t> eligible_list_;
  std::int64_t cap_v_;
  std::optional<std::int64_t> cap_e_;
  std::int64_t aux_ = 0;
};

inline bool use_exact(const SeparatorOptions& opt, std::size_t eligible) {
  switch (opt.backend) {
    case SeparatorBackend::exact: return true;
    case SeparatorBackend::heuristic: return false;
    case SeparatorBackend::automatic: return eligible <= opt.exact_limit;
  }
  return false;
}

/// Runs the configured backend. Throws Infeasible when nothing (within budget) exists.
inline std::pair<Labels, std::string> run_search(const SeparatorSearch& search,
                                                 const SeparatorOptions& opt) {
  const bool exact = use_exact(opt, search.eligible_count());
  auto lab = exact ? search.exact(opt.budget) : search.heuristic(opt.seed, opt.seeds, opt.budget);
  if (!lab) {
    throw Infeasible(opt.budget ? "no separator within budget " + std::to_string(*opt.budget)
                                : std::string("no admissible separator exists"));
  }
  return {std::move(*lab), exact ? "exact" : "heuristic"};
}

/// Builds a result on g from per-index labels; part1 holds the smallest non-separator id.
inline SeparatorResult assemble(const Graph& g, const Labels& lab) {
  SeparatorResult r;
  std::int8_t first_side = -1;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (lab[i] >= 0) {
      first_side = lab[i];
      break;
    }
  }
  std::vector<char> in1(g.order(), 0), in2(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto id = g.id_at(i);
    if (lab[i] < 0) {
      r.separator.push_back(id);
    } else if (lab[i] == first_side) {
      r.part1.push_back(id);
      in1[i] = 1;
    } else {
      r.part2.push_back(id);
      in2[i] = 1;
    }
  }
  r.total_vertices = g.order();
  r.total_edges = g.size();
  r.part1_edges = count_induced_edges(g, in1);
  r.part2_edges = count_induced_edges(g, in2);
  return r;
}

inline void recount(const Graph& g, SeparatorResult& r) {
  std::vector<char> in1(g.order(), 0), in2(g.order(), 0);
  for (auto id : r.part1) in1[g.checked_index(id)] = 1;
  for (auto id : r.part2) in2[g.checked_index(id)] = 1;
  std::sort(r.separator.begin(), r.separator.end());
  std::sort(r.part1.begin(), r.part1.end());
  std::sort(r.part2.begin(), r.part2.end());
  r.total_vertices = g.order();
  r.total_edges = g.size();
  r.part1_edges = count_induced_edges(g, in1);
  r.part2_edges = count_induced_edges(g, in2);
}

inline void ensure_valid(const Graph& g, const SeparatorResult& r, const char* what) {
  const auto bad = verify_separator(g, r);
  if (!bad.empty()) throw InvariantViolation(std::string(what) + ": " + bad.front());
}

}  // namespace detail

/// r-balanced separator: |V1|, |V2| <= r|V|. Exact minimum for small graphs,
/// seeded BFS-level heuristic otherwise.
inline SeparatorResult balanced_separator(const Graph& g, Ratio r, const SeparatorOptions& opt = {}) {
  if (r < Ratio(1, 2) || r >= Ratio(1, 1)) {
    throw InvalidInput("balanced separator needs 1/2 <= r < 1, got " + r.str());
  }
  std::vector<char> eligible(g.order(), 1);
  detail::SeparatorSearch search(g, std::move(eligible), r.floor_of(static_cast<std::int64_t>(g.order())));
  auto [lab, backend] = detail::run_search(search, opt);
  auto res = detail::assemble(g, lab);
  res.balance_r = r;
  res.backend = backend;
  detail::ensure_valid(g, res, "balanced_separator");
  return res;
}

/// Smallest t with (2/3)(t+2)/t <= r, i.e. t = ceil(4 / (3r - 2)).
inline std::int64_t aux_vertices_per_edge(Ratio r) {
  if (r <= Ratio(2, 3) || r >= Ratio(1, 1)) {
    throw InvalidInput("edge-balanced separator needs 2/3 < r < 1, got " + r.str());
  }
  const std::int64_t num = 4 * r.den;
  const std::int64_t den = 3 * r.num - 2 * r.den;
  return (num + den - 1) / den;
}

/// r-edge-balanced separator via the auxiliary-vertex reduction: every edge
/// uv receives t private vertices adjacent to u and v, and a 2/3-balanced
/// separator of the augmented graph made of original vertices only is found
/// (the augmentation is implicit, see SeparatorSearch).
/// Isolated vertices are set aside and then given to the smaller part.
inline SeparatorResult edge_balanced_separator(const Graph& g, Ratio r, const SeparatorOptions& opt = {}) {
  const std::int64_t t = aux_vertices_per_edge(r);
  if (!(2 * (t + 2) * r.den <= 3 * t * r.num)) {
    throw InvariantViolation("auxiliary count does not satisfy the balance chain");
  }
  std::vector<VertexId> core, isolated;
  for (std::size_t i = 0; i < g.order(); ++i) {
    (g.degree_of_index(i) > 0 ? core : isolated).push_back(g.id_at(i));
  }

  SeparatorResult res;
  if (!core.empty()) {
    const auto h = induced_subgraph(g, core);
    const auto augmented_order = static_cast<std::int64_t>(h.order()) + t * static_cast<std::int64_t>(h.size());
    detail::SeparatorSearch search(h, std::vector<char>(h.order(), 1), Ratio(2, 3).floor_of(augmented_order),
                                   std::nullopt, t);
    auto [lab, backend] = detail::run_search(search, opt);
    auto projected = detail::assemble(h, lab);
    res.separator = std::move(projected.separator);
    res.part1 = std::move(projected.part1);
    res.part2 = std::move(projected.part2);
    res.backend = backend;
  } else {
    res.backend = "trivial";
  }
  for (auto id : isolated) {
    (res.part1.size() <= res.part2.size() ? res.part1 : res.part2).push_back(id);
  }
  res.edge_balance_r = r;
  res.aux_per_edge = t;
  detail::recount(g, res);
  detail::ensure_valid(g, res, "edge_balanced_separator");
  return res;
}

/// Whether a result's induced edge counts respect the reduction's own bound
/// (2/3)(t+2)/t * m, which is at most r * m.
inline bool edge_balance_chain_holds(const SeparatorResult& r) {
  if (!r.aux_per_edge) return false;
  const std::int64_t t = *r.aux_per_edge;
  const auto m = static_cast<std::int64_t>(r.total_edges);
  auto ok = [&](std::size_t e) { return 3 * t * static_cast<std::int64_t>(e) <= 2 * (t + 2) * m; };
  return ok(r.part1_edges) && ok(r.part2_edges);
}

/// epsilon used by combined_separator: min(1/24, (r - 3/4)/2).
inline Ratio combined_epsilon(Ratio r) {
  const Ratio half_gap = (r - Ratio(3, 4)) * Ratio(1, 2);
  return std::min(Ratio(1, 24), half_gap);
}

/// A set that is simultaneously 2/3-balanced and r-edge-balanced (r > 3/4),
/// following the three-case construction. If a case's output fails either
/// balance check, the components of G - Z are regrouped under both caps, and
/// as a last resort Z is grown greedily; `branch` records what happened.
inline SeparatorResult combined_separator(const Graph& g, Ratio r, const SeparatorOptions& opt = {}) {
  if (r <= Ratio(3, 4) || r >= Ratio(1, 1)) {
    throw InvalidInput("combined separator needs 3/4 < r < 1, got " + r.str());
  }
  const Ratio eps = combined_epsilon(r);
  if (!(r * (Ratio(1, 3) - eps) > Ratio(1, 1) - r)) {
    throw InvariantViolation("epsilon too large for r = " + r.str());
  }
  const Ratio two_thirds(2, 3);
  const auto n = static_cast<std::int64_t>(g.order());
  const auto m = static_cast<std::int64_t>(g.size());

  auto finish = [&](SeparatorResult res, std::string branch) {
    res.balance_r = two_thirds;
    res.edge_balance_r = r;
    res.branch = std::move(branch);
    detail::recount(g, res);
    return res;
  };
  auto valid = [&](const SeparatorResult& res) { return verify_separator(g, res).empty(); };
  auto join = [](std::vector<VertexId> a, const std::vector<VertexId>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  const auto first = balanced_separator(g, two_thirds, opt);
  const bool swap12 = first.part1_edges > first.part2_edges;
  const auto& v1 = swap12 ? first.part2 : first.part1;
  const auto& v2 = swap12 ? first.part1 : first.part2;
  const auto e2 = static_cast<std::int64_t>(swap12 ? first.part1_edges : first.part2_edges);

  SeparatorResult candidate;
  std::string branch;
  if (r.admits(e2, m)) {
    candidate = first;
    branch = "first";
  } else {
    const auto g2 = induced_subgraph(g, v2);
    const auto second = edge_balanced_separator(g2, two_thirds + eps, opt);
    const bool swap34 = second.part1.size() > second.part2.size();
    const auto& v3 = swap34 ? second.part2 : second.part1;
    const auto& v4 = swap34 ? second.part1 : second.part2;
    const auto s_union = join(first.separator, second.separator);
    if (3 * static_cast<std::int64_t>(v4.size()) >= n) {
      candidate.separator = s_union;
      candidate.part1 = join(v1, v3);
      candidate.part2 = v4;
      branch = "second";
    } else {
      std::vector<VertexId> v5, v6, s3;
      if (v1.size() >= 1) {
        const auto third = balanced_separator(induced_subgraph(g, v1), two_thirds, opt);
        const bool swap56 = third.part1.size() > third.part2.size();
        v5 = swap56 ? third.part2 : third.part1;
        v6 = swap56 ? third.part1 : third.part2;
        s3 = third.separator;
      }
      candidate.separator = join(s_union, s3);
      candidate.part1 = join(v3, v6);
      candidate.part2 = join(v4, v5);
      branch = "third";
    }
    candidate.backend = first.backend;
  }
  auto res = finish(candidate, branch);
  if (valid(res)) return res;

  // Regroup the components of G - Z under both caps, growing Z if needed.
  std::vector<char> in_sep(g.order(), 0);
  for (auto id : res.separator) in_sep[g.checked_index(id)] = 1;
  detail::SeparatorSearch joint(g, std::vector<char>(g.order(), 1), two_thirds.floor_of(n), r.floor_of(m));
  std::string suffix = "+regrouped";
  auto lab = joint.evaluate(in_sep);
  while (!lab) {
    suffix = "+grown";
    // add the highest-degree vertex of the largest remaining component
    std::vector<int> comp(g.order(), -1);
    std::vector<std::size_t> sizes;
    for (std::size_t s = 0; s < g.order(); ++s) {
      if (in_sep[s] || comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = static_cast<int>(sizes.size());
      std::size_t cnt = 0;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        ++cnt;
        for (auto y : g.neighbors_of_index(x)) {
          if (!in_sep[y] && comp[y] < 0) {
            comp[y] = comp[s];
            stack.push_back(y);
          }
        }
      }
      sizes.push_back(cnt);
    }
    const auto big = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::size_t pick = SIZE_MAX, best_deg = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (comp[i] != big) continue;
      std::size_t deg = 0;
      for (auto y : g.neighbors_of_index(i)) deg += !in_sep[y];
      if (pick == SIZE_MAX || deg > best_deg) {
        pick = i;
        best_deg = deg;
      }
    }
    in_sep[pick] = 1;
    lab = joint.evaluate(in_sep);
  }
  auto regrouped = detail::assemble(g, *lab);
  regrouped.backend = res.backend;
  return finish(regrouped, branch + suffix);
}

}  // namespace sepdraw
