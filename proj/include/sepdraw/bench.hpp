#pragma once

// Size sweeps that track how the produced layouts scale with the potential.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepdraw/drawing.hpp"
#include "sepdraw/error.hpp"
#include "sepdraw/layout.hpp"
#include "sepdraw/pointset_embed.hpp"
#include "sepdraw/random.hpp"

namespace sepdraw {

struct BenchEntry {
  std::size_t size = 0;  // m for grids, n otherwise
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t phi = 0;
  std::int64_t bds = 0;
  std::int64_t width = 0;
  double width_over_sqrt_phi = 0;
  std::int64_t bisection_cut = 0;
  std::int64_t convex_crossings = 0;
  double convex_over_phi_log_n = 0;
  /// convex crossings / (m^2 ln m), grids only
  std::optional<double> grid_ratio;
  std::optional<std::int64_t> embed_crossings;
  std::optional<double> embed_over_bds_log_n;
};

struct SeriesFit {
  std::string name;
  double min = 0, max = 0;
  double spread = 0;  // max / min
};

struct BenchReport {
  std::string family;
  std::uint64_t seed = 0;
  std::vector<BenchEntry> entries;
  std::vector<SeriesFit> fits;
  /// least-squares slope of log(width) against log(phi)
  std::optional<double> width_exponent;
};

struct BenchOptions {
  double p = 0.3;
  /// embeddings onto n^3 points are run up to this order
  std::size_t embed_limit = 25;
  SplitOptions split;
};

inline const std::vector<std::string>& bench_families() {
  static const std::vector<std::string> f{"grid", "gnp", "convex"};
  return f;
}

/// Instance of a family at one size; reproducible from (family, size, seed).
inline StraightLineDrawing bench_instance(const std::string& family, std::size_t size, std::uint64_t seed,
                                          double p = 0.3) {
  if (family == "grid") return drawings::grid(size, size);
  const auto s = mix_seed(seed, size);
  if (family == "gnp") {
    const auto g = generators::gnp(size, p, s);
    return drawings::random_general_position(g, s);
  }
  if (family == "convex") return drawings::convex(generators::gnp(size, p, s));
  throw InvalidInput("unknown bench family '" + family + "' (grid, gnp, convex)");
}

inline BenchReport bench(const std::string& family, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                         const BenchOptions& opt = {}) {
  BenchReport rep;
  rep.family = family;
  rep.seed = seed;
  bench_instance(family, 1, seed, opt.p);  // rejects unknown families even for an empty sweep
  for (auto size : sizes) {
    const auto d = bench_instance(family, size, seed, opt.p);
    const auto& g = d.graph();
    BenchEntry e;
    e.size = size;
    e.n = g.order();
    e.m = g.size();
    e.phi = phi(d);
    e.bds = bds(g);
    auto split = opt.split;
    split.separator.seed = mix_seed(seed, 1000 + size);
    const auto cd = convex_drawing(g, d, split);
    const auto o = make_ordering(g, cd.circular_order);
    e.width = o.width;
    e.width_over_sqrt_phi = e.phi > 0 ? static_cast<double>(e.width) / std::sqrt(static_cast<double>(e.phi)) : 0.0;
    if (g.order() >= 3) e.bisection_cut = bisection_from_ordering(g, o).cut;
    e.convex_crossings = cd.crossings;
    const double logn = std::log(static_cast<double>(std::max<std::size_t>(g.order(), 2)));
    e.convex_over_phi_log_n = e.phi > 0 ? static_cast<double>(cd.crossings) / (static_cast<double>(e.phi) * logn) : 0.0;
    if (family == "grid" && size >= 2) {
      const double mm = static_cast<double>(size);
      e.grid_ratio = static_cast<double>(cd.crossings) / (mm * mm * std::log(mm));
    }
    if (g.order() >= 3 && g.order() <= opt.embed_limit && e.bds > 0) {
      const auto n3 = g.order() * g.order() * g.order();
      const auto pts = drawings::modular_parabola_points(n3, mix_seed(seed, 2000 + size));
      EmbedOptions eo;
      eo.split = split;
      const auto emb = embed_on_pointset(g, d, pts, eo);
      e.embed_crossings = emb.crossings;
      e.embed_over_bds_log_n = static_cast<double>(emb.crossings) / (static_cast<double>(e.bds) * logn);
    }
    rep.entries.push_back(e);
  }
  auto fit = [&](const std::string& name, auto get) {
    SeriesFit f;
    f.name = name;
    bool any = false;
    for (const auto& e : rep.entries) {
      const std::optional<double> v = get(e);
      if (!v || *v <= 0) continue;
      f.min = any ? std::min(f.min, *v) : *v;
      f.max = any ? std::max(f.max, *v) : *v;
      any = true;
    }
    if (!any) return;
    f.spread = f.max / f.min;
    rep.fits.push_back(f);
  };
  fit("width_over_sqrt_phi", [](const BenchEntry& e) { return std::optional<double>(e.width_over_sqrt_phi); });
  fit("convex_over_phi_log_n", [](const BenchEntry& e) { return std::optional<double>(e.convex_over_phi_log_n); });
  fit("grid_ratio", [](const BenchEntry& e) { return e.grid_ratio; });
  fit("embed_over_bds_log_n", [](const BenchEntry& e) { return e.embed_over_bds_log_n; });
  // slope of log width on log phi
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (const auto& e : rep.entries) {
    if (e.phi <= 0 || e.width <= 0) continue;
    const double x = std::log(static_cast<double>(e.phi)), y = std::log(static_cast<double>(e.width));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  const double den = static_cast<double>(k) * sxx - sx * sx;
  if (k >= 2 && den > 0) rep.width_exponent = (static_cast<double>(k) * sxy - sx * sy) / den;
  return rep;
}

}  // namespace sepdraw
