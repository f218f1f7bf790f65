#pragma once

// JSON encodings (schema 1) of inputs and results. Objects use sorted keys,
// so equal results always print to equal bytes.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sepdraw/bench.hpp"
#include "sepdraw/drawing.hpp"
#include "sepdraw/io.hpp"
#include "sepdraw/layout.hpp"
#include "sepdraw/oracles.hpp"
#include "sepdraw/partition.hpp"
#include "sepdraw/pointset_embed.hpp"
#include "sepdraw/separators.hpp"

namespace sepdraw::json {

using Json = nlohmann::json;

inline constexpr int kSchema = 1;

inline Json point(const Point& p) { return Json::array({p.x, p.y}); }

inline Json points(std::span<const Point> ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(point(p));
  return out;
}

inline Json edges(const std::vector<Edge>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(Json::array({e.u, e.v}));
  return out;
}

inline Json ids(const std::vector<VertexId>& vs) { return Json(vs); }

inline Json graph(const Graph& g) {
  return Json{{"n", g.order()}, {"vertices", ids(g.vertices())}, {"edges", edges(g.edges())}};
}

inline Json separator(const SeparatorResult& r) {
  Json j{{"separator", ids(r.separator)},
         {"part1", ids(r.part1)},
         {"part2", ids(r.part2)},
         {"size", r.size()},
         {"total_vertices", r.total_vertices},
         {"total_edges", r.total_edges},
         {"part1_edges", r.part1_edges},
         {"part2_edges", r.part2_edges},
         {"backend", r.backend}};
  j["balance_r"] = r.balance_r ? Json(r.balance_r->str()) : Json(nullptr);
  j["edge_balance_r"] = r.edge_balance_r ? Json(r.edge_balance_r->str()) : Json(nullptr);
  j["aux_per_edge"] = r.aux_per_edge ? Json(*r.aux_per_edge) : Json(nullptr);
  if (!r.branch.empty()) j["branch"] = r.branch;
  return j;
}

inline Json split(const SplitResult& r) {
  Json parts = Json::array();
  for (const auto& p : r.parts) {
    parts.push_back(Json{{"vertices", ids(p.graph.vertices())}, {"edges", p.graph.size()}, {"phi", p.phi}});
  }
  Json j{{"mode", r.mode},
         {"cut_edges", edges(r.cut_edges)},
         {"cut_size", r.cut_edges.size()},
         {"parts", parts},
         {"parent_phi", r.parent_phi},
         {"contract_held", r.contract_held},
         {"warnings", r.warnings},
         {"moved", r.moved},
         {"candidates", r.candidates},
         {"separator_size", r.separator_size}};
  j["boundary_index"] = r.boundary_index ? Json(*r.boundary_index) : Json(nullptr);
  return j;
}

inline Json multiway_report(const MultiwayReport& rep) {
  Json splits = Json::array();
  for (const auto& s : rep.splits) {
    splits.push_back(Json{{"depth", s.depth},
                          {"order", s.order},
                          {"phi", s.phi},
                          {"cut", s.cut},
                          {"contract_held", s.contract_held},
                          {"height", s.height}});
  }
  return Json{{"height", rep.height}, {"splits", splits}};
}

inline Json tree(const PartitionTree& t) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& nd = t.node(static_cast<int>(i));
    nodes.push_back(Json{{"id", i},
                         {"parent", nd.parent},
                         {"children", nd.children},
                         {"depth", nd.depth},
                         {"vertices", ids(nd.vertices)},
                         {"removed", edges(nd.removed)},
                         {"phi", nd.phi},
                         {"edge_count", nd.edge_count}});
  }
  return Json{{"depth", t.depth()}, {"nodes", nodes}};
}

inline Json ordering(const LinearOrdering& o) {
  return Json{{"order", ids(o.order)},
              {"width", o.width},
              {"profile", o.cut_profile},
              {"level_bound", o.level_bound}};
}

inline Json bisection(const Bisection& b) {
  return Json{{"cut", b.cut}, {"position", b.position}, {"part1", ids(b.part1)}, {"part2", ids(b.part2)}};
}

inline Json charging(const ChargingReport& c) {
  return Json{{"total", c.total},
              {"ancestor_violations", c.ancestor_violations},
              {"path_bound_violations", c.path_bound_violations},
              {"per_edge", c.per_edge},
              {"per_level", c.per_level},
              {"level_phi", c.level_phi}};
}

inline Json convex(const ConvexDrawing& cd) {
  return Json{{"circular_order", ids(cd.circular_order)},
              {"placement", points(cd.drawing.placement())},
              {"crossings", cd.crossings},
              {"interleavings", cd.interleavings},
              {"tree", tree(cd.tree)},
              {"charges", charging(cd.charging)}};
}

inline Json family(const SameTypeFamily& f) {
  Json cert = Json::array();
  for (const auto& t : f.certificate) cert.push_back(Json{{"parts", {t.i, t.j, t.l}}, {"sign", t.sign}});
  Json parts = Json::array();
  for (const auto& p : f.parts) parts.push_back(points(p));
  return Json{{"parts", parts},
              {"certificate", cert},
              {"equalized", f.equalized},
              {"shortfall", f.shortfall},
              {"target", f.target},
              {"part_size", f.part_size},
              {"fraction", f.fraction},
              {"method", f.method}};
}

inline Json embedding(const EmbeddingResult& r) {
  Json recs = Json::array();
  for (const auto& rec : r.records) {
    recs.push_back(Json{{"node", rec.node},
                        {"depth", rec.depth},
                        {"vertices", rec.vertices},
                        {"points", rec.points},
                        {"part_size", rec.part_size},
                        {"fraction", rec.fraction},
                        {"shortfall", rec.shortfall},
                        {"phi", rec.phi},
                        {"max_child_phi", rec.max_child_phi},
                        {"slow_decay", rec.slow_decay},
                        {"direct", rec.direct}});
  }
  const auto& t = r.telemetry;
  return Json{{"placement", points(r.placement)},
              {"crossings", r.crossings},
              {"ancestor_violations", r.ancestor_violations},
              {"stab_bound_violations", r.stab_bound_violations},
              {"tree", tree(r.tree)},
              {"nodes", recs},
              {"telemetry", Json{{"level_fraction", t.level_fraction},
                                 {"feasibility", t.feasibility},
                                 {"available", t.available},
                                 {"slow_decay_nodes", t.slow_decay_nodes},
                                 {"direct_nodes", t.direct_nodes}}}};
}

inline Json oracle_report(const OracleReport& r) {
  return Json{{"instance", r.instance},
              {"quantity", r.quantity},
              {"oracle", r.oracle_value},
              {"pipeline", r.pipeline_value},
              {"relation", to_string(r.relation)},
              {"pass", r.pass()}};
}

inline Json bench(const BenchReport& rep) {
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    entries.push_back(Json{{"size", e.size},
                           {"n", e.n},
                           {"m", e.m},
                           {"phi", e.phi},
                           {"bds", e.bds},
                           {"width", e.width},
                           {"width_over_sqrt_phi", e.width_over_sqrt_phi},
                           {"bisection_cut", e.bisection_cut},
                           {"convex_crossings", e.convex_crossings},
                           {"convex_over_phi_log_n", e.convex_over_phi_log_n},
                           {"grid_ratio", opt(e.grid_ratio)},
                           {"embed_crossings", opt(e.embed_crossings)},
                           {"embed_over_bds_log_n", opt(e.embed_over_bds_log_n)}});
  }
  Json fits = Json::array();
  for (const auto& f : rep.fits) fits.push_back(Json{{"series", f.name}, {"min", f.min}, {"max", f.max}, {"spread", f.spread}});
  return Json{{"family", rep.family},
              {"seed", rep.seed},
              {"entries", entries},
              {"fits", fits},
              {"width_exponent", opt(rep.width_exponent)}};
}

/// Top-level document: schema version, the command and its result.
inline Json document(std::string_view command, Json result) {
  return Json{{"schema", kSchema}, {"command", std::string(command)}, {"result", std::move(result)}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- input forms ----

inline Graph graph_from_json(const Json& j, std::string_view source = "<json>") {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
      throw InvalidInput("expected an object with 'n' and 'edges'");
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("every edge must be a pair [u, v]");
      const auto u = e[0].get<VertexId>(), v = e[1].get<VertexId>();
      if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
      es.emplace_back(u, v);
    }
    return Graph(n, std::move(es));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string(source) + ": " + e.what());
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(source) + ": " + e.what());
  }
}

inline PointSet points_from_json(const Json& j, std::string_view source = "<json>") {
  try {
    if (!j.is_array()) throw InvalidInput("expected a list of [x, y] pairs");
    PointSet out;
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("every point must be a pair [x, y]");
      Point q{p[0].get<std::int64_t>(), p[1].get<std::int64_t>()};
      check_coordinate_range(q);
      out.push_back(q);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string(source) + ": " + e.what());
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(source) + ": " + e.what());
  }
}

inline Json parse(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string(source) + ": " + e.what());
  }
}

inline bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    return c == '{' || c == '[';
  }
  return false;
}

/// Graph from a file (edge list or JSON).
inline Graph load_graph(const std::string& path) {
  const auto text = io::read_file(path);
  return looks_like_json(text) ? graph_from_json(parse(text, path), path) : io::parse_edge_list(text, path);
}

/// Points from a file (CSV or JSON).
inline PointSet load_points(const std::string& path) {
  const auto text = io::read_file(path);
  return looks_like_json(text) ? points_from_json(parse(text, path), path) : io::parse_points_csv(text, path);
}

}  // namespace sepdraw::json
