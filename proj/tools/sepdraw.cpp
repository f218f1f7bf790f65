// sepdraw: command-line front end.
//
// Exit status: 0 ok, 2 bad input, 3 a verifier rejected a result,
// 4 infeasible request.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepdraw/bench.hpp"
#include "sepdraw/sepdraw.hpp"
#include "sepdraw/serialize.hpp"

namespace fs = std::filesystem;
using namespace sepdraw;
using sepdraw::json::Json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitInfeasible = 4;

struct Common {
  std::string graph;
  std::string drawing;
  std::uint64_t seed = 0;
  std::string out;
  std::string out_dir;
  std::string svg;
};

struct Instance {
  Graph graph;
  StraightLineDrawing drawing;
};

// A generator spec wins over a file of the same name only if no such file exists.
Instance load_instance(const Common& c) {
  Instance in;
  if (!fs::exists(c.graph)) {
    if (auto named = io::named_instance(c.graph)) {
      in.graph = named->graph;
      in.drawing = named->drawing;
    } else {
      throw InvalidInput("cannot open " + c.graph + " (not a file or a generator spec)");
    }
  } else {
    in.graph = json::load_graph(c.graph);
    in.drawing = drawings::convex(in.graph);
  }
  if (!c.drawing.empty()) in.drawing = io::make_drawing(in.graph, json::load_points(c.drawing), c.drawing);
  return in;
}

SplitOptions split_options(std::uint64_t seed) {
  SplitOptions o;
  o.separator.seed = seed;
  return o;
}

void require(const std::vector<std::string>& problems, const std::string& what) {
  if (!problems.empty()) throw InvariantViolation(what + ": " + problems.front());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

void emit(const Common& c, const std::string& command, Json result) {
  const auto text = json::dump(json::document(command, std::move(result)));
  std::string dir = c.out_dir;
  if (c.out.empty() && dir.empty()) {
    if (const char* env = std::getenv("SEPDRAW_OUT")) dir = env;
  }
  if (!c.out.empty()) {
    write_text(c.out, text);
  } else if (!dir.empty()) {
    fs::create_directories(dir);
    write_text((fs::path(dir) / (command + ".json")).string(), text);
  } else {
    std::cout << text;
  }
}

std::vector<std::size_t> parse_size_list(const std::string& arg) {
  Json j;
  if (fs::exists(arg)) {
    j = json::parse(io::read_file(arg), arg);
  } else {
    j = json::parse(arg, "--sizes");
  }
  if (!j.is_array()) throw InvalidInput("--sizes: expected a JSON list of non-negative integers");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw InvalidInput("--sizes: expected a JSON list of non-negative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

std::int64_t count_cut(const Graph& g, const std::vector<VertexId>& side) {
  std::set<VertexId> s(side.begin(), side.end());
  std::int64_t cut = 0;
  for (const auto& e : g.edges()) cut += s.count(e.u) != s.count(e.v);
  return cut;
}

// ---- subcommands ----

void run_separator(const Common& c, const std::string& r_text, const std::string& mode, const std::string& backend) {
  const auto in = load_instance(c);
  const auto r = parse_ratio(r_text);
  SeparatorOptions opt;
  opt.seed = c.seed;
  if (backend == "exact") opt.backend = SeparatorBackend::exact;
  else if (backend == "heuristic") opt.backend = SeparatorBackend::heuristic;
  SeparatorResult res;
  if (mode == "balanced") res = balanced_separator(in.graph, r, opt);
  else if (mode == "edge-balanced") res = edge_balanced_separator(in.graph, r, opt);
  else res = combined_separator(in.graph, r, opt);
  require(verify_separator(in.graph, res), "separator");
  emit(c, "separator", json::separator(res));
}

struct PartitionArgs {
  std::string mode = "conflict";
  std::string sizes;
  std::size_t blocks = 8;
  std::size_t q = 8;
  std::size_t n_min = 64;
};

void run_partition(const Common& c, const PartitionArgs& a) {
  const auto in = load_instance(c);
  auto opt = split_options(c.seed);
  opt.blocks = a.blocks;
  opt.q = a.q;
  opt.n_min = a.n_min;
  Json out;
  if (a.mode == "conflict") {
    const auto res = conflict_split(in.graph, in.drawing, opt);
    require(verify_split(in.drawing, res), "partition");
    out = json::split(res);
  } else if (a.mode == "careful") {
    const auto bounds = a.sizes.empty() ? uniform_boundaries(in.graph.order(), a.blocks) : parse_size_list(a.sizes);
    const auto res = careful_split(in.graph, in.drawing, bounds, opt);
    require(verify_split(in.drawing, res), "partition");
    out = json::split(res);
    out["boundaries"] = bounds;
  } else {
    if (a.sizes.empty()) throw InvalidInput("multiway partition needs --sizes");
    const auto sizes = parse_size_list(a.sizes);
    MultiwayReport rep;
    const auto res = multiway_split(in.graph, in.drawing, sizes, opt, &rep);
    require(verify_split(in.drawing, res, &sizes), "partition");
    out = json::split(res);
    out["report"] = json::multiway_report(rep);
  }
  emit(c, "partition", out);
}

LinearOrdering checked_ordering(const Instance& in, std::uint64_t seed, PartitionTree* tree) {
  const auto o = cutwidth_ordering(in.graph, in.drawing, split_options(seed), tree);
  const auto profile = cut_profile(in.graph, o.order);
  const auto width = profile.empty() ? 0 : *std::max_element(profile.begin(), profile.end());
  if (profile != o.cut_profile || width != o.width) throw InvariantViolation("cutwidth: profile recount differs");
  if (o.width > o.level_bound) throw InvariantViolation("cutwidth: width exceeds the level bound");
  return o;
}

void run_cutwidth(const Common& c) {
  const auto in = load_instance(c);
  PartitionTree tree;
  const auto o = checked_ordering(in, c.seed, &tree);
  auto out = json::ordering(o);
  out["tree"] = json::tree(tree);
  emit(c, "cutwidth", out);
}

void run_bisect(const Common& c) {
  const auto in = load_instance(c);
  const auto o = checked_ordering(in, c.seed, nullptr);
  const auto b = bisection_from_ordering(in.graph, o);
  const auto n = in.graph.order();
  if (count_cut(in.graph, b.part1) != b.cut || b.part1.size() + b.part2.size() != n ||
      3 * b.part1.size() > 2 * n || 3 * b.part2.size() > 2 * n)
    throw InvariantViolation("bisect: recount differs or a side exceeds 2n/3");
  auto out = json::bisection(b);
  out["width"] = o.width;
  emit(c, "bisect", out);
}

void run_convex(const Common& c) {
  const auto in = load_instance(c);
  const auto cd = convex_drawing(in.graph, in.drawing, split_options(c.seed));
  if (crossing_pairs(cd.drawing) != cd.crossings || interleaving_pairs(in.graph, cd.circular_order) != cd.crossings)
    throw InvariantViolation("convex-draw: crossing recount differs");
  if (!c.svg.empty()) {
    svg::Options so;
    so.mark_crossings = true;
    so.labels = in.graph.order() <= 64;
    write_text(c.svg, svg::render(cd.drawing, so));
  }
  emit(c, "convex-draw", json::convex(cd));
}

struct EmbedArgs {
  std::string points;
  std::size_t random_points = 0;
  std::size_t k = 3;
  bool strict = false;
  bool outlines = false;
};

void check_embedding(const Graph& g, const PointSet& s, const EmbeddingResult& r) {
  if (r.placement.size() != g.order()) throw InvariantViolation("embed-points: placement size differs");
  const std::set<Point> pool(s.begin(), s.end());
  std::set<Point> used;
  for (const auto& p : r.placement) {
    if (!pool.count(p)) throw InvariantViolation("embed-points: vertex placed off the point set");
    if (!used.insert(p).second) throw InvariantViolation("embed-points: two vertices share a point");
  }
  if (crossing_pairs(StraightLineDrawing(g, r.placement)) != r.crossings)
    throw InvariantViolation("embed-points: crossing recount differs");
  if (r.ancestor_violations != 0) throw InvariantViolation("embed-points: crossing between unrelated tree nodes");
}

void run_embed(const Common& c, const EmbedArgs& a) {
  const auto in = load_instance(c);
  PointSet s;
  if (!a.points.empty()) s = json::load_points(a.points);
  else if (a.random_points > 0) s = drawings::modular_parabola_points(a.random_points, c.seed);
  else throw InvalidInput("embed-points needs --points FILE or --random-points N");
  EmbedOptions opt;
  opt.k = a.k;
  opt.split = split_options(c.seed);
  opt.direct_fallback = !a.strict;
  const auto r = embed_on_pointset(in.graph, in.drawing, s, opt);
  check_embedding(in.graph, s, r);
  if (!c.svg.empty()) {
    svg::Options so;
    so.mark_crossings = true;
    if (s.size() <= 20000) so.background = s;
    if (a.outlines) {
      for (std::size_t i = 0; i < r.tree.size(); ++i) {
        const auto& nd = r.tree.node(static_cast<int>(i));
        if (nd.vertices.size() < 3) continue;
        svg::Outline o;
        o.level = nd.depth;
        for (auto v : nd.vertices) o.points.push_back(r.drawing.position(v));
        so.outlines.push_back(std::move(o));
      }
    }
    write_text(c.svg, svg::render(r.drawing, so));
  }
  emit(c, "embed-points", json::embedding(r));
}

struct OracleArgs {
  std::string kind = "cutwidth";
  std::string batch;
  std::string r = "2/3";
  bool edge = false;
};

std::vector<OracleReport> oracle_reports(const std::string& name, const Instance& in, const OracleArgs& a,
                                         std::uint64_t seed) {
  const auto& g = in.graph;
  std::vector<OracleReport> out;
  auto add = [&](const char* q, std::int64_t oracle, std::int64_t pipeline) {
    out.push_back(OracleReport{name, q, oracle, pipeline, Relation::at_least});
  };
  if (a.kind == "cutwidth") {
    const auto oracle = exact_cutwidth(g);
    add("cutwidth", oracle, checked_ordering(in, seed, nullptr).width);
  } else if (a.kind == "bisection") {
    const auto oracle = exact_bisection_width(g);
    add("bisection", oracle, bisection_from_ordering(g, checked_ordering(in, seed, nullptr)).cut);
  } else if (a.kind == "convex") {
    const auto oracle = exact_convex_optimum(g);
    add("convex_crossings", oracle, convex_drawing(g, in.drawing, split_options(seed)).crossings);
  } else if (a.kind == "separator") {
    const auto r = parse_ratio(a.r);
    const auto exact = exact_min_separator(g, r, a.edge);
    SeparatorOptions opt;
    opt.seed = seed;
    opt.backend = SeparatorBackend::heuristic;
    const auto h = a.edge ? edge_balanced_separator(g, r, opt) : balanced_separator(g, r, opt);
    require(verify_separator(g, h), "separator");
    add(a.edge ? "edge_separator_size" : "separator_size", static_cast<std::int64_t>(exact.size()),
        static_cast<std::int64_t>(h.size()));
  } else {
    throw InvalidInput("unknown oracle kind '" + a.kind + "' (cutwidth, bisection, convex, separator)");
  }
  return out;
}

Json reports_json(const std::vector<OracleReport>& reps) {
  Json arr = Json::array();
  for (const auto& r : reps) arr.push_back(json::oracle_report(r));
  return arr;
}

int run_oracle(const Common& c, const OracleArgs& a) {
  bool all_pass = true;
  if (a.batch.empty()) {
    const auto reps = oracle_reports(c.graph, load_instance(c), a, c.seed);
    for (const auto& r : reps) all_pass = all_pass && r.pass();
    emit(c, "oracle", reports_json(reps));
    return all_pass ? 0 : kExitInvariant;
  }
  // batch: one JSON line per instance file, files in name order
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(a.batch)) {
    const auto ext = e.path().extension().string();
    if (e.is_regular_file() && (ext == ".edges" || ext == ".json" || ext == ".txt")) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::string lines;
  for (const auto& f : files) {
    Common one = c;
    one.graph = f.string();
    one.drawing.clear();
    const auto reps = oracle_reports(f.filename().string(), load_instance(one), a, c.seed);
    for (const auto& r : reps) {
      all_pass = all_pass && r.pass();
      lines += json::oracle_report(r).dump() + "\n";
    }
  }
  if (!c.out.empty()) write_text(c.out, lines);
  else std::cout << lines;
  return all_pass ? 0 : kExitInvariant;
}

struct BenchArgs {
  std::string family = "grid";
  std::size_t from = 4;
  std::size_t to = 12;
  std::size_t step = 1;
  double p = 0.3;
  std::size_t embed_limit = 25;
};

void run_bench(const Common& c, const BenchArgs& a) {
  if (a.step == 0) throw InvalidInput("--step must be positive");
  std::vector<std::size_t> sizes;
  for (std::size_t s = a.from; s <= a.to; s += a.step) sizes.push_back(s);
  BenchOptions opt;
  opt.p = a.p;
  opt.embed_limit = a.embed_limit;
  emit(c, "bench", json::bench(bench(a.family, sizes, c.seed, opt)));
}

void run_validate(const Common& c, const std::string& points) {
  const auto in = load_instance(c);
  const auto pot = potentials(in.drawing);
  Json out{{"graph", json::graph(in.graph)},
           {"connected", is_connected(in.graph)},
           {"bds", bds(in.graph)},
           {"ssqd", ssqd(in.graph)},
           {"crossing_pairs", crossing_pairs(in.drawing)},
           {"phi", phi(in.drawing)}};
  if (pot.phi != phi(in.drawing)) throw InvariantViolation("validate: potential recount differs");
  if (!points.empty()) {
    const auto s = json::load_points(points);
    std::set<Point> distinct(s.begin(), s.end());
    if (distinct.size() != s.size()) throw InvalidInput(points + ": duplicate points");
    Json p{{"count", s.size()}};
    if (s.size() <= kGeneralPositionCheckLimit) {
      p["general_position"] = general_position(s);
    } else {
      p["general_position"] = nullptr;
    }
    out["points"] = p;
  }
  emit(c, "validate", out);
}

void add_common(CLI::App* sub, Common& c, bool svg) {
  sub->add_option("graph", c.graph, "graph file (edge list or JSON) or generator: grid-RxC, path-N, cycle-N, star-N, kN, kA,B")
      ->required();
  sub->add_option("--drawing", c.drawing, "reference drawing: one x,y per vertex (CSV or JSON)");
  sub->add_option("--seed", c.seed, "seed for randomized steps");
  sub->add_option("--out", c.out, "write JSON here instead of stdout");
  sub->add_option("--out-dir", c.out_dir, "write <dir>/<command>.json (default: $SEPDRAW_OUT)");
  if (svg) sub->add_option("--svg", c.svg, "also write an SVG picture");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sepdraw: separators, low-cutwidth orderings, convex and point-set drawings"};
  app.require_subcommand(1);
  Common c;

  auto* sep = app.add_subcommand("separator", "balanced vertex separator");
  add_common(sep, c, false);
  std::string r_text = "3/4", sep_mode = "edge-balanced", backend = "automatic";
  sep->add_option("--r", r_text, "balance ratio, e.g. 3/4");
  sep->add_option("--mode", sep_mode)->check(CLI::IsMember({"balanced", "edge-balanced", "combined"}));
  sep->add_option("--backend", backend)->check(CLI::IsMember({"automatic", "exact", "heuristic"}));

  auto* part = app.add_subcommand("partition", "split a drawn graph");
  add_common(part, c, false);
  PartitionArgs pa;
  part->add_option("--mode", pa.mode)->check(CLI::IsMember({"conflict", "careful", "multiway"}));
  part->add_option("--sizes", pa.sizes, "JSON list (file or literal): part sizes, or boundaries for careful");
  part->add_option("--blocks", pa.blocks);
  part->add_option("--q", pa.q);
  part->add_option("--n-min", pa.n_min);

  auto* cw = app.add_subcommand("cutwidth", "low-cutwidth linear ordering");
  add_common(cw, c, false);
  auto* bis = app.add_subcommand("bisect", "bisection read off the ordering");
  add_common(bis, c, false);
  auto* cvx = app.add_subcommand("convex-draw", "convex drawing in ordering order");
  add_common(cvx, c, true);

  auto* emb = app.add_subcommand("embed-points", "straight-line embedding onto a point set");
  add_common(emb, c, true);
  EmbedArgs ea;
  emb->add_option("--points", ea.points, "point set (CSV or JSON)");
  emb->add_option("--random-points", ea.random_points, "generate N points in general position instead");
  emb->add_option("--k", ea.k, "parts per split (>= 3)");
  emb->add_flag("--strict", ea.strict, "fail instead of placing small subproblems directly");
  emb->add_flag("--outlines", ea.outlines, "draw subproblem hulls in the SVG");

  auto* orc = app.add_subcommand("oracle", "compare the pipeline against an exact oracle");
  OracleArgs oa;
  orc->add_option("kind", oa.kind)->required()->check(CLI::IsMember({"cutwidth", "bisection", "convex", "separator"}));
  orc->add_option("graph", c.graph, "graph file or generator spec");
  orc->add_option("--batch", oa.batch, "directory of graph files; emits JSON lines")->check(CLI::ExistingDirectory);
  orc->add_option("--r", oa.r, "separator ratio");
  orc->add_flag("--edge", oa.edge, "edge-balanced separator");
  orc->add_option("--drawing", c.drawing);
  orc->add_option("--seed", c.seed);
  orc->add_option("--out", c.out);
  orc->add_option("--out-dir", c.out_dir);

  auto* bn = app.add_subcommand("bench", "scaling sweep over a family");
  BenchArgs ba;
  bn->add_option("family", ba.family)->required()->check(CLI::IsMember(bench_families()));
  bn->add_option("--from", ba.from);
  bn->add_option("--to", ba.to);
  bn->add_option("--step", ba.step);
  bn->add_option("--p", ba.p, "edge probability for gnp and convex");
  bn->add_option("--embed-limit", ba.embed_limit, "largest order embedded onto n^3 points");
  bn->add_option("--seed", c.seed);
  bn->add_option("--out", c.out);
  bn->add_option("--out-dir", c.out_dir);

  auto* val = app.add_subcommand("validate", "check input files and report potentials");
  add_common(val, c, false);
  std::string val_points;
  val->add_option("--points", val_points, "point set to check for general position");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*sep) run_separator(c, r_text, sep_mode, backend);
    else if (*part) run_partition(c, pa);
    else if (*cw) run_cutwidth(c);
    else if (*bis) run_bisect(c);
    else if (*cvx) run_convex(c);
    else if (*emb) run_embed(c, ea);
    else if (*orc) {
      if (oa.batch.empty() && c.graph.empty()) throw InvalidInput("oracle needs a graph or --batch DIR");
      return run_oracle(c, oa);
    } else if (*bn) run_bench(c, ba);
    else if (*val) run_validate(c, val_points);
  } catch (const InvalidInput& e) {
    std::cerr << "sepdraw: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "sepdraw: invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Infeasible& e) {
    std::cerr << "sepdraw: infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "sepdraw: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
