#pragma once

// Text formats.
//
//   graph:   header "n m", then m lines "u v" (vertices 0..n-1)
//   points:  one "x,y" per line; line i is the point of vertex i when the
//            file describes a drawing
//
// Blank lines and lines starting with '#' are skipped. Errors name the
// source and the line.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sepdraw/drawing.hpp"
#include "sepdraw/error.hpp"
#include "sepdraw/geometry.hpp"
#include "sepdraw/graph.hpp"

namespace sepdraw::io {

namespace detail {

inline std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> fields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  if (sep == ' ') {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      const auto start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view source, std::size_t line, const char* what) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidInput(where(source, line) + "expected " + what + ", got '" + std::string(text) + "'");
  }
  return value;
}

/// Non-blank, non-comment lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    const auto t = trim(text.substr(start, end - start));
    if (!t.empty() && t.front() != '#') out.emplace_back(line, t);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text, std::string_view source = "<input>") {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw InvalidInput(std::string(source) + ": empty graph file (expected header 'n m')");
  const auto header = detail::fields(lines[0].second, ' ');
  if (header.size() != 2) throw InvalidInput(detail::where(source, lines[0].first) + "header must be 'n m'");
  const auto n = detail::parse_number<std::size_t>(header[0], source, lines[0].first, "vertex count");
  const auto m = detail::parse_number<std::size_t>(header[1], source, lines[0].first, "edge count");
  if (lines.size() - 1 != m) {
    throw InvalidInput(std::string(source) + ": header announces " + std::to_string(m) + " edges, file has " +
                       std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [ln, body] = lines[i];
    const auto f = detail::fields(body, ' ');
    if (f.size() != 2) throw InvalidInput(detail::where(source, ln) + "edge line must be 'u v'");
    const auto u = detail::parse_number<VertexId>(f[0], source, ln, "vertex id");
    const auto v = detail::parse_number<VertexId>(f[1], source, ln, "vertex id");
    if (u >= n || v >= n) throw InvalidInput(detail::where(source, ln) + "vertex id out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw InvalidInput(detail::where(source, ln) + "self-loop at " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(source) + ": " + e.what());
  }
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline PointSet parse_points_csv(std::string_view text, std::string_view source = "<input>") {
  PointSet pts;
  auto lines = detail::content_lines(text);
  if (!lines.empty() && (lines[0].second == "x,y" || lines[0].second == "x, y")) lines.erase(lines.begin());
  for (const auto& [ln, body] : lines) {
    const auto f = detail::fields(body, ',');
    if (f.size() != 2) throw InvalidInput(detail::where(source, ln) + "point line must be 'x,y'");
    Point p{detail::parse_number<std::int64_t>(f[0], source, ln, "integer x"),
            detail::parse_number<std::int64_t>(f[1], source, ln, "integer y")};
    try {
      check_coordinate_range(p);
    } catch (const InvalidInput& e) {
      throw InvalidInput(detail::where(source, ln) + e.what());
    }
    pts.push_back(p);
  }
  return pts;
}

inline std::string format_points_csv(std::span<const Point> pts) {
  std::ostringstream os;
  for (const auto& p : pts) os << p.x << ',' << p.y << '\n';
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Drawing from a graph and the point list of its vertices 0..n-1.
inline StraightLineDrawing make_drawing(const Graph& g, PointSet pts, std::string_view source = "<points>") {
  if (pts.size() != g.order()) {
    throw InvalidInput(std::string(source) + ": " + std::to_string(pts.size()) + " points for a graph of order " +
                       std::to_string(g.order()));
  }
  try {
    return StraightLineDrawing(g, std::move(pts));
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(source) + ": " + e.what());
  }
}

/// A generated graph with its default reference drawing.
struct NamedInstance {
  Graph graph;
  StraightLineDrawing drawing;
};

namespace detail {

inline std::optional<std::size_t> number_after(std::string_view spec, std::string_view prefix) {
  if (spec.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto rest = spec.substr(prefix.size());
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Generator specs: grid-RxC, path-N, cycle-N, star-N (N leaves), kN,
/// kA,B. Grids come with their lattice drawing, everything else is drawn
/// on a regular polygon.
inline std::optional<NamedInstance> named_instance(std::string_view spec) {
  constexpr std::size_t kMax = 4096;
  auto bounded = [&](std::size_t v) {
    if (v > kMax) throw InvalidInput("generator size " + std::to_string(v) + " too large in '" + std::string(spec) + "'");
    return v;
  };
  if (spec.substr(0, 5) == "grid-") {
    const auto body = spec.substr(5);
    const auto x = body.find('x');
    if (x == std::string_view::npos) return std::nullopt;
    std::size_t r = 0, c = 0;
    auto a = std::from_chars(body.data(), body.data() + x, r);
    auto b = std::from_chars(body.data() + x + 1, body.data() + body.size(), c);
    if (a.ec != std::errc() || a.ptr != body.data() + x || b.ec != std::errc() || b.ptr != body.data() + body.size())
      return std::nullopt;
    auto d = drawings::grid(bounded(r), bounded(c));
    return NamedInstance{d.graph(), d};
  }
  auto convex = [](Graph g) {
    auto d = drawings::convex(g);
    return NamedInstance{std::move(g), std::move(d)};
  };
  if (auto n = detail::number_after(spec, "path-")) return convex(generators::path(bounded(*n)));
  if (auto n = detail::number_after(spec, "cycle-")) return convex(generators::cycle(bounded(*n)));
  if (auto n = detail::number_after(spec, "star-")) return convex(generators::star(bounded(*n)));
  if (spec.size() > 1 && (spec[0] == 'k' || spec[0] == 'K')) {
    const auto body = spec.substr(1);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      if (auto n = detail::number_after(body, "")) return convex(generators::complete(bounded(*n)));
      return std::nullopt;
    }
    auto a = detail::number_after(body.substr(0, comma), "");
    auto b = detail::number_after(body.substr(comma + 1), "");
    if (a && b) return convex(generators::complete_bipartite(bounded(*a), bounded(*b)));
  }
  return std::nullopt;
}

}  // namespace sepdraw::io
