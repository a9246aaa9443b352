#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "netdesc/error.hpp"
#include "netdesc/graph.hpp"

namespace netdesc {

// Edge-list text format: one "u v" pair per line, '#' starts a comment line,
// and an optional "# n=<k>" line fixes the vertex count (otherwise max id + 1).

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

inline Error parse_error(std::size_t line, const std::string& what) {
  return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

struct ParsedEdgeList {
  std::optional<std::size_t> declared_n;
  std::vector<Edge> edges;  // as written, not yet validated
};

inline ParsedEdgeList parse_edge_list_text(std::istream& in) {
  ParsedEdgeList out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = detail::trim(line.substr(1));
      if (body.starts_with("n=") || body.starts_with("n =")) {
        body = detail::trim(body.substr(body.find('=') + 1));
        const auto n = detail::parse_uint(body);
        if (!n) throw detail::parse_error(line_no, "bad vertex count '" + std::string(body) + "'");
        if (out.declared_n) throw detail::parse_error(line_no, "vertex count declared twice");
        out.declared_n = static_cast<std::size_t>(*n);
      }
      continue;
    }
    std::istringstream fields{std::string(line)};
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty()) throw detail::parse_error(line_no, "expected two vertex ids");
    if (fields >> extra) throw detail::parse_error(line_no, "trailing token '" + extra + "'");
    const auto u = detail::parse_uint(a);
    const auto v = detail::parse_uint(b);
    if (!u || !v) throw detail::parse_error(line_no, "vertex ids must be non-negative integers");
    if (*u > UINT32_MAX || *v > UINT32_MAX) throw detail::parse_error(line_no, "vertex id too large");
    out.edges.push_back({static_cast<Vertex>(*u), static_cast<Vertex>(*v)});
  }
  return out;
}

/// Parses and validates; errors carry the offending line number for syntax
/// problems and the graph-level code (Disconnected, SelfLoop, ...) otherwise.
inline Graph read_edge_list(std::istream& in, BuildOptions options = {}) {
  auto parsed = parse_edge_list_text(in);
  std::size_t n = 0;
  if (parsed.declared_n) {
    n = *parsed.declared_n;
  } else {
    for (const auto& e : parsed.edges) n = std::max<std::size_t>(n, std::max(e.u, e.v) + 1);
  }
  return build_graph(n, parsed.edges, options);
}

inline Graph read_edge_list(const std::string& text, BuildOptions options = {}) {
  std::istringstream in(text);
  return read_edge_list(in, options);
}

/// Canonical form: "# n=<k>" header, optional "# family=<...>" line, then the
/// sorted edges.
inline void write_edge_list(std::ostream& out, const Graph& g, const std::string& family = {}) {
  out << "# n=" << g.order() << '\n';
  if (!family.empty()) out << "# family=" << family << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace netdesc
