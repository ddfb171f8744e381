#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spantree/multigraph.hpp"

namespace spantree {

struct ParseError : std::runtime_error {
  int line;

  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
};

// Text format for multigraphs:
//   - optional header line  `vertices N`
//   - edge lines            `u v [mult]`   (0-based; `u u` is a loop)
//   - `#` starts a comment; blank lines are ignored
// Without a header the vertex count is 1 + the largest index seen.
// Repeated edge lines sum their multiplicities.
inline Multigraph parse_graph(std::istream& in) {
  struct EdgeLine {
    int line;
    long long u, v, mult;
  };
  std::optional<long long> declared;
  std::vector<EdgeLine> parsed;
  long long max_index = -1;

  std::string raw;
  int line_number = 0;
  bool header_allowed = true;
  while (std::getline(in, raw)) {
    ++line_number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);

    std::string first;
    if (!(fields >> first)) continue; // blank

    if (first == "vertices") {
      if (!header_allowed)
        throw ParseError(line_number, "header must come before any edge line");
      long long n;
      std::string extra;
      if (!(fields >> n) || (fields >> extra))
        throw ParseError(line_number, "expected `vertices N`");
      if (n < 1) throw ParseError(line_number, "vertex count must be at least 1");
      declared = n;
      header_allowed = false;
      continue;
    }
    header_allowed = false;

    EdgeLine e{line_number, 0, 0, 1};
    std::istringstream edge_fields(raw);
    std::string extra;
    if (!(edge_fields >> e.u >> e.v))
      throw ParseError(line_number, "expected `u v [mult]`");
    if (edge_fields >> e.mult) {
      if (edge_fields >> extra) throw ParseError(line_number, "trailing tokens");
    }
    if (e.u < 0 || e.v < 0) throw ParseError(line_number, "vertex indices must be nonnegative");
    if (e.mult < 1) throw ParseError(line_number, "multiplicity must be positive");
    max_index = std::max({max_index, e.u, e.v});
    parsed.push_back(e);
  }

  long long n = declared ? *declared : max_index + 1;
  if (n < 1)
    throw ParseError(line_number, "empty graph file: need a header or at least one edge");

  Multigraph g(static_cast<int>(n));
  for (const EdgeLine& e : parsed) {
    if (e.u >= n || e.v >= n)
      throw ParseError(e.line, "vertex index " + std::to_string(std::max(e.u, e.v)) +
                                   " outside declared range");
    g = g.add_edge(static_cast<VertexId>(e.u), static_cast<VertexId>(e.v), e.mult);
  }
  return g;
}

inline Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

// Deterministic inverse of parse_graph: header plus one line per edge key
// in ascending order.
inline std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (const auto& [key, mult] : g.edges()) {
    out << key.u << " " << key.v;
    if (mult > 1) out << " " << mult;
    out << "\n";
  }
  return out.str();
}

} // namespace spantree
