#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bmg/graph.hpp"
#include <json.hpp>

namespace bmg {

/// Edge list exactly as written in `<n|[i1,j1],...,[ir,jr]>` text, order kept.
struct EdgeList {
  int n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

/// Grammar (whitespace-insensitive):
///   graph := "<" INT "|" [ edge ("," edge)* ] ">"
///   edge  := "[" INT "," INT "]"
/// The empty edge list `<n|>` is accepted for edgeless graphs.
EdgeList parse_edge_list(std::string_view text);
std::string format_edge_list(const EdgeList& list);

/// Colour sidecar `colors: a1 a2 ... | b1 b2 ...`; the `colors:` prefix is
/// optional. Returns the second class. The two classes must partition 1..n.
VertexSet parse_colors(std::string_view text, int n);

/// Throws ParseError on syntax errors and InvalidArgument on loops,
/// duplicates, same-colour edges or out-of-range vertices.
ColoredDigraph parse_graph(std::string_view text, std::string_view colors);

/// The colouring forced by the edges when the undirected shadow is connected
/// (vertex 1 goes to the first class). Throws when it is not unique or the
/// edges are not bipartite.
VertexSet infer_coloring(const EdgeList& list);

std::string to_text(const ColoredDigraph& g);
std::string colors_to_text(const ColoredDigraph& g);

/// {"n": int, "colors": [0|1 per vertex], "edges": [[u,v],...]}, edges ascending.
nlohmann::json graph_to_json(const ColoredDigraph& g);
ColoredDigraph graph_from_json(const nlohmann::json& j);

/// Graph documents accepted by the CLI and fixtures: either a JSON object, or
/// the text form on one line optionally followed by a `colors:` line.
/// Lines starting with '#' are comments.
ColoredDigraph read_graph_document(std::string_view content);

/// Graphviz rendering. Symmetric edges become one bold `dir=both` edge;
/// the first colour class is drawn as circles, the second as boxes.
std::string to_dot(const ColoredDigraph& g, std::string_view name = "G");

}  // namespace bmg
