#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bmg/error.hpp"
#include "bmg/vertex_set.hpp"

namespace bmg {

enum class Color : std::uint8_t { kFirst = 0, kSecond = 1 };

constexpr Color opposite(Color c) { return c == Color::kFirst ? Color::kSecond : Color::kFirst; }

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unordered vertex pair {first, second} with first < second.
using VertexPair = std::pair<Vertex, Vertex>;

/// Loop-free bipartite digraph on vertices 1..n with an explicit 2-colouring.
///
/// Values are immutable once built; the `with_*`/`without_*`/`induced`
/// builders return new graphs. Adjacency is kept as per-vertex out- and
/// in-neighbour bitsets so membership is O(1) and iteration is ascending.
class ColoredDigraph {
 public:
  static constexpr int kMaxOrder = VertexSet::kMaxVertex;

  ColoredDigraph() = default;

  /// Throws InvalidArgument on a loop, duplicate edge, same-colour edge,
  /// out-of-range vertex, or an order outside 0..kMaxOrder.
  ColoredDigraph(int n, VertexSet second_class, std::span<const Edge> edges);

  /// Edgeless graph with the given colouring.
  ColoredDigraph(int n, VertexSet second_class);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(1, n_); }
  Color color(Vertex v) const;
  VertexSet color_class(Color c) const;

  VertexSet out_neighbors(Vertex u) const;
  VertexSet in_neighbors(Vertex u) const;
  /// N(S): union of out-neighbourhoods.
  VertexSet out_image(VertexSet s) const;
  /// N^-(S): union of in-neighbourhoods.
  VertexSet in_image(VertexSet s) const;

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t edge_count() const;
  /// Ascending (tail, head) order.
  std::vector<Edge> edges() const;

  ColoredDigraph with_edges(std::span<const Edge> extra) const;
  ColoredDigraph without_edges(std::span<const Edge> removed) const;
  /// Induced subgraph on `keep`, relabelled to 1..|keep| in ascending order.
  ColoredDigraph induced(VertexSet keep) const;
  /// new_label[v-1] is the image of v; must be a permutation of 1..n.
  ColoredDigraph relabeled(std::span<const Vertex> new_label) const;
  /// Same edges, the two colour classes exchanged.
  ColoredDigraph with_colors_swapped() const;

  friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  VertexSet second_;
  std::vector<VertexSet> out_{VertexSet{}};
  std::vector<VertexSet> in_{VertexSet{}};
};

/// Symmetric edges as pairs (u, v), u < v, ascending.
std::vector<VertexPair> symmetric_edges(const ColoredDigraph& g);

bool is_oriented(const ColoredDigraph& g);

/// True when neither (u,v) nor (v,u) is an edge. Throws on u == v.
bool is_independent(const ColoredDigraph& g, Vertex u, Vertex v);

/// Components of the undirected shadow, ordered by smallest member.
std::vector<VertexSet> weak_components(const ColoredDigraph& g);

bool is_weakly_connected(const ColoredDigraph& g);

/// Vertex-disjoint union; the k-th graph is shifted past all earlier ones.
ColoredDigraph disjoint_union(std::span<const ColoredDigraph> parts);

}  // namespace bmg
