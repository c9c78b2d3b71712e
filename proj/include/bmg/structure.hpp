#pragma once

#include <span>
#include <variant>
#include <vector>

#include "bmg/graph.hpp"

namespace bmg {

/// Partition of the vertices into classes of equivalent vertices: same
/// colour, same out-neighbours and same in-neighbours.
struct EquivalenceClasses {
  /// Ordered by smallest member (the representative).
  std::vector<VertexSet> classes;
  /// class_of[v] is the index into `classes`; class_of[0] is unused.
  std::vector<int> class_of;

  Vertex representative(int c) const { return classes[static_cast<std::size_t>(c)].front(); }
  bool all_singletons() const;
};

EquivalenceClasses equivalence_classes(const ColoredDigraph& g);

/// Vertex k of `graph` stands for `classes.classes[k-1]`.
struct QuotientGraph {
  ColoredDigraph graph;
  EquivalenceClasses classes;
};

QuotientGraph quotient(const ColoredDigraph& g);

/// Oriented graph obtained by keeping one direction of every symmetric edge.
struct OrientedDigraph {
  ColoredDigraph graph;
  /// The direction kept for each symmetric edge of the source, ascending.
  std::vector<Edge> kept;
};

/// `keep` names exactly one direction for every symmetric edge of `g`.
/// Throws InvalidArgument if a symmetric edge is not covered, or if `keep`
/// names an edge that is not part of a symmetric pair.
OrientedDigraph underlying_oriented(const ColoredDigraph& g, std::span<const Edge> keep);

/// Orientation that is constant on equivalence classes: symmetric edges of
/// the quotient keep the direction whose tail has the smaller representative,
/// and the choice is lifted to every member of the two classes.
OrientedDigraph consistent_underlying_oriented(const ColoredDigraph& g);

struct TopologicalOrder {
  std::vector<Vertex> order;

  /// 1-based position of v in the order.
  int position(Vertex v) const;
};

struct DirectedCycle {
  /// v0 -> v1 -> ... -> v_{k-1} -> v0
  std::vector<Vertex> vertices;
};

/// Kahn elimination, always removing the smallest available label.
std::variant<TopologicalOrder, DirectedCycle> topological_order(const ColoredDigraph& g);
std::variant<TopologicalOrder, DirectedCycle> topological_order(const OrientedDigraph& o);

/// Vertices without in-neighbours / without out-neighbours.
VertexSet minimal_vertices(const ColoredDigraph& g);
VertexSet maximal_vertices(const ColoredDigraph& g);

/// A directed walk u -> ... -> v exists (breadth-first search).
bool reachable(const ColoredDigraph& g, Vertex u, Vertex v);

/// uv is an edge or some w has uw, wv edges. Equals reachable() on
/// bi-transitive graphs.
bool reachable_in_two_steps(const ColoredDigraph& g, Vertex u, Vertex v);

struct SymmetricComponent {
  VertexSet first_side;   // members of the first colour class
  VertexSet second_side;  // members of the second colour class
  bool complete_bipartite = false;
};

/// Undirected graph on the vertices lying on two or more symmetric edges,
/// with the symmetric edges among them.
struct SymmetricComponents {
  VertexSet shared_vertices;
  std::vector<VertexPair> edges;
  std::vector<SymmetricComponent> components;
};

SymmetricComponents symmetric_components(const ColoredDigraph& g);

}  // namespace bmg
