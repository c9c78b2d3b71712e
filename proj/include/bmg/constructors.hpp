#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "bmg/graph.hpp"

namespace bmg {

/// Adds every edge w -> v (v of the opposite colour) for w in U.
/// U must be closed under in-neighbours; throws PreconditionError otherwise
/// or when g is not a 2-cBMG. The result is checked to be a 2-cBMG.
ColoredDigraph join_via_minimal(const ColoredDigraph& g, VertexSet U);

/// Disjoint union of 2-cBMGs made connected by join_via_minimal. For every
/// weak component after the first, U receives the smallest in-closed set
/// generated by one of its vertices.
ColoredDigraph join_disjoint(std::span<const ColoredDigraph> graphs);

/// One complete bipartite block: |U_i| vertices of the first colour and
/// |W_i| of the second.
using FamilyBlock = std::pair<int, int>;

/// Blocks labelled in order, U side then W side. Symmetric edges inside each
/// block plus U_1 -> W_i and W_1 -> U_i for i >= 2.
ColoredDigraph family_graph(std::span<const FamilyBlock> spec);

/// Vertex k is the k-th smallest element of S. Evens form the first class.
/// Edge u -> v when u < v and the parities differ.
ColoredDigraph parity_graph(const std::set<int>& S);

/// Vertex k is the k-th smallest element of A; a = 0 mod 4 is the first
/// class. Edge a -> b when (a+b)/2 and (b-a)/2 both lie in O.
ColoredDigraph odd_even_graph(const std::set<int>& A, const std::set<int>& O);

/// Vertices 1..a form the first class. One draw per cross pair (x, y) in
/// ascending order picks x -> y (0) or y -> x (1).
ColoredDigraph random_bitournament(int a, int b, std::uint64_t seed);

}  // namespace bmg
