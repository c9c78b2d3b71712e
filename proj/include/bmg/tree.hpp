#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bmg/graph.hpp"

namespace bmg {

/// Rooted tree with nodes 0..size()-1 numbered in preorder; node 0 is the root.
class RootedTree {
 public:
  using Node = int;

  /// parent[0] must be -1 and parent[v] < v for every other node.
  explicit RootedTree(std::vector<Node> parent, std::vector<std::string> names = {});

  int size() const { return static_cast<int>(parent_.size()); }
  Node root() const { return 0; }
  Node parent(Node v) const;
  const std::vector<Node>& children(Node v) const;
  int depth(Node v) const;
  bool is_leaf(Node v) const { return children(v).empty(); }
  /// Leaves in ascending node order.
  const std::vector<Node>& leaves() const { return leaves_; }
  const std::string& name(Node v) const;

  Node lca(Node x, Node y) const;

 private:
  void check(Node v) const;

  std::vector<Node> parent_;
  std::vector<std::vector<Node>> children_;
  std::vector<int> depth_;
  std::vector<Node> leaves_;
  std::vector<std::string> names_;
};

struct ColoredTree {
  RootedTree tree;
  /// colors[k] belongs to tree.leaves()[k].
  std::vector<Color> colors;
};

/// Grammar:
///   tree    := subtree ';'
///   subtree := leaf | '(' subtree (',' subtree)* ')'
///   leaf    := name ':' ('0' | '1')
/// Names are runs of characters other than whitespace and "(),:;".
ColoredTree parse_colored_tree(std::string_view text);

std::string format_colored_tree(const ColoredTree& t);

/// Leaves become vertices 1..L in left-to-right order. x -> y for every y of
/// the other colour whose lca with x is deepest.
ColoredDigraph best_match_graph(const ColoredTree& t);

/// Random recursive tree: each new leaf attaches to a uniformly chosen node,
/// splitting a leaf into a cherry or joining an inner node as a new child.
/// Colours are redrawn until both occur.
ColoredTree random_colored_tree(int num_leaves, std::uint64_t seed);

}  // namespace bmg
