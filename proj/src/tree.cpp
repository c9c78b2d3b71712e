#include "bmg/tree.hpp"

#include <cctype>
#include <functional>

#include "bmg/axioms.hpp"
#include "bmg/rng.hpp"

namespace bmg {

RootedTree::RootedTree(std::vector<Node> parent, std::vector<std::string> names)
    : parent_(std::move(parent)), names_(std::move(names)) {
  if (parent_.empty() || parent_[0] != -1) throw InvalidArgument("tree root must be node 0 with no parent");
  const int n = size();
  names_.resize(static_cast<std::size_t>(n));
  children_.resize(static_cast<std::size_t>(n));
  depth_.assign(static_cast<std::size_t>(n), 0);
  for (Node v = 1; v < n; ++v) {
    Node p = parent_[static_cast<std::size_t>(v)];
    if (p < 0 || p >= v) throw InvalidArgument("tree nodes must be numbered parents first");
    children_[static_cast<std::size_t>(p)].push_back(v);
    depth_[static_cast<std::size_t>(v)] = depth_[static_cast<std::size_t>(p)] + 1;
  }
  for (Node v = 0; v < n; ++v) {
    if (children_[static_cast<std::size_t>(v)].empty()) leaves_.push_back(v);
  }
}

void RootedTree::check(Node v) const {
  if (v < 0 || v >= size()) throw InvalidArgument("node " + std::to_string(v) + " is not in the tree");
}

RootedTree::Node RootedTree::parent(Node v) const {
  check(v);
  return parent_[static_cast<std::size_t>(v)];
}

const std::vector<RootedTree::Node>& RootedTree::children(Node v) const {
  check(v);
  return children_[static_cast<std::size_t>(v)];
}

int RootedTree::depth(Node v) const {
  check(v);
  return depth_[static_cast<std::size_t>(v)];
}

const std::string& RootedTree::name(Node v) const {
  check(v);
  return names_[static_cast<std::size_t>(v)];
}

RootedTree::Node RootedTree::lca(Node x, Node y) const {
  check(x);
  check(y);
  while (depth(x) > depth(y)) x = parent(x);
  while (depth(y) > depth(x)) y = parent(y);
  while (x != y) {
    x = parent(x);
    y = parent(y);
  }
  return x;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ColoredTree parse() {
    subtree(-1);
    expect(';');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    RootedTree tree(parent_, names_);
    if (static_cast<int>(tree.leaves().size()) > ColoredDigraph::kMaxOrder) fail("too many leaves");
    return {std::move(tree), colors_};
  }

 private:
  void subtree(int parent) {
    int node = static_cast<int>(parent_.size());
    parent_.push_back(parent);
    names_.emplace_back();
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      subtree(node);
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        subtree(node);
        skip_ws();
      }
      expect(')');
      return;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           std::string_view("(),:;").find(text_[pos_]) == std::string_view::npos) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a leaf name or '('");
    names_.back() = std::string(text_.substr(start, pos_ - start));
    expect(':');
    skip_ws();
    char c = peek();
    if (c != '0' && c != '1') fail("leaf colour must be 0 or 1");
    ++pos_;
    colors_.push_back(c == '0' ? Color::kFirst : Color::kSecond);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<int> parent_;
  std::vector<std::string> names_;
  std::vector<Color> colors_;
};

}  // namespace

ColoredTree parse_colored_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string format_colored_tree(const ColoredTree& t) {
  std::string out;
  std::size_t leaf = 0;
  std::function<void(RootedTree::Node)> emit = [&](RootedTree::Node v) {
    const auto& kids = t.tree.children(v);
    if (kids.empty()) {
      std::string name = t.tree.name(v).empty() ? "l" + std::to_string(leaf + 1) : t.tree.name(v);
      out += name + ":" + (t.colors[leaf] == Color::kFirst ? "0" : "1");
      ++leaf;
      return;
    }
    out += "(";
    for (std::size_t k = 0; k < kids.size(); ++k) {
      if (k) out += ",";
      emit(kids[k]);
    }
    out += ")";
  };
  emit(t.tree.root());
  return out + ";";
}

ColoredDigraph best_match_graph(const ColoredTree& t) {
  const auto& leaves = t.tree.leaves();
  if (t.colors.size() != leaves.size()) throw InvalidArgument("one colour per leaf is required");
  const int n = static_cast<int>(leaves.size());
  if (n > ColoredDigraph::kMaxOrder) throw InvalidArgument("too many leaves");
  VertexSet second;
  for (int k = 0; k < n; ++k) {
    if (t.colors[static_cast<std::size_t>(k)] == Color::kSecond) second.insert(k + 1);
  }
  if (second.empty() || second.size() == n) throw InvalidArgument("leaf colouring must use both colours");

  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    int best = -1;
    std::vector<int> argmax;
    for (int y = 0; y < n; ++y) {
      if (t.colors[static_cast<std::size_t>(y)] == t.colors[static_cast<std::size_t>(x)]) continue;
      int d = t.tree.depth(t.tree.lca(leaves[static_cast<std::size_t>(x)], leaves[static_cast<std::size_t>(y)]));
      if (d > best) {
        best = d;
        argmax.clear();
      }
      if (d == best) argmax.push_back(y);
    }
    for (int y : argmax) edges.push_back({x + 1, y + 1});
  }
  ColoredDigraph g(n, second, edges);
  AxiomReport r = check_2cbmg(g);
  if (!r.is_2cbmg) throw InternalError("best match graph is " + r.summary());
  return g;
}

ColoredTree random_colored_tree(int num_leaves, std::uint64_t seed) {
  if (num_leaves < 2) throw InvalidArgument("a random tree needs at least two leaves");
  if (num_leaves > ColoredDigraph::kMaxOrder) throw InvalidArgument("too many leaves");
  Rng rng(seed);
  std::vector<std::vector<int>> kids(1);
  for (int added = 1; added < num_leaves; ++added) {
    int u = rng.uniform_below(static_cast<int>(kids.size()));
    if (kids[static_cast<std::size_t>(u)].empty()) {
      kids[static_cast<std::size_t>(u)].push_back(static_cast<int>(kids.size()));
      kids.emplace_back();
    }
    kids[static_cast<std::size_t>(u)].push_back(static_cast<int>(kids.size()));
    kids.emplace_back();
  }

  std::vector<int> parent;
  std::function<void(int, int)> visit = [&](int v, int p) {
    int id = static_cast<int>(parent.size());
    parent.push_back(p);
    for (int c : kids[static_cast<std::size_t>(v)]) visit(c, id);
  };
  visit(0, -1);
  RootedTree tree(parent);

  std::vector<Color> colors(static_cast<std::size_t>(num_leaves));
  bool both = false;
  while (!both) {
    int seconds = 0;
    for (auto& c : colors) {
      c = rng.coin() ? Color::kSecond : Color::kFirst;
      seconds += c == Color::kSecond;
    }
    both = seconds > 0 && seconds < num_leaves;
  }
  return {std::move(tree), std::move(colors)};
}

}  // namespace bmg
