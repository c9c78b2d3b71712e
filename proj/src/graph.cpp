#include "bmg/graph.hpp"

#include <algorithm>
#include <string>

namespace bmg {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "[" + std::to_string(u) + "," + std::to_string(v) + "]";
}

}  // namespace

ColoredDigraph::ColoredDigraph(int n, VertexSet second_class)
    : n_(n), second_(second_class) {
  if (n < 0 || n > kMaxOrder) {
    throw InvalidArgument("graph order " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxOrder));
  }
  if (!second_class.is_subset_of(vertices())) {
    throw InvalidArgument("colour class mentions a vertex outside 1..n");
  }
  out_.assign(static_cast<std::size_t>(n) + 1, VertexSet{});
  in_.assign(static_cast<std::size_t>(n) + 1, VertexSet{});
}

ColoredDigraph::ColoredDigraph(int n, VertexSet second_class, std::span<const Edge> edges)
    : ColoredDigraph(n, second_class) {
  for (const Edge& e : edges) {
    if (e.tail < 1 || e.tail > n || e.head < 1 || e.head > n) {
      throw InvalidArgument("edge " + edge_str(e.tail, e.head) + " has a vertex outside 1.." +
                            std::to_string(n));
    }
    if (e.tail == e.head) throw InvalidArgument("loop edge " + edge_str(e.tail, e.head));
    if (color(e.tail) == color(e.head)) {
      throw InvalidArgument("edge " + edge_str(e.tail, e.head) + " joins two vertices of one colour class");
    }
    if (out_[e.tail].contains(e.head)) {
      throw InvalidArgument("duplicate edge " + edge_str(e.tail, e.head));
    }
    out_[e.tail].insert(e.head);
    in_[e.head].insert(e.tail);
  }
}

void ColoredDigraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

Color ColoredDigraph::color(Vertex v) const {
  check_vertex(v);
  return second_.contains(v) ? Color::kSecond : Color::kFirst;
}

VertexSet ColoredDigraph::color_class(Color c) const {
  return c == Color::kSecond ? second_ : vertices() - second_;
}

VertexSet ColoredDigraph::out_neighbors(Vertex u) const {
  check_vertex(u);
  return out_[u];
}

VertexSet ColoredDigraph::in_neighbors(Vertex u) const {
  check_vertex(u);
  return in_[u];
}

VertexSet ColoredDigraph::out_image(VertexSet s) const {
  VertexSet r;
  for (Vertex v : s & vertices()) r |= out_[v];
  return r;
}

VertexSet ColoredDigraph::in_image(VertexSet s) const {
  VertexSet r;
  for (Vertex v : s & vertices()) r |= in_[v];
  return r;
}

bool ColoredDigraph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return out_[u].contains(v);
}

std::size_t ColoredDigraph::edge_count() const {
  std::size_t m = 0;
  for (Vertex u = 1; u <= n_; ++u) m += static_cast<std::size_t>(out_[u].size());
  return m;
}

std::vector<Edge> ColoredDigraph::edges() const {
  std::vector<Edge> es;
  es.reserve(edge_count());
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : out_[u]) es.push_back({u, v});
  }
  return es;
}

ColoredDigraph ColoredDigraph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> es = edges();
  for (const Edge& e : extra) {
    if (e.tail >= 1 && e.tail <= n_ && out_[e.tail].contains(e.head)) continue;
    es.push_back(e);
  }
  return ColoredDigraph(n_, second_, es);
}

ColoredDigraph ColoredDigraph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> es = edges();
  std::erase_if(es, [&](const Edge& e) {
    return std::find(removed.begin(), removed.end(), e) != removed.end();
  });
  return ColoredDigraph(n_, second_, es);
}

ColoredDigraph ColoredDigraph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<Vertex> label(static_cast<std::size_t>(n_) + 1, 0);
  Vertex next = 0;
  VertexSet second;
  for (Vertex v : keep) {
    label[v] = ++next;
    if (second_.contains(v)) second.insert(next);
  }
  std::vector<Edge> es;
  for (Vertex u : keep) {
    for (Vertex v : out_[u] & keep) es.push_back({label[u], label[v]});
  }
  return ColoredDigraph(next, second, es);
}

ColoredDigraph ColoredDigraph::relabeled(std::span<const Vertex> new_label) const {
  if (new_label.size() != static_cast<std::size_t>(n_)) {
    throw InvalidArgument("relabelling has wrong length");
  }
  VertexSet image;
  for (Vertex v : new_label) {
    if (v < 1 || v > n_ || image.contains(v)) throw InvalidArgument("relabelling is not a permutation");
    image.insert(v);
  }
  VertexSet second;
  for (Vertex v : second_) second.insert(new_label[v - 1]);
  std::vector<Edge> es;
  for (const Edge& e : edges()) es.push_back({new_label[e.tail - 1], new_label[e.head - 1]});
  return ColoredDigraph(n_, second, es);
}

ColoredDigraph ColoredDigraph::with_colors_swapped() const {
  ColoredDigraph g = *this;
  g.second_ = vertices() - second_;
  return g;
}

std::vector<VertexPair> symmetric_edges(const ColoredDigraph& g) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v : g.out_neighbors(u) & g.in_neighbors(u)) {
      if (u < v) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

bool is_oriented(const ColoredDigraph& g) {
  for (Vertex u = 1; u <= g.order(); ++u) {
    if (g.out_neighbors(u).intersects(g.in_neighbors(u))) return false;
  }
  return true;
}

bool is_independent(const ColoredDigraph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("independence needs two distinct vertices");
  return !g.has_edge(u, v) && !g.has_edge(v, u);
}

std::vector<VertexSet> weak_components(const ColoredDigraph& g) {
  std::vector<VertexSet> comps;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp{unseen.front()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = (g.out_image(frontier) | g.in_image(frontier)) - comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    unseen -= comp;
  }
  return comps;
}

bool is_weakly_connected(const ColoredDigraph& g) { return weak_components(g).size() <= 1; }

ColoredDigraph disjoint_union(std::span<const ColoredDigraph> parts) {
  int n = 0;
  VertexSet second;
  std::vector<Edge> es;
  for (const ColoredDigraph& p : parts) {
    for (Vertex v : p.color_class(Color::kSecond)) second.insert(v + n);
    for (const Edge& e : p.edges()) es.push_back({e.tail + n, e.head + n});
    n += p.order();
    if (n > ColoredDigraph::kMaxOrder) throw InvalidArgument("disjoint union exceeds the maximum order");
  }
  return ColoredDigraph(n, second, es);
}

}  // namespace bmg
