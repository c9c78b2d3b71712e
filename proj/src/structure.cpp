#include "bmg/structure.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace bmg {

bool EquivalenceClasses::all_singletons() const {
  return std::all_of(classes.begin(), classes.end(), [](VertexSet c) { return c.size() == 1; });
}

EquivalenceClasses equivalence_classes(const ColoredDigraph& g) {
  EquivalenceClasses eq;
  eq.class_of.assign(static_cast<std::size_t>(g.order()) + 1, -1);
  std::map<std::tuple<Color, VertexSet, VertexSet>, int> index;
  for (Vertex v = 1; v <= g.order(); ++v) {
    auto key = std::make_tuple(g.color(v), g.out_neighbors(v), g.in_neighbors(v));
    auto [it, fresh] = index.try_emplace(key, static_cast<int>(eq.classes.size()));
    if (fresh) eq.classes.emplace_back();
    eq.classes[static_cast<std::size_t>(it->second)].insert(v);
    eq.class_of[static_cast<std::size_t>(v)] = it->second;
  }
  return eq;
}

QuotientGraph quotient(const ColoredDigraph& g) {
  EquivalenceClasses eq = equivalence_classes(g);
  const int k = static_cast<int>(eq.classes.size());
  VertexSet second;
  std::vector<Edge> edges;
  for (int a = 0; a < k; ++a) {
    VertexSet ca = eq.classes[static_cast<std::size_t>(a)];
    if (g.color(ca.front()) == Color::kSecond) second.insert(a + 1);
    for (int b = 0; b < k; ++b) {
      VertexSet cb = eq.classes[static_cast<std::size_t>(b)];
      bool all = true;
      for (Vertex u : ca) all = all && cb.is_subset_of(g.out_neighbors(u));
      if (all && a != b) edges.push_back({a + 1, b + 1});
    }
  }
  return {ColoredDigraph(k, second, edges), std::move(eq)};
}

OrientedDigraph underlying_oriented(const ColoredDigraph& g, std::span<const Edge> keep) {
  std::vector<Edge> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<Edge> dropped;
  for (const Edge& e : kept) {
    if (e.tail < 1 || e.tail > g.order() || e.head < 1 || e.head > g.order() || !g.has_edge(e.tail, e.head) ||
        !g.has_edge(e.head, e.tail)) {
      throw InvalidArgument("orientation choice [" + std::to_string(e.tail) + "," + std::to_string(e.head) +
                            "] is not part of a symmetric edge");
    }
    dropped.push_back({e.head, e.tail});
  }
  for (auto [u, v] : symmetric_edges(g)) {
    int covered = static_cast<int>(std::binary_search(kept.begin(), kept.end(), Edge{u, v})) +
                  static_cast<int>(std::binary_search(kept.begin(), kept.end(), Edge{v, u}));
    if (covered != 1) {
      throw InvalidArgument("orientation choice must keep exactly one direction of {" + std::to_string(u) + "," +
                            std::to_string(v) + "}");
    }
  }
  return {g.without_edges(dropped), std::move(kept)};
}

OrientedDigraph consistent_underlying_oriented(const ColoredDigraph& g) {
  EquivalenceClasses eq = equivalence_classes(g);
  auto rep = [&eq](Vertex v) { return eq.representative(eq.class_of[static_cast<std::size_t>(v)]); };
  std::vector<Edge> keep;
  for (auto [u, v] : symmetric_edges(g)) {
    if (rep(u) == rep(v)) throw InternalError("symmetric edge inside an equivalence class");
    keep.push_back(rep(u) < rep(v) ? Edge{u, v} : Edge{v, u});
  }
  std::sort(keep.begin(), keep.end());
  for (const Edge& e : keep) {
    for (Vertex u : eq.classes[static_cast<std::size_t>(eq.class_of[static_cast<std::size_t>(e.tail)])]) {
      for (Vertex v : eq.classes[static_cast<std::size_t>(eq.class_of[static_cast<std::size_t>(e.head)])]) {
        if (!std::binary_search(keep.begin(), keep.end(), Edge{u, v})) {
          throw InternalError("no class-consistent orientation exists");
        }
      }
    }
  }
  return underlying_oriented(g, keep);
}

int TopologicalOrder::position(Vertex v) const {
  auto it = std::find(order.begin(), order.end(), v);
  if (it == order.end()) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the order");
  return static_cast<int>(it - order.begin()) + 1;
}

std::variant<TopologicalOrder, DirectedCycle> topological_order(const ColoredDigraph& g) {
  const int n = g.order();
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  VertexSet available;
  for (Vertex v = 1; v <= n; ++v) {
    indegree[static_cast<std::size_t>(v)] = g.in_neighbors(v).size();
    if (indegree[static_cast<std::size_t>(v)] == 0) available.insert(v);
  }
  TopologicalOrder topo;
  VertexSet remaining = g.vertices();
  while (!available.empty()) {
    Vertex u = available.front();
    available.erase(u);
    remaining.erase(u);
    topo.order.push_back(u);
    for (Vertex w : g.out_neighbors(u)) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) available.insert(w);
    }
  }
  if (remaining.empty()) return topo;

  // Every remaining vertex has an in-neighbour among the remaining ones, so
  // walking backwards must revisit a vertex.
  std::vector<Vertex> walk{remaining.front()};
  std::vector<int> seen_at(static_cast<std::size_t>(n) + 1, -1);
  seen_at[static_cast<std::size_t>(walk.back())] = 0;
  while (true) {
    Vertex p = (g.in_neighbors(walk.back()) & remaining).front();
    int k = seen_at[static_cast<std::size_t>(p)];
    if (k >= 0) {
      DirectedCycle cycle;
      cycle.vertices.push_back(walk[static_cast<std::size_t>(k)]);
      for (auto i = walk.size() - 1; i > static_cast<std::size_t>(k); --i) cycle.vertices.push_back(walk[i]);
      return cycle;
    }
    seen_at[static_cast<std::size_t>(p)] = static_cast<int>(walk.size());
    walk.push_back(p);
  }
}

std::variant<TopologicalOrder, DirectedCycle> topological_order(const OrientedDigraph& o) {
  return topological_order(o.graph);
}

VertexSet minimal_vertices(const ColoredDigraph& g) {
  VertexSet s;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.in_neighbors(v).empty()) s.insert(v);
  }
  return s;
}

VertexSet maximal_vertices(const ColoredDigraph& g) {
  VertexSet s;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.out_neighbors(v).empty()) s.insert(v);
  }
  return s;
}

bool reachable(const ColoredDigraph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("reachability needs two distinct vertices");
  g.out_neighbors(v);  // range check
  VertexSet seen = g.out_neighbors(u);
  VertexSet frontier = seen;
  while (!frontier.empty() && !seen.contains(v)) {
    frontier = g.out_image(frontier) - seen;
    seen |= frontier;
  }
  return seen.contains(v);
}

bool reachable_in_two_steps(const ColoredDigraph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("reachability needs two distinct vertices");
  return g.has_edge(u, v) || g.out_image(g.out_neighbors(u)).contains(v);
}

SymmetricComponents symmetric_components(const ColoredDigraph& g) {
  SymmetricComponents sc;
  std::vector<int> degree(static_cast<std::size_t>(g.order()) + 1, 0);
  auto sym = symmetric_edges(g);
  for (auto [u, v] : sym) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (degree[static_cast<std::size_t>(v)] >= 2) sc.shared_vertices.insert(v);
  }
  for (auto [u, v] : sym) {
    if (sc.shared_vertices.contains(u) && sc.shared_vertices.contains(v)) sc.edges.emplace_back(u, v);
  }
  auto sigma_neighbors = [&](Vertex v) {
    return g.out_neighbors(v) & g.in_neighbors(v) & sc.shared_vertices;
  };
  VertexSet unseen = sc.shared_vertices;
  while (!unseen.empty()) {
    VertexSet comp{unseen.front()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= sigma_neighbors(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    unseen -= comp;
    SymmetricComponent c;
    c.first_side = comp & g.color_class(Color::kFirst);
    c.second_side = comp & g.color_class(Color::kSecond);
    c.complete_bipartite = true;
    for (Vertex a : c.first_side) {
      c.complete_bipartite = c.complete_bipartite && c.second_side.is_subset_of(sigma_neighbors(a));
    }
    sc.components.push_back(c);
  }
  return sc;
}

}  // namespace bmg
