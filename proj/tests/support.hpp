#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bmg/canonical.hpp"
#include "bmg/graph.hpp"
#include "bmg/io.hpp"

namespace bmg::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ColoredDigraph fixture(const std::string& name) {
  return read_graph_document(read_file(std::string(BMG_FIXTURE_DIR) + "/" + name + ".g"));
}

inline ColoredDigraph graph(const std::string& text, const std::string& colors) { return parse_graph(text, colors); }

// Plain std::set adjacency, kept apart from the library's bitsets.
struct Adjacency {
  std::vector<std::set<int>> out, in;
  explicit Adjacency(const ColoredDigraph& g) : out(g.order() + 1), in(g.order() + 1) {
    for (Edge e : g.edges()) {
      out[e.tail].insert(e.head);
      in[e.head].insert(e.tail);
    }
  }
  std::set<int> image(const std::set<int>& s) const {
    std::set<int> r;
    for (int v : s) r.insert(out[v].begin(), out[v].end());
    return r;
  }
};

inline bool disjoint(const std::set<int>& a, const std::set<int>& b) {
  for (int x : a) {
    if (b.count(x)) return false;
  }
  return true;
}

inline bool subset(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool n1_by_sets(const ColoredDigraph& g) {
  Adjacency a(g);
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = 1; v <= g.order(); ++v) {
      if (a.out[v].count(u) || a.out[u].count(v)) continue;
      if (!disjoint(a.out[u], a.image(a.out[v])) || !disjoint(a.out[v], a.image(a.out[u]))) return false;
    }
  }
  return true;
}

inline bool n2_by_sets(const ColoredDigraph& g) {
  Adjacency a(g);
  for (int u = 1; u <= g.order(); ++u) {
    if (!subset(a.image(a.image(a.out[u])), a.out[u])) return false;
  }
  return true;
}

inline bool n3_by_sets(const ColoredDigraph& g) {
  Adjacency a(g);
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = 1; v <= g.order(); ++v) {
      if (u == v) continue;
      if (a.image(a.out[v]).count(u) || a.image(a.out[u]).count(v)) continue;
      if (disjoint(a.out[u], a.out[v])) continue;
      if (a.in[u] != a.in[v]) return false;
      if (!subset(a.out[u], a.out[v]) && !subset(a.out[v], a.out[u])) return false;
    }
  }
  return true;
}

inline bool sink_free_by_sets(const ColoredDigraph& g) {
  Adjacency a(g);
  for (int u = 1; u <= g.order(); ++u) {
    if (a.out[u].empty()) return false;
  }
  return true;
}

// Smallest relabelled edge list over every vertex permutation allowed by the
// convention. Equal keys mean isomorphic.
inline std::vector<Edge> brute_key(const ColoredDigraph& g, IsoConvention c) {
  const int n = g.order();
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v + 1;
  const int first = g.color_class(Color::kFirst).size();
  std::vector<Edge> best;
  bool have = false;
  do {
    if (c != IsoConvention::kUncolored) {
      // image colour of every vertex: labels 1..first are "first"
      bool keep = true, swapped = true;
      for (int v = 1; v <= n; ++v) {
        bool lands_first = perm[static_cast<std::size_t>(v - 1)] <= first;
        bool is_first = g.color(v) == Color::kFirst;
        keep = keep && lands_first == is_first;
        swapped = swapped && lands_first != is_first;
      }
      bool ok = keep || (c == IsoConvention::kColored && swapped && 2 * first == n);
      if (!ok) continue;
    }
    std::vector<Edge> es;
    for (Edge e : g.edges()) {
      es.push_back({perm[static_cast<std::size_t>(e.tail - 1)], perm[static_cast<std::size_t>(e.head - 1)]});
    }
    std::sort(es.begin(), es.end());
    if (!have || es < best) {
      best = es;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every graph on the complete bipartite digraph with classes 1..i, i+1..i+j.
template <class F>
void for_each_subgraph(int i, int j, F&& f) {
  std::vector<Edge> all;
  for (int x = 1; x <= i; ++x) {
    for (int y = i + 1; y <= i + j; ++y) {
      all.push_back({x, y});
      all.push_back({y, x});
    }
  }
  const VertexSet second = VertexSet::range(i + 1, i + j);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << all.size()); ++m) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if ((m >> k) & 1U) es.push_back(all[k]);
    }
    f(ColoredDigraph(i + j, second, es));
  }
}

}  // namespace bmg::testing
