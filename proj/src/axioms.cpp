#include "bmg/axioms.hpp"

namespace bmg {

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kN1: return "N1";
    case Axiom::kN2: return "N2";
    case Axiom::kN3: return "N3";
    case Axiom::kN4: return "N4";
  }
  return "?";
}

namespace {

bool n1_violated(const ColoredDigraph& g, Vertex u, Vertex v, Vertex t, Vertex w) {
  return u != v && !g.has_edge(u, v) && !g.has_edge(v, u) && g.has_edge(u, t) && g.has_edge(v, w) &&
         g.has_edge(t, w);
}

bool n3_premises(const ColoredDigraph& g, Vertex u, Vertex v) {
  return !g.out_image(g.out_neighbors(v)).contains(u) && !g.out_image(g.out_neighbors(u)).contains(v) &&
         g.out_neighbors(u).intersects(g.out_neighbors(v));
}

bool n3_conclusion(const ColoredDigraph& g, Vertex u, Vertex v) {
  VertexSet nu = g.out_neighbors(u);
  VertexSet nv = g.out_neighbors(v);
  return g.in_neighbors(u) == g.in_neighbors(v) && (nu.is_subset_of(nv) || nv.is_subset_of(nu));
}

}  // namespace

std::optional<AxiomWitness> check_n1(const ColoredDigraph& g) {
  const int n = g.order();
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u == v || !is_independent(g, u, v)) continue;
      for (Vertex t : g.out_neighbors(u)) {
        VertexSet hits = g.out_neighbors(v) & g.out_neighbors(t);
        if (!hits.empty()) return AxiomWitness{Axiom::kN1, {u, v, t, hits.front()}};
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomWitness> check_n2(const ColoredDigraph& g) {
  for (Vertex u1 = 1; u1 <= g.order(); ++u1) {
    for (Vertex v1 : g.out_neighbors(u1)) {
      for (Vertex u2 : g.out_neighbors(v1)) {
        VertexSet missing = g.out_neighbors(u2) - g.out_neighbors(u1);
        if (!missing.empty()) return AxiomWitness{Axiom::kN2, {u1, v1, u2, missing.front()}};
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomWitness> check_n3(const ColoredDigraph& g) {
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (n3_premises(g, u, v) && !n3_conclusion(g, u, v)) return AxiomWitness{Axiom::kN3, {u, v}};
    }
  }
  return std::nullopt;
}

VertexSet check_n4(const ColoredDigraph& g) {
  VertexSet sinks;
  for (Vertex u = 1; u <= g.order(); ++u) {
    if (g.out_neighbors(u).empty()) sinks.insert(u);
  }
  return sinks;
}

bool bi_transitive_by_sets(const ColoredDigraph& g) {
  for (Vertex u = 1; u <= g.order(); ++u) {
    VertexSet n1 = g.out_neighbors(u);
    if (!g.out_image(g.out_image(n1)).is_subset_of(n1)) return false;
  }
  return true;
}

bool replay_witness(const ColoredDigraph& g, const AxiomWitness& w) {
  const auto& x = w.vertices;
  for (Vertex v : x) {
    if (v < 1 || v > g.order()) return false;
  }
  switch (w.axiom) {
    case Axiom::kN1:
      return x.size() == 4 && n1_violated(g, x[0], x[1], x[2], x[3]);
    case Axiom::kN2:
      return x.size() == 4 && g.has_edge(x[0], x[1]) && g.has_edge(x[1], x[2]) && g.has_edge(x[2], x[3]) &&
             !g.has_edge(x[0], x[3]);
    case Axiom::kN3:
      return x.size() == 2 && x[0] != x[1] && n3_premises(g, x[0], x[1]) && !n3_conclusion(g, x[0], x[1]);
    case Axiom::kN4:
      return x.size() == 1 && g.out_neighbors(x[0]).empty();
  }
  return false;
}

std::string AxiomReport::summary() const {
  if (is_2cbmg) return "2-cBMG";
  auto tuple = [](const AxiomWitness& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.vertices.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(w.vertices[k]);
    }
    return s + ")";
  };
  if (is_almost_2cbmg) return "almost 2-cBMG: sink at " + std::to_string(sinks.front());
  for (const auto* w : {&n1, &n2, &n3}) {
    if (*w) return "not a 2-cBMG: " + axiom_name((*w)->axiom) + " fails at " + tuple(**w);
  }
  std::string s = "not a 2-cBMG: sinks at";
  for (Vertex v : sinks) s += " " + std::to_string(v);
  return s;
}

AxiomReport check_2cbmg(const ColoredDigraph& g) {
  AxiomReport r;
  r.n1 = check_n1(g);
  r.n2 = check_n2(g);
  r.n3 = check_n3(g);
  r.sinks = check_n4(g);
  r.is_2cbmg = r.satisfies_n1_to_n3() && r.sinks.empty();
  r.is_almost_2cbmg = r.satisfies_n1_to_n3() && r.sinks.size() <= 1;
  return r;
}

bool is_2cbmg(const ColoredDigraph& g) { return check_2cbmg(g).is_2cbmg; }

std::vector<PatternOccurrence> match_forbidden_subgraphs(const ColoredDigraph& g) {
  std::vector<PatternOccurrence> found;
  const int n = g.order();
  auto e = [&g](Vertex a, Vertex b) { return g.has_edge(a, b); };
  for (Vertex x1 = 1; x1 <= n; ++x1) {
    for (Vertex x2 : g.color_class(g.color(x1))) {
      if (x2 == x1) continue;
      VertexSet ys = g.color_class(opposite(g.color(x1)));
      for (Vertex y1 : ys) {
        for (Vertex y2 : ys) {
          if (y2 == y1) continue;
          if (e(x1, y1) && e(y2, x2) && e(y1, x2) && !e(x1, y2)) found.push_back({1, {x1, x2, y1, y2}});
          if (e(x1, y1) && e(y1, x2) && e(x2, y2) && !e(x1, y2)) found.push_back({2, {x1, x2, y1, y2}});
          if (!(e(x1, y1) && e(x2, y2)) || e(x1, y2) || e(x2, y1)) continue;
          for (Vertex y3 : ys) {
            if (y3 == y1 || y3 == y2) continue;
            if (e(x1, y3) && e(x2, y3)) found.push_back({3, {x1, x2, y1, y2, y3}});
          }
        }
      }
    }
  }
  return found;
}

}  // namespace bmg
