#include "bmg/constructors.hpp"

#include <string>

#include "bmg/axioms.hpp"
#include "bmg/rng.hpp"

namespace bmg {

namespace {

void require_2cbmg(const ColoredDigraph& g, const char* who) {
  AxiomReport r = check_2cbmg(g);
  if (!r.is_2cbmg) throw PreconditionError(std::string(who) + ": input is " + r.summary());
}

VertexSet in_closure(const ColoredDigraph& g, VertexSet s) {
  VertexSet frontier = s;
  while (!frontier.empty()) {
    frontier = g.in_image(frontier) - s;
    s |= frontier;
  }
  return s;
}

}  // namespace

ColoredDigraph join_via_minimal(const ColoredDigraph& g, VertexSet U) {
  require_2cbmg(g, "join");
  if (!U.is_subset_of(g.vertices())) throw InvalidArgument("join set contains an unknown vertex");
  if (!g.in_image(U).is_subset_of(U)) {
    throw PreconditionError("join set is not closed under in-neighbours; add " +
                            std::to_string((g.in_image(U) - U).front()));
  }
  if (U.empty()) return g;
  std::vector<Edge> extra;
  for (Vertex w : U) {
    for (Vertex v : g.color_class(opposite(g.color(w))) - g.out_neighbors(w)) extra.push_back({w, v});
  }
  ColoredDigraph out = g.with_edges(extra);
  if (!is_2cbmg(out)) throw InternalError("join produced " + check_2cbmg(out).summary());
  if (!is_weakly_connected(out)) throw InternalError("join produced a disconnected graph");
  return out;
}

ColoredDigraph join_disjoint(std::span<const ColoredDigraph> graphs) {
  for (const auto& g : graphs) require_2cbmg(g, "join");
  ColoredDigraph u = disjoint_union(graphs);
  auto comps = weak_components(u);
  VertexSet U;
  for (std::size_t c = 1; c < comps.size(); ++c) {
    VertexSet best;
    for (Vertex v : comps[c]) {
      VertexSet cl = in_closure(u, VertexSet{v});
      if (best.empty() || cl.size() < best.size()) best = cl;
    }
    U |= best;
  }
  return join_via_minimal(u, U);
}

ColoredDigraph family_graph(std::span<const FamilyBlock> spec) {
  if (spec.empty()) throw InvalidArgument("family needs at least one block");
  int n = 0;
  for (auto [a, b] : spec) {
    if (a < 1 || b < 1) throw InvalidArgument("family block sizes must be positive");
    n += a + b;
  }
  if (n > ColoredDigraph::kMaxOrder) throw InvalidArgument("family graph too large");

  std::vector<VertexSet> us;
  std::vector<VertexSet> ws;
  VertexSet second;
  Vertex next = 1;
  for (auto [a, b] : spec) {
    us.push_back(VertexSet::range(next, next + a - 1));
    ws.push_back(VertexSet::range(next + a, next + a + b - 1));
    second |= ws.back();
    next += a + b;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    for (Vertex u : us[i]) {
      for (Vertex w : ws[i]) {
        edges.push_back({u, w});
        edges.push_back({w, u});
      }
    }
    if (i == 0) continue;
    for (Vertex u : us[0]) {
      for (Vertex w : ws[i]) edges.push_back({u, w});
    }
    for (Vertex w : ws[0]) {
      for (Vertex u : us[i]) edges.push_back({w, u});
    }
  }
  ColoredDigraph g(n, second, edges);
  if (!is_2cbmg(g)) throw InternalError("family graph is " + check_2cbmg(g).summary());
  return g;
}

ColoredDigraph parity_graph(const std::set<int>& S) {
  if (S.empty()) throw InvalidArgument("parity set must be non-empty");
  if (static_cast<int>(S.size()) > ColoredDigraph::kMaxOrder) throw InvalidArgument("parity set too large");
  std::vector<int> values(S.begin(), S.end());
  for (int s : values) {
    if (s < 0) throw InvalidArgument("parity set must contain natural numbers");
  }
  const int n = static_cast<int>(values.size());
  VertexSet second;
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    if (values[static_cast<std::size_t>(u - 1)] % 2 != 0) second.insert(u);
    for (int v = u + 1; v <= n; ++v) {
      if ((values[static_cast<std::size_t>(u - 1)] - values[static_cast<std::size_t>(v - 1)]) % 2 != 0) {
        edges.push_back({u, v});
      }
    }
  }
  return ColoredDigraph(n, second, edges);
}

ColoredDigraph odd_even_graph(const std::set<int>& A, const std::set<int>& O) {
  for (int a : A) {
    if (a < 0 || a % 2 != 0) throw InvalidArgument("A must hold non-negative even integers; got " + std::to_string(a));
  }
  for (int o : O) {
    if (o < 1 || o % 2 == 0) throw InvalidArgument("O must hold positive odd integers; got " + std::to_string(o));
  }
  if (static_cast<int>(A.size()) > ColoredDigraph::kMaxOrder) throw InvalidArgument("A is too large");
  std::vector<int> values(A.begin(), A.end());
  const int n = static_cast<int>(values.size());
  VertexSet second;
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    int a = values[static_cast<std::size_t>(u - 1)];
    if (a % 4 == 2) second.insert(u);
    for (int v = 1; v <= n; ++v) {
      int b = values[static_cast<std::size_t>(v - 1)];
      if (u != v && b > a && O.contains((a + b) / 2) && O.contains((b - a) / 2)) edges.push_back({u, v});
    }
  }
  return ColoredDigraph(n, second, edges);
}

ColoredDigraph random_bitournament(int a, int b, std::uint64_t seed) {
  if (a < 1 || b < 1) throw InvalidArgument("bitournament classes must be non-empty");
  if (a + b > ColoredDigraph::kMaxOrder) throw InvalidArgument("bitournament too large");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex x = 1; x <= a; ++x) {
    for (Vertex y = a + 1; y <= a + b; ++y) {
      edges.push_back(rng.coin() ? Edge{y, x} : Edge{x, y});
    }
  }
  return ColoredDigraph(a + b, VertexSet::range(a + 1, a + b), edges);
}

}  // namespace bmg
