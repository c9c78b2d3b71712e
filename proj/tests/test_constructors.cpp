#include <doctest.h>

#include "bmg/axioms.hpp"
#include "bmg/constructors.hpp"
#include "bmg/rng.hpp"
#include "bmg/structure.hpp"
#include "bmg/truncation.hpp"
#include "support.hpp"

using namespace bmg;
using namespace bmg::testing;

TEST_CASE("generator sequence") {
  Rng r(1);
  CHECK(r.next() == 7806831264735756412ULL);
  Rng a(42), b(42);
  for (int k = 0; k < 10; ++k) CHECK(a.next() == b.next());
  Rng c(3);
  for (int k = 0; k < 1000; ++k) CHECK(c.uniform_below(7) < 7);
}

TEST_CASE("join via an in-closed set") {
  ColoredDigraph two = fixture("gamma_2");
  std::vector<ColoredDigraph> parts{two, two};
  ColoredDigraph u = disjoint_union(parts);
  ColoredDigraph j = join_via_minimal(u, VertexSet{1, 2});
  CHECK(is_2cbmg(j));
  CHECK(is_weakly_connected(j));
  CHECK(j.has_edge(1, 4));
  CHECK(j.has_edge(2, 3));
  CHECK_THROWS_AS(join_via_minimal(u, VertexSet{3}), PreconditionError);
  CHECK_THROWS_AS(join_via_minimal(graph("<2|[1,2]>", "1 | 2"), VertexSet{1}), PreconditionError);
  CHECK(join_via_minimal(u, VertexSet{}) == u);
  ColoredDigraph g = fixture("gamma1_3_intro");
  ColoredDigraph h = join_via_minimal(g, VertexSet{1});
  CHECK(h == g);
}

TEST_CASE("join of disjoint graphs") {
  ColoredDigraph two = fixture("gamma_2");
  ColoredDigraph three = fixture("gamma1_3_intro");
  std::vector<ColoredDigraph> a{two, two};
  ColoredDigraph ja = join_disjoint(a);
  CHECK(ja.order() == 4);
  CHECK(is_2cbmg(ja));
  CHECK(is_weakly_connected(ja));
  std::vector<ColoredDigraph> b{three};
  CHECK(join_disjoint(b) == three);
  std::vector<ColoredDigraph> c{two, three};
  ColoredDigraph jc = join_disjoint(c);
  CHECK(jc.order() == 5);
  CHECK(is_2cbmg(jc));
  CHECK(is_weakly_connected(jc));
  std::vector<ColoredDigraph> bad{graph("<2|[1,2]>", "1 | 2")};
  CHECK_THROWS_AS(join_disjoint(bad), PreconditionError);
}

TEST_CASE("joins of random elementary graphs stay 2-cBMGs") {
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    std::vector<ColoredDigraph> parts;
    int k = 2 + static_cast<int>(rng.uniform_below(2));
    for (int p = 0; p < k; ++p) {
      std::vector<ElementaryBlock> bl{{2 + static_cast<int>(rng.uniform_below(2)), rng.coin() ? Color::kFirst : Color::kSecond}};
      parts.push_back(elementary_graph(bl));
    }
    ColoredDigraph j = join_disjoint(parts);
    REQUIRE(is_2cbmg(j));
    REQUIRE(is_weakly_connected(j));
  }
}

TEST_CASE("family graphs") {
  std::vector<FamilyBlock> single{{2, 2}};
  ColoredDigraph s = family_graph(single);
  CHECK(s.edge_count() == 8);
  CHECK(symmetric_edges(s).size() == 4);
  CHECK(is_2cbmg(s));
  std::vector<FamilyBlock> pairs{{1, 1}, {1, 1}};
  ColoredDigraph p = family_graph(pairs);
  CHECK(to_text(p) == "<4|[1,2],[1,4],[2,1],[2,3],[3,4],[4,3]>");
  CHECK(is_2cbmg(p));
  std::vector<FamilyBlock> three{{2, 2}, {2, 2}, {2, 2}};
  SymmetricComponents sc = symmetric_components(family_graph(three));
  REQUIRE(sc.components.size() == 3);
  for (const auto& c : sc.components) CHECK(c.complete_bipartite);
  std::vector<FamilyBlock> empty;
  CHECK_THROWS(family_graph(empty));
  std::vector<FamilyBlock> zero{{0, 1}};
  CHECK_THROWS(family_graph(zero));
}

TEST_CASE("family graphs over random specs") {
  Rng rng(2024);
  for (int t = 0; t < 50; ++t) {
    std::vector<FamilyBlock> spec;
    int m = 1 + static_cast<int>(rng.uniform_below(4));
    for (int k = 0; k < m; ++k) {
      spec.push_back({1 + static_cast<int>(rng.uniform_below(3)), 1 + static_cast<int>(rng.uniform_below(3))});
    }
    ColoredDigraph g = family_graph(spec);
    REQUIRE(is_2cbmg(g));
    for (const auto& c : symmetric_components(g).components) REQUIRE(c.complete_bipartite);
  }
}

TEST_CASE("parity graphs") {
  CHECK(to_text(parity_graph({1, 2})) == "<2|[1,2]>");
  ColoredDigraph g3 = parity_graph({1, 2, 3});
  CHECK(to_text(g3) == "<3|[1,2],[2,3]>");
  ColoredDigraph g4 = parity_graph({1, 2, 3, 4});
  CHECK(to_text(g4) == "<4|[1,2],[1,4],[2,3],[3,4]>");
  CHECK_FALSE(check_n2(g4));
  CHECK(std::holds_alternative<TopologicalOrder>(topological_order(g4)));
  // evens form the first class
  CHECK(g4.color(2) == Color::kFirst);
  CHECK(g4.color(1) == Color::kSecond);
  CHECK_THROWS(parity_graph({}));
}

TEST_CASE("odd-even digraphs") {
  CHECK(to_text(odd_even_graph({0, 2}, {1})) == "<2|[1,2]>");
  CHECK(odd_even_graph({0, 4}, {1}).edge_count() == 0);
  CHECK(odd_even_graph({}, {1}).order() == 0);
  CHECK_THROWS(odd_even_graph({1}, {1}));
  CHECK_THROWS(odd_even_graph({0}, {2}));
  ColoredDigraph g = odd_even_graph({0, 2, 4, 6, 8, 10}, {1, 3, 5, 7});
  CHECK(is_oriented(g));
  CHECK(std::holds_alternative<TopologicalOrder>(topological_order(g)));
  CHECK(g.color(1) == Color::kFirst);
  CHECK(g.color(2) == Color::kSecond);
}

TEST_CASE("random bitournaments") {
  ColoredDigraph a = random_bitournament(1, 1, 9);
  CHECK(a.edge_count() == 1);
  std::set<std::vector<Edge>> seen;
  for (std::uint64_t s = 0; s < 200; ++s) {
    ColoredDigraph g = random_bitournament(1, 2, s);
    CHECK(g.edge_count() == 2);
    seen.insert(g.edges());
  }
  CHECK(seen.size() == 4);
  CHECK(random_bitournament(3, 3, 1) == random_bitournament(3, 3, 1));
  ColoredDigraph b = random_bitournament(3, 4, 5);
  CHECK(is_oriented(b));
  for (Vertex x = 1; x <= 3; ++x)
    for (Vertex y = 4; y <= 7; ++y) CHECK(b.has_edge(x, y) != b.has_edge(y, x));
}
