#include <doctest.h>

#include "bmg/axioms.hpp"
#include "bmg/canonical.hpp"
#include "bmg/structure.hpp"
#include "bmg/tree.hpp"
#include "support.hpp"

using namespace bmg;
using namespace bmg::testing;

TEST_CASE("lca") {
  // root 0 -> {1:z, 2:inner}, inner -> {3:x, 4:y}
  RootedTree t({-1, 0, 0, 2, 2});
  CHECK(t.lca(3, 4) == 2);
  CHECK(t.lca(3, 1) == 0);
  CHECK(t.lca(3, 3) == 3);
  CHECK(t.depth(4) == 2);
  CHECK(t.leaves() == std::vector<int>{1, 3, 4});
  RootedTree cherry({-1, 0, 0});
  CHECK(cherry.lca(1, 2) == 0);
  CHECK_THROWS(t.lca(0, 9));
  CHECK_THROWS(RootedTree({-1, 2, 0}));
  CHECK_THROWS(RootedTree({0}));
}

TEST_CASE("tree text") {
  ColoredTree t = parse_colored_tree("((x:0,y:1),z:1);");
  CHECK(t.tree.size() == 5);
  CHECK(t.tree.leaves().size() == 3);
  CHECK(t.tree.name(t.tree.leaves()[0]) == "x");
  CHECK(t.colors == std::vector<Color>{Color::kFirst, Color::kSecond, Color::kSecond});
  CHECK(format_colored_tree(t) == "((x:0,y:1),z:1);");
  CHECK(format_colored_tree(parse_colored_tree(format_colored_tree(t))) == format_colored_tree(t));
  CHECK_THROWS_AS(parse_colored_tree("((x:0,y:1),z:1)"), ParseError);
  CHECK_THROWS_AS(parse_colored_tree("(x:2,y:1);"), ParseError);
  CHECK_THROWS_AS(parse_colored_tree("(x:0,y:1;"), ParseError);
}

TEST_CASE("best match graphs of small trees") {
  ColoredDigraph cherry = best_match_graph(parse_colored_tree("(a:0,b:1);"));
  CHECK(cherry == fixture("gamma_2"));
  // leaves x, y, z become vertices 1, 2, 3
  ColoredDigraph cat = best_match_graph(parse_colored_tree("((x:0,y:1),z:1);"));
  CHECK(to_text(cat) == "<3|[1,2],[2,1],[3,1]>");
  CHECK(are_isomorphic(cat, fixture("gamma1_3_intro"), IsoConvention::kUncolored));
  ColoredDigraph star = best_match_graph(parse_colored_tree("(a:0,b:0,c:1);"));
  CHECK(to_text(star) == "<3|[1,3],[2,3],[3,1],[3,2]>");
  CHECK(are_isomorphic(star, fixture("gamma2_3")));
  CHECK_THROWS(best_match_graph(parse_colored_tree("(a:0,b:0);")));
}

TEST_CASE("random trees") {
  ColoredTree two = random_colored_tree(2, 11);
  CHECK(two.tree.size() == 3);
  CHECK(two.colors[0] != two.colors[1]);
  CHECK(format_colored_tree(random_colored_tree(9, 4)) == format_colored_tree(random_colored_tree(9, 4)));
  CHECK_THROWS(random_colored_tree(1, 1));
  ColoredDigraph g = best_match_graph(random_colored_tree(12, 7));
  CHECK(g.order() == 12);
  CHECK(is_2cbmg(g));
}

TEST_CASE("best matches are exactly the deepest lcas") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    ColoredTree t = random_colored_tree(2 + static_cast<int>(seed % 11), seed);
    ColoredDigraph g = best_match_graph(t);
    const auto& leaves = t.tree.leaves();
    for (std::size_t a = 0; a < leaves.size(); ++a) {
      int best = -1;
      for (std::size_t b = 0; b < leaves.size(); ++b) {
        if (t.colors[b] == t.colors[a]) continue;
        best = std::max(best, t.tree.depth(t.tree.lca(leaves[a], leaves[b])));
      }
      for (std::size_t b = 0; b < leaves.size(); ++b) {
        bool expect = t.colors[b] != t.colors[a] && t.tree.depth(t.tree.lca(leaves[a], leaves[b])) == best;
        REQUIRE(g.has_edge(static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1)) == expect);
      }
    }
  }
}

TEST_CASE("oracle graphs have consistent acyclic orientations") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    ColoredDigraph g = best_match_graph(random_colored_tree(2 + static_cast<int>(seed % 11), seed));
    REQUIRE(std::holds_alternative<TopologicalOrder>(topological_order(consistent_underlying_oriented(g))));
  }
}
