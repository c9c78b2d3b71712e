#include <doctest.h>

#include <map>

#include "bmg/axioms.hpp"
#include "bmg/canonical.hpp"
#include "bmg/enumeration.hpp"
#include "bmg/rng.hpp"
#include "bmg/structure.hpp"
#include "support.hpp"

using namespace bmg;
using namespace bmg::testing;

namespace {

ScanOptions options(IsoConvention c, bool reference = false, int workers = 0) {
  ScanOptions o;
  o.convention = c;
  o.use_reference = reference;
  o.workers = workers;
  return o;
}

ColoredDigraph shuffled(const ColoredDigraph& g, Rng& rng, bool keep_colors) {
  std::vector<Vertex> first = g.color_class(Color::kFirst).to_vector();
  std::vector<Vertex> second = g.color_class(Color::kSecond).to_vector();
  auto shuffle = [&](std::vector<Vertex>& v) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[rng.uniform_below(k)]);
  };
  std::vector<Vertex> images(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) images[static_cast<std::size_t>(v)] = v + 1;
  if (keep_colors) {
    std::vector<Vertex> f = first, s = second;
    shuffle(f);
    shuffle(s);
    for (std::size_t k = 0; k < first.size(); ++k) images[static_cast<std::size_t>(first[k] - 1)] = f[k];
    for (std::size_t k = 0; k < second.size(); ++k) images[static_cast<std::size_t>(second[k] - 1)] = s[k];
  } else {
    shuffle(images);
  }
  return g.relabeled(images);
}

}  // namespace

TEST_CASE("filters") {
  CHECK(parse_filter("E") == filter_E());
  CHECK(parse_filter("connected,no-equivalent,sink-free") == filter_E());
  CHECK(parse_filter("n1-n3") == filter_A());
  CHECK_FALSE(parse_filter("F"));
  CHECK(filter_name(filter_C()) == "C");
  CHECK(filter_name({.connected = false, .no_equivalent = true, .sink_free = true}) == "n1-n3,no-equivalent,sink-free");
  GraphTraits t = graph_traits(fixture("gamma2_3"));
  CHECK(t.n1_n3);
  CHECK(t.connected);
  CHECK_FALSE(t.no_equivalent);
  CHECK(t.sink_free);
  CHECK(passes(t, filter_D()));
  CHECK_FALSE(passes(t, filter_E()));
}

TEST_CASE("canonical forms") {
  ColoredDigraph g1 = fixture("gamma1_4");
  ColoredDigraph g2 = fixture("gamma2_4");
  std::vector<Vertex> perm{2, 1, 4, 3};
  CHECK(canonical_form(g1) == canonical_form(g1.relabeled(perm)));
  CHECK(canonical_form(g1) != canonical_form(g2));
  CHECK(canonical_form(ColoredDigraph(4, VertexSet{3, 4})) != canonical_form(ColoredDigraph(4, VertexSet{2, 3, 4})));
  CHECK(are_isomorphic(fixture("pi11"), fixture("pi21")));
  CHECK_FALSE(are_isomorphic(fixture("gamma_2"), graph("<2|[1,2]>", "1 | 2")));
  CHECK(are_isomorphic(g1, g1));
  CHECK(from_canonical(canonical_form(g1)).order() == 4);
  CHECK(are_isomorphic(from_canonical(canonical_form(g1)), g1));
  CHECK(to_hex(canonical_form(fixture("gamma_2"))) == "1x1:3");
  CHECK(parse_convention("swap-never") == IsoConvention::kSwapNever);
  CHECK_FALSE(parse_convention("both"));
}

TEST_CASE("conventions differ on colour swaps") {
  ColoredDigraph g = graph("<4|[1,3],[1,4]>", "1 2 | 3 4");
  ColoredDigraph h = g.with_colors_swapped();
  CHECK(are_isomorphic(g, h, IsoConvention::kColored));
  CHECK_FALSE(are_isomorphic(g, h, IsoConvention::kSwapNever));
  ColoredDigraph flipped = graph("<4|[3,1],[3,2]>", "1 2 | 3 4");
  CHECK_FALSE(are_isomorphic(g, flipped, IsoConvention::kSwapNever));
  CHECK(are_isomorphic(g, flipped, IsoConvention::kColored));
  // one component recoloured
  ColoredDigraph a = graph("<4|[1,2],[3,4]>", "1 3 | 2 4");
  ColoredDigraph b = graph("<4|[1,2],[4,3]>", "1 3 | 2 4");
  CHECK(are_isomorphic(a, b, IsoConvention::kUncolored));
  CHECK_FALSE(are_isomorphic(a, b, IsoConvention::kColored));
}

TEST_CASE("canonical forms agree with permutation search") {
  for (IsoConvention c : {IsoConvention::kColored, IsoConvention::kSwapNever, IsoConvention::kUncolored}) {
    for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
      std::map<std::vector<Edge>, CanonicalForm> key_to_form;
      std::map<CanonicalForm, std::vector<Edge>> form_to_key;
      for_each_subgraph(i, j, [&](const ColoredDigraph& g) {
        std::vector<Edge> key = brute_key(g, c);
        CanonicalForm f = canonical_form(g, c);
        auto [it, fresh] = key_to_form.emplace(key, f);
        REQUIRE(it->second == f);
        auto [it2, fresh2] = form_to_key.emplace(f, key);
        REQUIRE(it2->second == key);
        (void)fresh;
        (void)fresh2;
      });
    }
  }
}

TEST_CASE("coloured canonical forms on three by three") {
  std::map<std::vector<Edge>, CanonicalForm> key_to_form;
  std::map<CanonicalForm, std::vector<Edge>> form_to_key;
  for_each_subgraph(3, 3, [&](const ColoredDigraph& g) {
    std::vector<Edge> key = brute_key(g, IsoConvention::kColored);
    CanonicalForm f = canonical_form(g, IsoConvention::kColored);
    REQUIRE(key_to_form.emplace(key, f).first->second == f);
    REQUIRE(form_to_key.emplace(f, key).first->second == key);
  });
  CHECK(key_to_form.size() == form_to_key.size());
}

TEST_CASE("canonical forms are relabelling invariant") {
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    int a = 1 + static_cast<int>(rng.uniform_below(5));
    int b = 1 + static_cast<int>(rng.uniform_below(5));
    std::vector<Edge> es;
    for (int x = 1; x <= a; ++x)
      for (int y = a + 1; y <= a + b; ++y) {
        if (rng.coin()) es.push_back({x, y});
        if (rng.coin()) es.push_back({y, x});
      }
    ColoredDigraph g(a + b, VertexSet::range(a + 1, a + b), es);
    REQUIRE(canonical_form(g, IsoConvention::kSwapNever) == canonical_form(shuffled(g, rng, true), IsoConvention::kSwapNever));
    REQUIRE(canonical_form(g, IsoConvention::kUncolored) == canonical_form(shuffled(g, rng, false), IsoConvention::kUncolored));
  }
}

TEST_CASE("one by one classes counted by hand") {
  // subsets of {12, 21}: empty, {12}, {21}, both; all satisfy N1-N3
  ScanResult s = scan_complete_bipartite(1, 1, options(IsoConvention::kSwapNever));
  CHECK(s.count(filter_A()) == 4);
  CHECK(s.count(filter_B()) == 3);
  CHECK(s.count(filter_E()) == 1);
  ScanResult c = scan_complete_bipartite(1, 1, options(IsoConvention::kColored));
  CHECK(c.count(filter_A()) == 3);
  ScanResult u = scan_complete_bipartite(1, 1, options(IsoConvention::kUncolored));
  CHECK(u.count(filter_A()) == 3);
  CHECK(u.count(filter_D()) == 1);
}

TEST_CASE("scan kernels agree") {
  for (IsoConvention c : {IsoConvention::kColored, IsoConvention::kSwapNever, IsoConvention::kUncolored}) {
    for (auto [i, j] : {std::pair{1, 2}, {2, 2}, {2, 3}, {1, 5}}) {
      ScanResult ref = scan_complete_bipartite(i, j, options(c, true));
      ScanResult one = scan_complete_bipartite(i, j, options(c, false, 1));
      ScanResult many = scan_complete_bipartite(i, j, options(c, false, 4));
      REQUIRE(ref.classes == one.classes);
      REQUIRE(ref.classes == many.classes);
    }
  }
}

TEST_CASE("scan classes match brute-force classes") {
  for (IsoConvention c : {IsoConvention::kColored, IsoConvention::kSwapNever, IsoConvention::kUncolored}) {
    std::set<std::vector<Edge>> keys;
    for_each_subgraph(2, 3, [&](const ColoredDigraph& g) {
      if (check_2cbmg(g).satisfies_n1_to_n3()) keys.insert(brute_key(g, c));
    });
    CHECK(scan_complete_bipartite(2, 3, options(c)).count(filter_A()) == keys.size());
  }
}

TEST_CASE("scan budget") {
  CHECK_THROWS_AS(scan_complete_bipartite(3, 5, options(IsoConvention::kColored)), InvalidArgument);
  CHECK_THROWS_AS(scan_extensions(ColoredDigraph(8, VertexSet{5, 6, 7, 8}), options(IsoConvention::kColored)),
                  InvalidArgument);
  CHECK_NOTHROW(scan_extensions(fixture("pi2_8"), options(IsoConvention::kColored)));
}

TEST_CASE("frames") {
  ScanFrame f = complete_bipartite_frame(2, 3);
  CHECK(f.free_bits.size() == 12);
  ColoredDigraph g = graph("<5|[1,3],[4,2],[5,1]>", "1 2 | 3 4 5");
  CHECK(f.decode(f.mask_of(g)) == g);
  CHECK(f.mask_of(g) == ((1U << 0) | (1U << (6 + 1 * 2 + 1)) | (1U << (6 + 2 * 2 + 0))));
  ScanFrame e = extension_frame(fixture("pi11"));
  CHECK(e.free_bits.size() == 24 - 7);
  CHECK_THROWS(f.mask_of(fixture("gamma_2")));
}

TEST_CASE("classification rows") {
  auto rows = classification_table(4, options(IsoConvention::kUncolored));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].A == 26);
  CHECK(rows[0].B == 14);
  CHECK(rows[0].E == 2);
  auto three = classification_table(3, options(IsoConvention::kUncolored));
  REQUIRE(three.size() == 1);
  CHECK(three[0].i == 1);
  CHECK(three[0].E == 1);
  auto e3 = scan_complete_bipartite(1, 2, options(IsoConvention::kUncolored)).select(filter_E());
  REQUIRE(e3.size() == 1);
  CHECK(to_text(e3[0]) == "<3|[1,2],[2,1],[3,1]>");
}

TEST_CASE("filter lattice") {
  for (IsoConvention c : {IsoConvention::kColored, IsoConvention::kUncolored}) {
    for (auto [i, j] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
      ScanResult s = scan_complete_bipartite(i, j, options(c));
      auto forms = [&](FilterSet f) {
        std::set<CanonicalForm> r;
        for (const auto& g : s.select(f)) r.insert(canonical_form(g, c));
        return r;
      };
      auto A = forms(filter_A()), B = forms(filter_B()), C = forms(filter_C()), D = forms(filter_D()),
           E = forms(filter_E());
      for (const auto& f : E) REQUIRE((B.count(f) && C.count(f) && D.count(f)));
      for (const auto* X : {&B, &C, &D})
        for (const auto& f : *X) REQUIRE(A.count(f));
      for (const auto& g : s.select(filter_E())) {
        REQUIRE(is_2cbmg(g));
        REQUIRE(is_weakly_connected(g));
        REQUIRE(equivalence_classes(g).all_singletons());
      }
    }
  }
}

TEST_CASE("extensions of a complete graph") {
  std::vector<Edge> all;
  for (int x = 1; x <= 2; ++x)
    for (int y = 3; y <= 4; ++y) {
      all.push_back({x, y});
      all.push_back({y, x});
    }
  ColoredDigraph k(4, VertexSet{3, 4}, all);
  ScanResult s = scan_extensions(k, options(IsoConvention::kColored));
  CHECK(s.count(filter_A()) == 1);
  CHECK(s.count(filter_C()) == 0);
}
