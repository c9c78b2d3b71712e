#include <doctest.h>

#include "properties.hpp"

using namespace bmg;
using namespace bmg::testing;

namespace {

const std::vector<ColoredDigraph>& no_equivalent_upto_6() {
  static const auto g = enumerated(filter_C(), 6);
  return g;
}

const std::vector<ColoredDigraph>& sink_free_upto_6() {
  static const auto g = enumerated(filter_D(), 6);
  return g;
}

void require(const Outcome& o) {
  INFO(o.detail);
  CHECK(o.ok);
  CHECK(o.checked > 0);
}

}  // namespace

TEST_CASE("tree oracle yields 2-cBMGs") { require(tree_oracle(1000)); }

TEST_CASE("orientations of graphs without equivalent vertices are acyclic") {
  require(random_orientations_acyclic(no_equivalent_upto_6(), 16));
}

TEST_CASE("consistent orientations of 2-cBMGs are acyclic") {
  require(consistent_orientations_acyclic(sink_free_upto_6()));
}

TEST_CASE("bitournaments: bi-transitive iff acyclic iff parity graph") { require(bitournament_equivalence(3)); }

TEST_CASE("degree-balanced bitournaments are never bi-transitive") {
  Outcome o = degree_balanced(4);
  require(o);
  CHECK(o.checked == 90);
}

TEST_CASE("random family graphs") { require(family_random(50)); }

TEST_CASE("symmetric components of 2-cBMGs are complete") { require(sigma_complete(sink_free_upto_6())); }

TEST_CASE("bi-transitive lemmas") { require(singleton_lemmas(enumerated(filter_A(), 5))); }

TEST_CASE("domination") { require(domination(sink_free_upto_6())); }

TEST_CASE("truncation invariants") { require(truncation_invariants(sink_free_upto_6())); }
