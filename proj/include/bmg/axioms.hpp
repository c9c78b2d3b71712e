#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmg/graph.hpp"

namespace bmg {

enum class Axiom { kN1, kN2, kN3, kN4 };

std::string axiom_name(Axiom a);

/// Concrete vertices realising an axiom violation.
///   N1: (u, v, t, w)   u,v independent; u->t, v->w, t->w
///   N2: (u1, v1, u2, v2) u1->v1->u2->v2 present, u1->v2 missing
///   N3: (u, v)         premises hold, conclusion fails
///   N4: (u)            u has no out-neighbour
struct AxiomWitness {
  Axiom axiom = Axiom::kN1;
  std::vector<Vertex> vertices;

  friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

/// Each check returns std::nullopt on pass, otherwise the lexicographically
/// smallest violating vertex tuple.
std::optional<AxiomWitness> check_n1(const ColoredDigraph& g);
std::optional<AxiomWitness> check_n2(const ColoredDigraph& g);
std::optional<AxiomWitness> check_n3(const ColoredDigraph& g);

/// Vertices without out-neighbours; empty means N4 passes.
VertexSet check_n4(const ColoredDigraph& g);

/// N2 in set form: N(N(N(u))) is contained in N(u) for every u.
bool bi_transitive_by_sets(const ColoredDigraph& g);

/// Re-evaluates a witness against `g`; true when the violation is confirmed.
bool replay_witness(const ColoredDigraph& g, const AxiomWitness& w);

struct AxiomReport {
  std::optional<AxiomWitness> n1;
  std::optional<AxiomWitness> n2;
  std::optional<AxiomWitness> n3;
  VertexSet sinks;
  bool is_2cbmg = false;
  bool is_almost_2cbmg = false;

  bool satisfies_n1_to_n3() const { return !n1 && !n2 && !n3; }
  /// "2-cBMG", "almost 2-cBMG: sink at 2" or "not a 2-cBMG: N2 fails at (1,3,2,4)".
  std::string summary() const;
};

AxiomReport check_2cbmg(const ColoredDigraph& g);

/// Shorthand for check_2cbmg(g).is_2cbmg.
bool is_2cbmg(const ColoredDigraph& g);

/// One embedding of a forbidden pattern. Vertices are (x1, x2, y1, y2) for
/// patterns 1 and 2 and (x1, x2, y1, y2, y3) for pattern 3, where the x's
/// share one colour and the y's the other.
///   pattern 1: x1y1, y2x2, y1x2 present; x1y2 absent
///   pattern 2: x1y1, y1x2, x2y2 present; x1y2 absent
///   pattern 3: x1y1, x2y2, x1y3, x2y3 present; x1y2, x2y1 absent
struct PatternOccurrence {
  int pattern = 0;
  std::vector<Vertex> vertices;

  friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

std::vector<PatternOccurrence> match_forbidden_subgraphs(const ColoredDigraph& g);

}  // namespace bmg
