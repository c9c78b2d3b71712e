#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmg/axioms.hpp"
#include "bmg/graph.hpp"
#include "bmg/structure.hpp"

namespace bmg {

/// Which neighbourhood the dependent vertices d share.
enum class DependentKind { kNone, kToM, kToEll, kMixed };

std::string dependent_kind_name(DependentKind k);

struct TerminalAnalysis {
  /// Topological order of the class-consistent orientation (Kahn, smallest first).
  TopologicalOrder order;
  Vertex m = 0;
  Vertex ell = 0;
  /// Vertices d outside {ell, m} with N(d) = {m} or N(d) = {ell}.
  VertexSet dependents;
  DependentKind kind = DependentKind::kNone;
  /// No edge ell -> v for any v after ell in `order` other than m.
  bool ell_has_no_later_edge = true;
};

/// Throws PreconditionError unless g is a 2-cBMG without equivalent vertices.
TerminalAnalysis terminal_pair(const ColoredDigraph& g);

/// Same order with ell moved to position n-1 and the dependents directly
/// before it.
TopologicalOrder normalize_order(const ColoredDigraph& g);

enum class TruncationCase { kI, kII, kOther };

std::string case_name(TruncationCase c);

struct TruncationStep {
  TerminalAnalysis terminal;
  TopologicalOrder normalized;
  VertexSet removed;
  /// Induced on the surviving vertices, relabelled ascending.
  ColoredDigraph remainder;
  /// Remainder vertex k is source vertex surviving[k-1].
  std::vector<Vertex> surviving;
  AxiomReport remainder_report;
  TruncationCase kind = TruncationCase::kOther;
};

TruncationStep truncate(const ColoredDigraph& g);

struct DecompositionBlock {
  /// Source labels, in normalized order: dependents, ell, m.
  std::vector<Vertex> vertices;
  TruncationCase kind = TruncationCase::kOther;
  /// For triples: N(p) strictly contains {p+1, p+3} where p is the position
  /// just before the triple. Recorded only.
  std::optional<bool> triple_side_condition;
  /// The graph this step was applied to, in its own labels.
  ColoredDigraph before;
  ColoredDigraph remainder;
};

struct Decomposition {
  std::vector<DecompositionBlock> blocks;
  bool complete = false;
  /// 1-based step at which the process stopped; 0 when complete.
  int failed_at_step = 0;
  std::string failure;
  /// The graph that could not be processed further.
  std::optional<ColoredDigraph> stuck;
};

/// Repeats truncate until the vertex set is exhausted or the hypotheses of
/// the pair/triple splitting stop holding. A single sink is tolerated right
/// after a case II step.
Decomposition decompose(const ColoredDigraph& g);

struct ElementaryBlock {
  int size = 2;
  /// Colour of the block's highest label.
  Color top = Color::kSecond;
};

/// Blocks occupy consecutive labels starting at 1.
ColoredDigraph elementary_graph(std::span<const ElementaryBlock> blocks);

}  // namespace bmg
