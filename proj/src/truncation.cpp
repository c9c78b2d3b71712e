#include "bmg/truncation.hpp"

#include <algorithm>

namespace bmg {

std::string dependent_kind_name(DependentKind k) {
  switch (k) {
    case DependentKind::kNone: return "none";
    case DependentKind::kToM: return "to-m";
    case DependentKind::kToEll: return "to-ell";
    case DependentKind::kMixed: return "mixed";
  }
  return "?";
}

std::string case_name(TruncationCase c) {
  switch (c) {
    case TruncationCase::kI: return "I";
    case TruncationCase::kII: return "II";
    case TruncationCase::kOther: return "other";
  }
  return "?";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// Shared core; `allow_sink` admits one sink (the graphs decompose meets
// after a case II step).
TerminalAnalysis analyze(const ColoredDigraph& g, bool allow_sink) {
  AxiomReport report = check_2cbmg(g);
  require(allow_sink ? report.is_almost_2cbmg : report.is_2cbmg, "input is not a 2-cBMG: " + report.summary());
  require(equivalence_classes(g).all_singletons(), "input has equivalent vertices");
  require(g.order() >= 2, "input has fewer than two vertices");

  auto topo = topological_order(consistent_underlying_oriented(g));
  if (!std::holds_alternative<TopologicalOrder>(topo)) {
    throw InternalError("class-consistent orientation has a directed cycle");
  }
  TerminalAnalysis t;
  t.order = std::get<TopologicalOrder>(topo);
  t.m = t.order.order.back();
  VertexSet partners = g.out_neighbors(t.m) & g.in_neighbors(t.m);
  require(!partners.empty(), "last vertex " + std::to_string(t.m) + " has no symmetric partner");
  require(partners.size() == 1, "last vertex " + std::to_string(t.m) + " lies on several symmetric edges");
  t.ell = partners.front();

  VertexSet to_m;
  VertexSet to_ell;
  for (Vertex d = 1; d <= g.order(); ++d) {
    if (d == t.m || d == t.ell) continue;
    if (g.out_neighbors(d) == VertexSet{t.m}) to_m.insert(d);
    if (g.out_neighbors(d) == VertexSet{t.ell}) to_ell.insert(d);
  }
  t.dependents = to_m | to_ell;
  if (!to_m.empty() && !to_ell.empty()) {
    t.kind = DependentKind::kMixed;
  } else if (!to_m.empty()) {
    t.kind = DependentKind::kToM;
  } else if (!to_ell.empty()) {
    t.kind = DependentKind::kToEll;
  }

  const int ell_pos = t.order.position(t.ell);
  for (std::size_t k = static_cast<std::size_t>(ell_pos); k < t.order.order.size(); ++k) {
    Vertex v = t.order.order[k];
    if (v != t.m && g.has_edge(t.ell, v)) t.ell_has_no_later_edge = false;
  }
  return t;
}

TopologicalOrder normalized(const ColoredDigraph& g, const TerminalAnalysis& t) {
  TopologicalOrder out;
  for (Vertex v : t.order.order) {
    if (v != t.m && v != t.ell && !t.dependents.contains(v)) out.order.push_back(v);
  }
  for (Vertex d : t.dependents) out.order.push_back(d);
  out.order.push_back(t.ell);
  out.order.push_back(t.m);

  OrientedDigraph o = consistent_underlying_oriented(g);
  std::vector<int> pos(static_cast<std::size_t>(g.order()) + 1);
  for (std::size_t k = 0; k < out.order.size(); ++k) pos[static_cast<std::size_t>(out.order[k])] = static_cast<int>(k);
  for (const Edge& e : o.graph.edges()) {
    if (pos[static_cast<std::size_t>(e.tail)] > pos[static_cast<std::size_t>(e.head)]) {
      throw InternalError("rearranged order is not topological");
    }
  }
  return out;
}

TruncationStep truncate_with(const ColoredDigraph& g, bool allow_sink) {
  TruncationStep s;
  s.terminal = analyze(g, allow_sink);
  s.normalized = normalized(g, s.terminal);
  s.removed = s.terminal.dependents | VertexSet{s.terminal.m, s.terminal.ell};
  VertexSet keep = g.vertices() - s.removed;
  s.surviving = keep.to_vector();
  s.remainder = g.induced(keep);
  s.remainder_report = check_2cbmg(s.remainder);
  if (!s.remainder_report.satisfies_n1_to_n3()) {
    throw InternalError("truncated graph violates N1-N3: " + s.remainder_report.summary());
  }
  const int r = s.terminal.dependents.size();
  if (r == 0 && s.remainder_report.is_2cbmg) {
    s.kind = TruncationCase::kI;
  } else if (r == 1 && s.remainder_report.is_almost_2cbmg) {
    s.kind = TruncationCase::kII;
  } else {
    s.kind = TruncationCase::kOther;
  }
  return s;
}

}  // namespace

TerminalAnalysis terminal_pair(const ColoredDigraph& g) { return analyze(g, false); }

TopologicalOrder normalize_order(const ColoredDigraph& g) { return normalized(g, analyze(g, false)); }

TruncationStep truncate(const ColoredDigraph& g) { return truncate_with(g, false); }

Decomposition decompose(const ColoredDigraph& g) {
  Decomposition dec;
  ColoredDigraph current = g;
  std::vector<Vertex> labels = g.vertices().to_vector();
  bool sink_allowed = false;
  int step = 0;

  auto stop = [&](const std::string& why) {
    dec.failed_at_step = step;
    dec.failure = why;
    dec.stuck = current;
    return dec;
  };

  while (current.order() > 0) {
    ++step;
    AxiomReport report = check_2cbmg(current);
    if (!report.satisfies_n1_to_n3()) return stop("not a 2-cBMG: " + report.summary());
    if (!report.sinks.empty() && !(sink_allowed && report.sinks.size() == 1)) {
      return stop(report.is_almost_2cbmg ? "only an almost 2-cBMG" : "several sinks");
    }
    if (!equivalence_classes(current).all_singletons()) return stop("equivalent vertices present");

    TruncationStep s;
    try {
      s = truncate_with(current, sink_allowed);
    } catch (const PreconditionError& e) {
      return stop(e.what());
    }

    DecompositionBlock block;
    for (std::size_t k = s.normalized.order.size() - static_cast<std::size_t>(s.removed.size());
         k < s.normalized.order.size(); ++k) {
      block.vertices.push_back(labels[static_cast<std::size_t>(s.normalized.order[k] - 1)]);
    }
    block.kind = s.kind;
    if (s.removed.size() == 3) {
      const auto& ord = s.normalized.order;
      bool holds = false;
      if (ord.size() >= 4) {
        Vertex before = ord[ord.size() - 4];
        VertexSet target{ord[ord.size() - 3], ord[ord.size() - 1]};
        VertexSet out = current.out_neighbors(before);
        holds = target.is_subset_of(out) && out != target;
      }
      block.triple_side_condition = holds;
    }
    block.before = current;
    block.remainder = s.remainder;
    dec.blocks.push_back(block);

    std::vector<Vertex> next_labels;
    for (Vertex v : s.surviving) next_labels.push_back(labels[static_cast<std::size_t>(v - 1)]);

    if (s.kind == TruncationCase::kOther) {
      current = s.remainder;
      labels = next_labels;
      ++step;
      if (s.terminal.dependents.size() >= 2) return stop("several dependent vertices");
      if (s.terminal.kind == DependentKind::kMixed) return stop("dependent vertices of both kinds");
      if (s.remainder_report.is_almost_2cbmg) return stop("remainder is only an almost 2-cBMG");
      return stop("remainder is not an almost 2-cBMG");
    }
    sink_allowed = s.kind == TruncationCase::kII;
    current = s.remainder;
    labels = next_labels;
  }
  dec.complete = true;
  return dec;
}

ColoredDigraph elementary_graph(std::span<const ElementaryBlock> blocks) {
  if (blocks.empty()) throw InvalidArgument("no blocks given");
  int n = 0;
  for (const auto& b : blocks) {
    if (b.size != 2 && b.size != 3) throw InvalidArgument("elementary blocks must have 2 or 3 vertices");
    n += b.size;
  }
  if (n > ColoredDigraph::kMaxOrder) throw InvalidArgument("elementary graph too large");
  VertexSet second;
  std::vector<Edge> edges;
  Vertex i = 1;
  for (const auto& b : blocks) {
    Vertex top = i + b.size - 1;
    Color below = opposite(b.top);
    if (b.top == Color::kSecond) second.insert(top);
    for (Vertex v = i; v < top; ++v) {
      if (below == Color::kSecond) second.insert(v);
    }
    edges.push_back({top - 1, top});
    edges.push_back({top, top - 1});
    if (b.size == 3) edges.push_back({i, top});
    i = top + 1;
  }
  return ColoredDigraph(n, second, edges);
}

}  // namespace bmg
