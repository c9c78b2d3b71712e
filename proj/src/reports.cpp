#include "bmg/reports.hpp"

#include "bmg/io.hpp"

namespace bmg {

namespace {

Json witness(const std::optional<AxiomWitness>& w) {
  if (!w) return "pass";
  return {{"witness", w->vertices}};
}

Json edge_list(const std::vector<Edge>& edges) {
  Json j = Json::array();
  for (const Edge& e : edges) j.push_back({e.tail, e.head});
  return j;
}

}  // namespace

Json to_json(VertexSet s) { return s.to_vector(); }

Json graph_summary(const ColoredDigraph& g) {
  Json j;
  j["graph"] = to_text(g);
  j["colors"] = colors_to_text(g);
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["n1"] = witness(r.n1);
  j["n2"] = witness(r.n2);
  j["n3"] = witness(r.n3);
  if (r.sinks.empty()) {
    j["n4"] = "pass";
  } else {
    j["n4"] = {{"sinks", to_json(r.sinks)}};
  }
  j["is_2cbmg"] = r.is_2cbmg;
  j["is_almost_2cbmg"] = r.is_almost_2cbmg;
  j["summary"] = r.summary();
  return j;
}

Json to_json(const EquivalenceClasses& eq) {
  Json j = Json::array();
  for (VertexSet c : eq.classes) j.push_back(to_json(c));
  return j;
}

Json to_json(const OrientedDigraph& o) {
  Json j = graph_summary(o.graph);
  j["kept"] = edge_list(o.kept);
  return j;
}

Json to_json(const SymmetricComponents& sc) {
  Json j;
  j["shared_vertices"] = to_json(sc.shared_vertices);
  Json edges = Json::array();
  for (auto [u, v] : sc.edges) edges.push_back({u, v});
  j["edges"] = edges;
  Json comps = Json::array();
  for (const auto& c : sc.components) {
    comps.push_back({{"first", to_json(c.first_side)},
                     {"second", to_json(c.second_side)},
                     {"complete_bipartite", c.complete_bipartite}});
  }
  j["components"] = comps;
  return j;
}

Json to_json(const TruncationStep& s) {
  Json j;
  const auto& t = s.terminal;
  j["order"] = t.order.order;
  j["normalized_order"] = s.normalized.order;
  j["m"] = {{"vertex", t.m}, {"position", s.normalized.position(t.m)}};
  j["ell"] = {{"vertex", t.ell}, {"position", s.normalized.position(t.ell)}};
  Json deps = Json::array();
  for (Vertex d : t.dependents) deps.push_back({{"vertex", d}, {"position", s.normalized.position(d)}});
  j["dependents"] = deps;
  j["dependent_kind"] = dependent_kind_name(t.kind);
  j["ell_has_no_later_edge"] = t.ell_has_no_later_edge;
  j["removed"] = to_json(s.removed);
  j["surviving"] = s.surviving;
  j["remainder"] = graph_summary(s.remainder);
  j["remainder_report"] = s.remainder_report.summary();
  j["case"] = case_name(s.kind);
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["complete"] = d.complete;
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json jb;
    jb["vertices"] = b.vertices;
    jb["case"] = case_name(b.kind);
    if (b.triple_side_condition) jb["triple_side_condition"] = *b.triple_side_condition;
    jb["before"] = to_text(b.before);
    jb["remainder"] = to_text(b.remainder);
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  if (!d.complete) {
    j["failed_at_step"] = d.failed_at_step;
    j["failure"] = d.failure;
    if (d.stuck) j["stuck"] = graph_summary(*d.stuck);
  }
  return j;
}

Json to_json(const ClassificationRow& r) {
  return {{"n", r.n}, {"i", r.i}, {"A", r.A}, {"B", r.B}, {"C", r.C}, {"D", r.D}, {"E", r.E}};
}

}  // namespace bmg
