#include <set>
#include <sstream>

#include "bmg/axioms.hpp"
#include "bmg/enumeration.hpp"
#include "bmg/structure.hpp"

namespace bmg {

FilterSet filter_A() { return {}; }
FilterSet filter_B() { return {.connected = true}; }
FilterSet filter_C() { return {.no_equivalent = true}; }
FilterSet filter_D() { return {.sink_free = true}; }
FilterSet filter_E() { return {.connected = true, .no_equivalent = true, .sink_free = true}; }

std::optional<FilterSet> parse_filter(std::string_view name) {
  if (name == "A") return filter_A();
  if (name == "B") return filter_B();
  if (name == "C") return filter_C();
  if (name == "D") return filter_D();
  if (name == "E") return filter_E();
  FilterSet f;
  std::stringstream ss{std::string(name)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "connected") {
      f.connected = true;
    } else if (item == "no-equivalent") {
      f.no_equivalent = true;
    } else if (item == "sink-free") {
      f.sink_free = true;
    } else if (item != "n1-n3") {
      return std::nullopt;
    }
  }
  return f;
}

std::string filter_name(const FilterSet& f) {
  for (auto [name, g] : {std::pair{"A", filter_A()}, {"B", filter_B()}, {"C", filter_C()}, {"D", filter_D()},
                         {"E", filter_E()}}) {
    if (f == g) return name;
  }
  std::string s = "n1-n3";
  if (f.connected) s += ",connected";
  if (f.no_equivalent) s += ",no-equivalent";
  if (f.sink_free) s += ",sink-free";
  return s;
}

GraphTraits graph_traits(const ColoredDigraph& g) {
  AxiomReport r = check_2cbmg(g);
  return {r.satisfies_n1_to_n3(), is_weakly_connected(g), equivalence_classes(g).all_singletons(), r.sinks.empty()};
}

bool passes(const GraphTraits& t, const FilterSet& f) {
  return t.n1_n3 && (!f.connected || t.connected) && (!f.no_equivalent || t.no_equivalent) &&
         (!f.sink_free || t.sink_free);
}

std::uint64_t ScanFrame::mask_of(const ColoredDigraph& g) const {
  const int a = first_size();
  const int b = second_size();
  VertexSet row_set;
  for (Vertex x : rows) row_set.insert(x);
  if (g.order() != order || g.color_class(Color::kFirst) != row_set) {
    throw InvalidArgument("graph does not fit the scan frame");
  }
  std::uint64_t m = 0;
  for (int k = 0; k < a; ++k) {
    for (int l = 0; l < b; ++l) {
      if (g.has_edge(rows[static_cast<std::size_t>(k)], cols[static_cast<std::size_t>(l)])) m |= std::uint64_t{1} << (k * b + l);
      if (g.has_edge(cols[static_cast<std::size_t>(l)], rows[static_cast<std::size_t>(k)])) m |= std::uint64_t{1} << (a * b + l * a + k);
    }
  }
  return m;
}

ColoredDigraph ScanFrame::decode(std::uint64_t mask) const {
  const int a = first_size();
  const int b = second_size();
  std::vector<Edge> edges;
  for (int k = 0; k < a; ++k) {
    for (int l = 0; l < b; ++l) {
      if ((mask >> (k * b + l)) & 1U) edges.push_back({rows[static_cast<std::size_t>(k)], cols[static_cast<std::size_t>(l)]});
      if ((mask >> (a * b + l * a + k)) & 1U) edges.push_back({cols[static_cast<std::size_t>(l)], rows[static_cast<std::size_t>(k)]});
    }
  }
  VertexSet second;
  for (Vertex y : cols) second.insert(y);
  return ColoredDigraph(order, second, edges);
}

namespace {

ScanFrame frame_for(const ColoredDigraph& g) {
  ScanFrame f;
  f.order = g.order();
  f.rows = g.color_class(Color::kFirst).to_vector();
  f.cols = g.color_class(Color::kSecond).to_vector();
  const int a = f.first_size();
  const int b = f.second_size();
  if (a < 1 || b < 1) throw InvalidArgument("both colour classes must be non-empty");
  if (a > 32 || b > 32 || 2 * a * b > 64) throw InvalidArgument("scan frame exceeds 64 edge bits");
  return f;
}

}  // namespace

ScanFrame complete_bipartite_frame(int i, int j) {
  if (i < 1 || j < 1) throw InvalidArgument("class sizes must be positive");
  if (i + j > ColoredDigraph::kMaxOrder) throw InvalidArgument("class sizes too large");
  ScanFrame f = frame_for(ColoredDigraph(i + j, VertexSet::range(i + 1, i + j)));
  for (int bit = 0; bit < 2 * i * j; ++bit) f.free_bits.push_back(bit);
  return f;
}

ScanFrame extension_frame(const ColoredDigraph& base) {
  ScanFrame f = frame_for(base);
  f.base = f.mask_of(base);
  for (int bit = 0; bit < 2 * f.first_size() * f.second_size(); ++bit) {
    if (!((f.base >> bit) & 1U)) f.free_bits.push_back(bit);
  }
  return f;
}

std::vector<ColoredDigraph> ScanResult::select(const FilterSet& f) const {
  std::vector<ColoredDigraph> out;
  std::set<CanonicalForm> seen;
  for (const ClassRecord& c : classes) {
    if (!passes(c.traits, f)) continue;
    ColoredDigraph g = frame.decode(c.mask);
    if (convention == IsoConvention::kUncolored && !seen.insert(canonical_form(g, convention)).second) continue;
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

ScanResult run_scan(ScanFrame frame, const ScanOptions& options) {
  ScanResult r;
  r.convention = options.convention;
  const bool swap = options.convention != IsoConvention::kSwapNever;
  r.classes = options.use_reference ? scan_reference(frame, swap) : scan_parallel(frame, swap, options.workers);
  r.frame = std::move(frame);
  return r;
}

}  // namespace

ScanResult scan_complete_bipartite(int i, int j, const ScanOptions& options) {
  if (i * j > 12 && !options.override_budget) {
    throw InvalidArgument("(" + std::to_string(i) + "," + std::to_string(j) +
                          ") exceeds the exhaustive budget i*j <= 12; pass the override to run anyway");
  }
  return run_scan(complete_bipartite_frame(i, j), options);
}

ScanResult scan_extensions(const ColoredDigraph& base, const ScanOptions& options) {
  ScanFrame frame = extension_frame(base);
  if (frame.free_bits.size() > 24 && !options.override_budget) {
    throw InvalidArgument(std::to_string(frame.free_bits.size()) +
                          " free edge slots exceed the budget of 24; pass the override to run anyway");
  }
  return run_scan(std::move(frame), options);
}

ClassificationRow classification_row(const ScanResult& scan, int n, int i) {
  return {n, i, scan.count(filter_A()), scan.count(filter_B()), scan.count(filter_C()), scan.count(filter_D()),
          scan.count(filter_E())};
}

std::vector<ClassificationRow> classification_table(int n, const ScanOptions& options) {
  if (n < 2) throw InvalidArgument("classification needs n >= 2");
  std::vector<int> sizes;
  if (n == 3) sizes.push_back(1);
  for (int i = 2; i <= n / 2; ++i) sizes.push_back(i);
  if (n == 2) sizes.push_back(1);
  std::vector<ClassificationRow> rows;
  for (int i : sizes) rows.push_back(classification_row(scan_complete_bipartite(i, n - i, options), n, i));
  return rows;
}

}  // namespace bmg
