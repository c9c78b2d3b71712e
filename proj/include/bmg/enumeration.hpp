#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmg/canonical.hpp"
#include "bmg/graph.hpp"

namespace bmg {

/// Filters applied on top of N1-N3 (which every filter requires).
struct FilterSet {
  bool connected = false;
  bool no_equivalent = false;
  bool sink_free = false;

  friend bool operator==(const FilterSet&, const FilterSet&) = default;
};

/// "A".."E", or a comma list drawn from "connected", "no-equivalent", "sink-free".
std::optional<FilterSet> parse_filter(std::string_view name);
std::string filter_name(const FilterSet& f);
FilterSet filter_A();
FilterSet filter_B();
FilterSet filter_C();
FilterSet filter_D();
FilterSet filter_E();

struct GraphTraits {
  bool n1_n3 = false;
  bool connected = false;
  bool no_equivalent = false;
  bool sink_free = false;

  friend bool operator==(const GraphTraits&, const GraphTraits&) = default;
};

GraphTraits graph_traits(const ColoredDigraph& g);
bool passes(const GraphTraits& t, const FilterSet& f);

/// A family of graphs sharing one vertex set and colouring: every graph is
/// `base` plus a subset of `free_bits`.
///
/// Bit layout for rows x_0..x_{a-1} (first colour, ascending labels) and
/// columns y_0..y_{b-1}: bit k*b + l is x_k -> y_l, bit a*b + l*a + k is
/// y_l -> x_k.
struct ScanFrame {
  int order = 0;
  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
  std::uint64_t base = 0;
  std::vector<int> free_bits;

  int first_size() const { return static_cast<int>(rows.size()); }
  int second_size() const { return static_cast<int>(cols.size()); }
  std::uint64_t mask_of(const ColoredDigraph& g) const;
  ColoredDigraph decode(std::uint64_t mask) const;
};

/// All subgraphs of the complete bipartite digraph on classes 1..i, i+1..i+j.
ScanFrame complete_bipartite_frame(int i, int j);
/// All edge supersets of `base` on its own colouring.
ScanFrame extension_frame(const ColoredDigraph& base);

/// One isomorphism class of N1-N3 graphs, represented by its smallest mask.
struct ClassRecord {
  std::uint64_t mask = 0;
  GraphTraits traits;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

/// Both kernels return the classes ordered by mask. `allow_swap` groups
/// graphs that differ by exchanging two equal-size colour classes.
std::vector<ClassRecord> scan_reference(const ScanFrame& frame, bool allow_swap);
std::vector<ClassRecord> scan_parallel(const ScanFrame& frame, bool allow_swap, int workers);

struct ScanOptions {
  IsoConvention convention = IsoConvention::kUncolored;
  /// 0 selects the OpenMP default.
  int workers = 0;
  bool use_reference = false;
  bool override_budget = false;
};

struct ScanResult {
  ScanFrame frame;
  IsoConvention convention = IsoConvention::kUncolored;
  std::vector<ClassRecord> classes;

  /// One representative per class under `convention` among the graphs
  /// passing `f`, ordered by the smallest mask in each class.
  std::vector<ColoredDigraph> select(const FilterSet& f) const;
  std::size_t count(const FilterSet& f) const { return select(f).size(); }
};

/// Throws InvalidArgument when i*j > 12 (or more than 24 free bits for
/// an extension) unless options.override_budget is set.
ScanResult scan_complete_bipartite(int i, int j, const ScanOptions& options);
ScanResult scan_extensions(const ColoredDigraph& base, const ScanOptions& options);

struct ClassificationRow {
  int n = 0;
  int i = 0;
  std::size_t A = 0, B = 0, C = 0, D = 0, E = 0;

  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

ClassificationRow classification_row(const ScanResult& scan, int n, int i);

/// Rows for every 2 <= i <= n/2, plus i = 1 when n = 3.
std::vector<ClassificationRow> classification_table(int n, const ScanOptions& options);

}  // namespace bmg
