#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmg/graph.hpp"

namespace bmg {

/// Which relabellings count as isomorphisms.
///   kColored:   colour classes are preserved as a partition; classes of
///               equal size may be exchanged.
///   kSwapNever: colour classes are preserved individually.
///   kUncolored: plain digraph isomorphism, colours ignored.
enum class IsoConvention { kColored, kSwapNever, kUncolored };

std::string convention_name(IsoConvention c);
std::optional<IsoConvention> parse_convention(std::string_view name);

/// Certificate: the "row" class has first_size vertices, the other class
/// second_size. columns[k] is the signature of the k-th vertex of the other
/// class against the rows (bit r: row r -> it, bit first_size + r: it -> row r).
struct CanonicalForm {
  int first_size = 0;
  int second_size = 0;
  std::vector<std::uint64_t> columns;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const ColoredDigraph& g, IsoConvention c = IsoConvention::kColored);

bool are_isomorphic(const ColoredDigraph& g, const ColoredDigraph& h, IsoConvention c = IsoConvention::kColored);

/// Graph whose rows are vertices 1..first_size (first colour).
ColoredDigraph from_canonical(const CanonicalForm& f);

/// Hex rendering, stable across runs; used as a key in reports.
std::string to_hex(const CanonicalForm& f);

}  // namespace bmg
