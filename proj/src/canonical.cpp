#include "bmg/canonical.hpp"

#include <algorithm>
#include <cstdio>

namespace bmg {

std::string convention_name(IsoConvention c) {
  switch (c) {
    case IsoConvention::kColored: return "colored";
    case IsoConvention::kSwapNever: return "swap-never";
    case IsoConvention::kUncolored: return "uncolored";
  }
  return "?";
}

std::optional<IsoConvention> parse_convention(std::string_view name) {
  for (auto c : {IsoConvention::kColored, IsoConvention::kSwapNever, IsoConvention::kUncolored}) {
    if (convention_name(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

constexpr int kMaxRows = 10;

CanonicalForm with_rows(const ColoredDigraph& g, Color row_color) {
  std::vector<Vertex> rows = g.color_class(row_color).to_vector();
  std::vector<Vertex> cols = g.color_class(opposite(row_color)).to_vector();
  const int a = static_cast<int>(rows.size());
  if (a > kMaxRows) throw InvalidArgument("canonical form supports at most 10 vertices in the smaller class");

  CanonicalForm best;
  best.first_size = a;
  best.second_size = static_cast<int>(cols.size());
  std::vector<std::uint64_t> sig(cols.size());
  bool have = false;
  do {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::uint64_t s = 0;
      for (int r = 0; r < a; ++r) {
        Vertex x = rows[static_cast<std::size_t>(r)];
        if (g.has_edge(x, cols[k])) s |= std::uint64_t{1} << r;
        if (g.has_edge(cols[k], x)) s |= std::uint64_t{1} << (a + r);
      }
      sig[k] = s;
    }
    std::sort(sig.begin(), sig.end());
    if (!have || sig < best.columns) {
      best.columns = sig;
      have = true;
    }
  } while (std::next_permutation(rows.begin(), rows.end()));
  return best;
}

CanonicalForm colored_form(const ColoredDigraph& g) {
  int first = g.color_class(Color::kFirst).size();
  int second = g.color_class(Color::kSecond).size();
  if (first < second) return with_rows(g, Color::kFirst);
  if (second < first) return with_rows(g, Color::kSecond);
  return std::min(with_rows(g, Color::kFirst), with_rows(g, Color::kSecond));
}

CanonicalForm uncolored_form(const ColoredDigraph& g) {
  std::vector<VertexSet> flippable;
  VertexSet isolated;
  for (VertexSet c : weak_components(g)) {
    if (c.size() == 1) {
      isolated |= c;
    } else {
      flippable.push_back(c);
    }
  }
  if (flippable.size() > 20) throw InvalidArgument("too many components for an uncoloured canonical form");
  const std::vector<Edge> edges = g.edges();
  const std::vector<Vertex> lone = isolated.to_vector();
  std::optional<CanonicalForm> best;
  for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << flippable.size()); ++flips) {
    VertexSet second;
    for (std::size_t k = 0; k < flippable.size(); ++k) {
      VertexSet own = flippable[k] & g.color_class(Color::kSecond);
      second |= ((flips >> k) & 1U) ? flippable[k] - own : own;
    }
    for (std::size_t moved = 0; moved <= lone.size(); ++moved) {
      VertexSet s = second;
      for (std::size_t k = 0; k < moved; ++k) s.insert(lone[k]);
      CanonicalForm f = colored_form(ColoredDigraph(g.order(), s, edges));
      if (!best || f < *best) best = f;
    }
  }
  return best.value_or(CanonicalForm{});
}

}  // namespace

CanonicalForm canonical_form(const ColoredDigraph& g, IsoConvention c) {
  switch (c) {
    case IsoConvention::kColored: return colored_form(g);
    case IsoConvention::kSwapNever: return with_rows(g, Color::kFirst);
    case IsoConvention::kUncolored: return uncolored_form(g);
  }
  return {};
}

bool are_isomorphic(const ColoredDigraph& g, const ColoredDigraph& h, IsoConvention c) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g, c) == canonical_form(h, c);
}

ColoredDigraph from_canonical(const CanonicalForm& f) {
  const int a = f.first_size;
  const int n = a + f.second_size;
  if (a < 0 || f.second_size < 0 || n > ColoredDigraph::kMaxOrder ||
      f.columns.size() != static_cast<std::size_t>(f.second_size)) {
    throw InvalidArgument("malformed canonical form");
  }
  std::vector<Edge> edges;
  for (int k = 0; k < f.second_size; ++k) {
    Vertex y = a + 1 + k;
    for (int r = 0; r < a; ++r) {
      if ((f.columns[static_cast<std::size_t>(k)] >> r) & 1U) edges.push_back({r + 1, y});
      if ((f.columns[static_cast<std::size_t>(k)] >> (a + r)) & 1U) edges.push_back({y, r + 1});
    }
  }
  return ColoredDigraph(n, VertexSet::range(a + 1, n), edges);
}

std::string to_hex(const CanonicalForm& f) {
  std::string s = std::to_string(f.first_size) + "x" + std::to_string(f.second_size) + ":";
  char buf[20];
  for (std::size_t k = 0; k < f.columns.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%s%llx", k ? "." : "", static_cast<unsigned long long>(f.columns[k]));
    s += buf;
  }
  return s;
}

}  // namespace bmg
