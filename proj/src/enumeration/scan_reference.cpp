#include <algorithm>
#include <map>

#include "bmg/enumeration.hpp"

namespace bmg {

std::vector<ClassRecord> scan_reference(const ScanFrame& frame, bool allow_swap) {
  const IsoConvention group = allow_swap ? IsoConvention::kColored : IsoConvention::kSwapNever;
  const std::size_t f = frame.free_bits.size();
  std::map<CanonicalForm, ClassRecord> classes;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << f); ++sub) {
    std::uint64_t mask = frame.base;
    for (std::size_t k = 0; k < f; ++k) {
      if ((sub >> k) & 1U) mask |= std::uint64_t{1} << frame.free_bits[k];
    }
    ColoredDigraph g = frame.decode(mask);
    GraphTraits t = graph_traits(g);
    if (!t.n1_n3) continue;
    auto [it, fresh] = classes.try_emplace(canonical_form(g, group), ClassRecord{mask, t});
    if (!fresh && mask < it->second.mask) it->second.mask = mask;
  }
  std::vector<ClassRecord> out;
  for (const auto& [form, rec] : classes) out.push_back(rec);
  std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) { return a.mask < b.mask; });
  return out;
}

}  // namespace bmg
