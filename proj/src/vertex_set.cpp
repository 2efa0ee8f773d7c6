#include "sqfree/vertex_set.hpp"

#include <algorithm>

namespace sqfree {

void canonicalize(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets) {
  canonicalize(sets);
  // Canonical order is by size, so a subset always precedes its supersets.
  std::vector<VertexSet> kept;
  kept.reserve(sets.size());
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [s](VertexSet k) { return k.subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
  canonicalize(sets);
  std::vector<VertexSet> kept;
  kept.reserve(sets.size());
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    const VertexSet s = *it;
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [s](VertexSet k) { return s.subset_of(k); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  return kept;
}

}  // namespace sqfree
