#include "sqfree/grafting.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "sqfree/error.hpp"
#include "sqfree/leaf.hpp"

namespace sqfree {
namespace {

/// Grafting recursion over subsets of one complex's facets, keyed by facet bitmask.
class GraftingSolver {
 public:
  GraftingSolver(const SimplicialComplex& complex, bool joints_only)
      : labels_(complex.labels()), facets_(complex.facets().begin(), complex.facets().end()),
        joints_only_(joints_only) {
    if (facets_.size() > 64) throw BudgetExceeded("grafting check is limited to 64 facets");
  }

  std::uint64_t full_mask() const {
    return facets_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << facets_.size()) - 1);
  }

  bool grafted(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const bool result = conditions(mask, /*stop_early=*/true).all();
    memo_.emplace(mask, result);
    return result;
  }

  GraftingConditions conditions(std::uint64_t mask, bool stop_early) {
    GraftingConditions c;
    const SimplicialComplex sub = complex_of(mask);
    std::vector<VertexSet> leaf_side, base_side;
    for (VertexSet f : sub.facets()) {
      (is_leaf(sub, f) ? leaf_side : base_side).push_back(f);
    }
    VertexSet leaf_union, base_union;
    c.leaves_disjoint = true;
    for (VertexSet f : leaf_side) {
      if (leaf_union.intersects(f)) c.leaves_disjoint = false;
      leaf_union |= f;
    }
    for (VertexSet g : base_side) base_union |= g;
    c.base_covered = base_union.subset_of(leaf_union);
    c.removals_grafted = true;
    if (stop_early && !(c.leaves_disjoint && c.base_covered)) {
      c.removals_grafted = false;
      return c;
    }
    for (VertexSet g : base_side) {
      if (joints_only_ && !is_joint_of_some_leaf(sub, leaf_side, g)) continue;
      const std::uint64_t rest = mask & ~(std::uint64_t{1} << index_of(g));
      if (!grafted(rest)) {
        c.removals_grafted = false;
        c.failing_removals.push_back(g);
        if (stop_early) break;
      }
    }
    return c;
  }

  SimplicialComplex complex_of(std::uint64_t mask) const {
    std::vector<VertexSet> chosen;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if ((mask >> i) & 1U) chosen.push_back(facets_[i]);
    }
    return SimplicialComplex::from_faces(labels_, std::move(chosen));
  }

 private:
  std::size_t index_of(VertexSet f) const {
    return static_cast<std::size_t>(std::find(facets_.begin(), facets_.end(), f) - facets_.begin());
  }

  static bool is_joint_of_some_leaf(const SimplicialComplex& sub, const std::vector<VertexSet>& leaf_side,
                                    VertexSet g) {
    for (VertexSet f : leaf_side) {
      const auto w = is_leaf(sub, f);
      if (w && std::find(w->joints.begin(), w->joints.end(), g) != w->joints.end()) return true;
    }
    return false;
  }

  LabelTable labels_;
  std::vector<VertexSet> facets_;
  bool joints_only_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

GraftingConditions grafting_conditions(const SimplicialComplex& complex) {
  GraftingSolver solver(complex, false);
  return solver.conditions(solver.full_mask(), /*stop_early=*/false);
}

std::optional<GraftingCertificate> is_grafted(const SimplicialComplex& complex) {
  GraftingSolver solver(complex, false);
  GraftingConditions c = solver.conditions(solver.full_mask(), /*stop_early=*/true);
  if (!c.all()) return std::nullopt;
  GraftingCertificate cert;
  for (VertexSet f : complex.facets()) {
    (is_leaf(complex, f) ? cert.grafted_leaves : cert.base_facets).push_back(f);
  }
  cert.conditions = std::move(c);
  return cert;
}

bool is_grafted_joint_variant(const SimplicialComplex& complex) {
  GraftingSolver solver(complex, true);
  return solver.grafted(solver.full_mask());
}

bool is_cm_forest(const SimplicialComplex& complex) {
  if (!is_forest(complex)) return false;
  for (const auto& component : connected_components(complex)) {
    if (!is_grafted(component)) return false;
  }
  return true;
}

std::vector<std::vector<VertexSet>> matchings(std::vector<VertexSet> sets, std::size_t k) {
  if (k == 0) throw InvalidArgument("matchings need k >= 1");
  canonicalize(sets);
  std::vector<std::vector<VertexSet>> out;
  std::vector<VertexSet> current;
  std::function<void(std::size_t, VertexSet)> extend = [&](std::size_t start, VertexSet used) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i + (k - current.size()) <= sets.size(); ++i) {
      if (sets[i].intersects(used)) continue;
      current.push_back(sets[i]);
      extend(i + 1, used | sets[i]);
      current.pop_back();
    }
  };
  extend(0, VertexSet{});
  return out;
}

std::vector<std::vector<VertexSet>> matchings(const SimplicialComplex& complex, std::size_t k) {
  return matchings(std::vector<VertexSet>(complex.facets().begin(), complex.facets().end()), k);
}

std::size_t matching_number(std::vector<VertexSet> sets) {
  canonicalize(sets);
  std::size_t best = 0;
  std::function<void(std::vector<VertexSet>&, std::size_t)> search = [&](std::vector<VertexSet>& cand,
                                                                          std::size_t size) {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + cand.size() <= best) return;
    const VertexSet pick = cand.front();
    // Branch 1: take `pick`, drop everything it meets.
    std::vector<VertexSet> with;
    with.reserve(cand.size());
    for (std::size_t i = 1; i < cand.size(); ++i) {
      if (!cand[i].intersects(pick)) with.push_back(cand[i]);
    }
    search(with, size + 1);
    // Branch 2: skip `pick`.
    std::vector<VertexSet> without(cand.begin() + 1, cand.end());
    search(without, size);
  };
  search(sets, 0);
  return best;
}

std::size_t matching_number(const SimplicialComplex& complex) {
  return matching_number(std::vector<VertexSet>(complex.facets().begin(), complex.facets().end()));
}

}  // namespace sqfree
