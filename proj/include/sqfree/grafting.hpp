#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sqfree/complex.hpp"

namespace sqfree {

/// Outcome of each grafting condition for one complex.
struct GraftingConditions {
  bool base_covered = false;      ///< V(base) ⊆ ∪ grafted leaves
  bool leaves_are_all = true;     ///< grafted side = every leaf (forced by construction)
  bool sides_disjoint = true;     ///< no facet on both sides (forced by construction)
  bool leaves_disjoint = false;   ///< grafted leaves pairwise disjoint
  bool removals_grafted = false;  ///< complex minus any base facet is grafted
  /// Base facets whose removal leaves a non-grafted complex.
  std::vector<VertexSet> failing_removals;

  bool all() const {
    return base_covered && leaves_are_all && sides_disjoint && leaves_disjoint && removals_grafted;
  }
};

/// Minimal presentation of a grafted complex: F(Δ) = grafted leaves ⊔ base.
struct GraftingCertificate {
  std::vector<VertexSet> grafted_leaves;
  std::vector<VertexSet> base_facets;
  GraftingConditions conditions;
};

/// Checks the grafting conditions. The leaf side is forced to be the set of
/// all leaves, so there is no partition search; the recursive condition is
/// memoised on facet subsets.
std::optional<GraftingCertificate> is_grafted(const SimplicialComplex& complex);

/// Condition report whether or not the complex is grafted.
GraftingConditions grafting_conditions(const SimplicialComplex& complex);

/// Variant that only recurses on base facets that are joints of some leaf.
bool is_grafted_joint_variant(const SimplicialComplex& complex);

/// Forest whose every connected component is grafted.
bool is_cm_forest(const SimplicialComplex& complex);

/// Sets of k pairwise disjoint facets, as sorted facet lists in canonical order.
std::vector<std::vector<VertexSet>> matchings(const SimplicialComplex& complex, std::size_t k);

/// Generic form over any family of supports (the facets of an ideal's support hypergraph).
std::vector<std::vector<VertexSet>> matchings(std::vector<VertexSet> sets, std::size_t k);

/// Maximum size of a matching, by branch and bound.
std::size_t matching_number(const SimplicialComplex& complex);
std::size_t matching_number(std::vector<VertexSet> sets);

}  // namespace sqfree
