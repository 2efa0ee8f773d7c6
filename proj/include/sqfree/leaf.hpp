#pragma once

#include <optional>
#include <vector>

#include "sqfree/complex.hpp"

namespace sqfree {

struct GraftingCertificate;

struct LeafWitness {
  VertexSet leaf;
  /// Every facet G != leaf with leaf∩G ⊇ leaf∩H for all H != leaf.
  /// Empty iff the leaf is the only facet.
  std::vector<VertexSet> joints;
};

struct GoodLeafChain {
  VertexSet leaf;
  /// Neighbours ordered so that leaf∩N[0] ⊇ leaf∩N[1] ⊇ ...
  std::vector<VertexSet> ordered_neighbors;
};

/// Facets in the order they were removed as good leaves.
struct GoodLeafOrder {
  std::vector<VertexSet> order;
};

std::optional<LeafWitness> is_leaf(const SimplicialComplex& complex, VertexSet facet);

/// Chain criterion: the traces of the neighbours on `facet` are totally
/// ordered by inclusion.
std::optional<GoodLeafChain> is_good_leaf(const SimplicialComplex& complex, VertexSet facet);

/// Throws NotALeaf when `facet` is not a leaf.
bool is_special_leaf(const SimplicialComplex& complex, VertexSet facet);

std::vector<VertexSet> leaves(const SimplicialComplex& complex);
std::vector<VertexSet> special_leaves(const SimplicialComplex& complex);

/// Greedy good-leaf elimination; nullopt when some stage has no good leaf.
std::optional<GoodLeafOrder> is_forest(const SimplicialComplex& complex);

/// Definition-level checks used as oracles. They quantify over subcomplexes
/// and refuse complexes with more than 20 facets (BudgetExceeded).
bool is_leaf_brute(const SimplicialComplex& complex, VertexSet facet);
bool is_good_leaf_brute(const SimplicialComplex& complex, VertexSet facet);
/// "Every non-empty subcomplex has a leaf."
bool is_forest_brute(const SimplicialComplex& complex);

/// Constructive special-leaf search on a grafted complex. Takes the lowest
/// good leaf G of the base, orders its closed base neighbourhood by trace on
/// G, and returns the lowest grafted leaf meeting G that does not contain the
/// smallest trace, falling back to another grafted leaf meeting G.
/// Throws InvalidArgument if `cert` does not certify `complex`.
VertexSet find_special_leaf_grafted(const SimplicialComplex& complex, const GraftingCertificate& cert);

}  // namespace sqfree
