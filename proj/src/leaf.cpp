#include "sqfree/leaf.hpp"

#include <algorithm>

#include "sqfree/error.hpp"
#include "sqfree/grafting.hpp"

namespace sqfree {
namespace {

constexpr std::size_t kBruteFacetCap = 20;

bool is_leaf_among(VertexSet facet, std::span<const VertexSet> others) {
  if (others.empty()) return true;
  for (VertexSet g : others) {
    const VertexSet trace = facet & g;
    const bool dominates = std::all_of(others.begin(), others.end(),
                                       [&](VertexSet h) { return (facet & h).subset_of(trace); });
    if (dominates) return true;
  }
  return false;
}

void require_brute_size(const SimplicialComplex& complex) {
  if (complex.facet_count() > kBruteFacetCap) {
    throw BudgetExceeded("brute-force leaf checks are limited to 20 facets");
  }
}

std::vector<VertexSet> others_of(const SimplicialComplex& complex, VertexSet facet) {
  std::vector<VertexSet> others;
  for (VertexSet g : complex.facets()) {
    if (g != facet) others.push_back(g);
  }
  return others;
}

}  // namespace

std::optional<LeafWitness> is_leaf(const SimplicialComplex& complex, VertexSet facet) {
  complex.facet_index(facet);
  LeafWitness w{facet, {}};
  if (complex.facet_count() == 1) return w;
  const auto others = others_of(complex, facet);
  for (VertexSet g : others) {
    const VertexSet trace = facet & g;
    const bool dominates = std::all_of(others.begin(), others.end(),
                                       [&](VertexSet h) { return (facet & h).subset_of(trace); });
    if (dominates) w.joints.push_back(g);
  }
  if (w.joints.empty()) return std::nullopt;
  return w;
}

std::optional<GoodLeafChain> is_good_leaf(const SimplicialComplex& complex, VertexSet facet) {
  auto nbrs = neighbors(complex, facet);
  std::stable_sort(nbrs.begin(), nbrs.end(), [facet](VertexSet a, VertexSet b) {
    return (facet & a).size() > (facet & b).size();
  });
  for (std::size_t i = 1; i < nbrs.size(); ++i) {
    if (!(facet & nbrs[i]).subset_of(facet & nbrs[i - 1])) return std::nullopt;
  }
  return GoodLeafChain{facet, std::move(nbrs)};
}

bool is_special_leaf(const SimplicialComplex& complex, VertexSet facet) {
  if (!is_leaf(complex, facet)) {
    throw NotALeaf(complex.labels().format(facet) + " is not a leaf");
  }
  const auto others = others_of(complex, facet);
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (std::size_t j = i + 1; j < others.size(); ++j) {
      const VertexSet common = others[i] & others[j];
      if (!common.empty() && (common - facet).empty()) return false;
    }
  }
  return true;
}

std::vector<VertexSet> leaves(const SimplicialComplex& complex) {
  std::vector<VertexSet> out;
  for (VertexSet f : complex.facets()) {
    if (is_leaf(complex, f)) out.push_back(f);
  }
  return out;
}

std::vector<VertexSet> special_leaves(const SimplicialComplex& complex) {
  std::vector<VertexSet> out;
  for (VertexSet f : complex.facets()) {
    if (is_leaf(complex, f) && is_special_leaf(complex, f)) out.push_back(f);
  }
  return out;
}

std::optional<GoodLeafOrder> is_forest(const SimplicialComplex& complex) {
  GoodLeafOrder order;
  SimplicialComplex rest = complex;
  while (!rest.empty()) {
    bool removed = false;
    for (VertexSet f : rest.facets()) {
      if (is_good_leaf(rest, f)) {
        order.order.push_back(f);
        rest = rest.without(std::span<const VertexSet>(&f, 1));
        removed = true;
        break;
      }
    }
    if (!removed) return std::nullopt;
  }
  return order;
}

bool is_leaf_brute(const SimplicialComplex& complex, VertexSet facet) {
  require_brute_size(complex);
  complex.facet_index(facet);
  return is_leaf_among(facet, others_of(complex, facet));
}

bool is_good_leaf_brute(const SimplicialComplex& complex, VertexSet facet) {
  require_brute_size(complex);
  complex.facet_index(facet);
  const auto others = others_of(complex, facet);
  const std::uint32_t subsets = std::uint32_t{1} << others.size();
  std::vector<VertexSet> chosen;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < others.size(); ++i) {
      if ((mask >> i) & 1U) chosen.push_back(others[i]);
    }
    if (!is_leaf_among(facet, chosen)) return false;
  }
  return true;
}

bool is_forest_brute(const SimplicialComplex& complex) {
  require_brute_size(complex);
  const auto facets = complex.facets();
  const std::uint32_t subsets = std::uint32_t{1} << facets.size();
  std::vector<VertexSet> chosen, others;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if ((mask >> i) & 1U) chosen.push_back(facets[i]);
    }
    bool has_leaf = false;
    for (VertexSet f : chosen) {
      others.clear();
      for (VertexSet g : chosen) {
        if (g != f) others.push_back(g);
      }
      if (is_leaf_among(f, others)) {
        has_leaf = true;
        break;
      }
    }
    if (!has_leaf) return false;
  }
  return true;
}

VertexSet find_special_leaf_grafted(const SimplicialComplex& complex, const GraftingCertificate& cert) {
  const auto actual = is_grafted(complex);
  if (!actual || actual->grafted_leaves != cert.grafted_leaves || actual->base_facets != cert.base_facets) {
    throw InvalidArgument("grafting certificate does not match the complex");
  }
  if (cert.base_facets.empty()) {
    if (cert.grafted_leaves.empty()) throw InvalidArgument("empty complex has no leaves");
    return cert.grafted_leaves.front();
  }
  const SimplicialComplex base = subcomplex(complex, cert.base_facets);
  std::optional<GoodLeafChain> chain;
  for (VertexSet g : base.facets()) {
    if ((chain = is_good_leaf(base, g))) break;
  }
  if (!chain) throw InvalidArgument("base of the grafting has no good leaf (not a forest)");
  const VertexSet g1 = chain->leaf;
  // Smallest trace on G1 along the chain; G1 itself when it has no base neighbour.
  const VertexSet smallest = chain->ordered_neighbors.empty() ? g1 : (g1 & chain->ordered_neighbors.back());

  std::vector<VertexSet> meeting;
  for (VertexSet f : cert.grafted_leaves) {
    if (f.intersects(g1)) meeting.push_back(f);
  }
  if (meeting.empty()) throw InvariantViolation("base facet meets no grafted leaf");
  VertexSet chosen = meeting.front();
  bool found = false;
  for (VertexSet f : meeting) {
    if (!smallest.subset_of(f)) {
      chosen = f;
      found = true;
      break;
    }
  }
  if (!found) {
    if (meeting.size() < 2) throw InvariantViolation("no fallback leaf meets the chosen base facet");
    chosen = meeting[1];
  }
  if (!is_special_leaf(complex, chosen)) {
    throw InvariantViolation("constructed leaf " + complex.labels().format(chosen) + " is not special");
  }
  return chosen;
}

}  // namespace sqfree
