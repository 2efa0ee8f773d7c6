#include "sqfree/ideal.hpp"

#include <algorithm>

#include "sqfree/error.hpp"
#include "sqfree/grafting.hpp"
#include "sqfree/leaf.hpp"

namespace sqfree {

MonomialIdeal::MonomialIdeal(LabelTable ambient, std::vector<VertexSet> supports)
    : ambient_(std::move(ambient)), gens_(minimal_elements(std::move(supports))) {
  for (VertexSet g : gens_) {
    if (!g.subset_of(ambient_.all())) throw InvalidArgument("generator uses a variable outside the ring");
  }
}

VertexSet MonomialIdeal::support() const {
  VertexSet s;
  for (VertexSet g : gens_) s |= g;
  return s;
}

bool MonomialIdeal::contains(VertexSet monomial) const {
  return std::any_of(gens_.begin(), gens_.end(), [monomial](VertexSet g) { return g.subset_of(monomial); });
}

MonomialIdeal MonomialIdeal::over_support() const {
  const VertexSet used = support();
  std::vector<std::string> names = ambient_.names_of(used);
  LabelTable table(std::move(names));
  std::vector<VertexSet> gens;
  gens.reserve(gens_.size());
  for (VertexSet g : gens_) {
    VertexSet mapped;
    unsigned pos = 0;
    for (unsigned v : used) {
      if (g.contains(v)) mapped.insert(pos);
      ++pos;
    }
    gens.push_back(mapped);
  }
  return MonomialIdeal(std::move(table), std::move(gens));
}

std::string MonomialIdeal::format() const {
  if (is_zero()) return "<0>";
  if (is_unit()) return "<1>";
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    for (unsigned v : gens_[i]) out += ambient_[v];
  }
  return out + ">";
}

MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
  return MonomialIdeal(complex.labels(), {complex.facets().begin(), complex.facets().end()});
}

MonomialIdeal squarefree_power(const MonomialIdeal& ideal, std::size_t k) {
  if (k == 0) throw InvalidArgument("square-free powers need k >= 1");
  if (k == 1) return ideal;
  if (ideal.is_unit()) return MonomialIdeal::zero(ideal.ambient());
  std::vector<VertexSet> products;
  for (const auto& m : matchings({ideal.generators().begin(), ideal.generators().end()}, k)) {
    VertexSet u;
    for (VertexSet s : m) u |= s;
    products.push_back(u);
  }
  return MonomialIdeal(ideal.ambient(), std::move(products));
}

MonomialIdeal colon(const MonomialIdeal& ideal, VertexSet monomial) {
  std::vector<VertexSet> quotients;
  quotients.reserve(ideal.generators().size());
  for (VertexSet g : ideal.generators()) quotients.push_back(g - monomial);
  return MonomialIdeal(ideal.ambient(), std::move(quotients));
}

MonomialIdeal add_principal(const MonomialIdeal& ideal, VertexSet monomial) {
  std::vector<VertexSet> gens(ideal.generators().begin(), ideal.generators().end());
  gens.push_back(monomial);
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ambient() == b.ambient())) throw InvalidArgument("ideals live in different rings");
  return std::equal(a.generators().begin(), a.generators().end(), b.generators().begin(), b.generators().end());
}

DegreeProfile min_degree_profile(const MonomialIdeal& ideal) {
  DegreeProfile p;
  if (ideal.is_zero() || ideal.is_unit()) return p;
  for (std::size_t k = 1;; ++k) {
    const MonomialIdeal power = squarefree_power(ideal, k);
    if (power.is_zero()) break;
    p.min_degree[k] = power.generators().front().size();
  }
  return p;
}

ColonLemmaCheck verify_colon_lemma(const SimplicialComplex& complex, VertexSet leaf, std::size_t k) {
  if (!is_cm_forest(complex)) throw InvalidArgument("colon lemma needs a Cohen-Macaulay forest");
  if (!is_leaf(complex, leaf)) throw InvalidArgument(complex.labels().format(leaf) + " is not a leaf");
  const std::size_t nu = matching_number(complex);
  if (k < 1 || k > nu) throw InvalidArgument("colon lemma needs 1 <= k <= matching number");

  const MonomialIdeal ideal = facet_ideal(complex);
  const auto hood = closed_neighborhood(complex, leaf);
  SimplicialComplex remainder = complex.without(hood);

  ColonLemmaCheck check{colon(squarefree_power(ideal, k), leaf),
                        k == 1 ? MonomialIdeal::unit(complex.labels())
                               : squarefree_power(facet_ideal(remainder), k - 1),
                        remainder};
  check.ideals_equal = ideal_equal(check.colon_side, check.power_side);
  check.remainder_cm_forest = is_cm_forest(remainder);
  return check;
}

}  // namespace sqfree
