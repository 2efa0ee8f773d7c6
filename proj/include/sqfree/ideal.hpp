#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/labels.hpp"

namespace sqfree {

/// Square-free monomial ideal, stored as the supports of its minimal generators.
///
/// The unit ideal has the single generator ∅ (the monomial 1); the zero ideal
/// has no generators. Generators are canonically sorted.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalises `supports`.
  MonomialIdeal(LabelTable ambient, std::vector<VertexSet> supports);

  static MonomialIdeal zero(LabelTable ambient) { return MonomialIdeal(std::move(ambient), {}); }
  static MonomialIdeal unit(LabelTable ambient) { return MonomialIdeal(std::move(ambient), {VertexSet{}}); }

  const LabelTable& ambient() const { return ambient_; }
  std::span<const VertexSet> generators() const { return gens_; }
  std::size_t variable_count() const { return ambient_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }
  /// Union of the generator supports.
  VertexSet support() const;
  bool contains(VertexSet monomial) const;

  /// Same generators over the smallest ring containing them.
  MonomialIdeal over_support() const;

  std::string format() const;

  bool operator==(const MonomialIdeal& other) const {
    return gens_ == other.gens_ && ambient_ == other.ambient_;
  }

 private:
  LabelTable ambient_;
  std::vector<VertexSet> gens_;
};

/// One generator per facet.
MonomialIdeal facet_ideal(const SimplicialComplex& complex);

/// k-th square-free power: minimalised unions of k pairwise disjoint
/// generator supports. Zero ideal once k exceeds the matching number.
MonomialIdeal squarefree_power(const MonomialIdeal& ideal, std::size_t k);

/// (I : m) for a square-free monomial m.
MonomialIdeal colon(const MonomialIdeal& ideal, VertexSet monomial);

/// I + <m>.
MonomialIdeal add_principal(const MonomialIdeal& ideal, VertexSet monomial);

/// Throws InvalidArgument when the ambient tables differ.
bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b);

/// d_k = minimum generator degree of the k-th square-free power, for 1 <= k <= ν.
struct DegreeProfile {
  std::map<std::size_t, std::size_t> min_degree;
};
DegreeProfile min_degree_profile(const MonomialIdeal& ideal);

/// Both sides of (I(Δ)^[k] : x_F) = I(Δ₁)^[k-1] with F(Δ₁) = F(Δ) \ N[F].
struct ColonLemmaCheck {
  MonomialIdeal colon_side;
  MonomialIdeal power_side;
  SimplicialComplex remainder;
  bool ideals_equal = false;
  bool remainder_cm_forest = false;
  bool holds() const { return ideals_equal && remainder_cm_forest; }
};

/// Requires a CM forest, a leaf F and 1 <= k <= ν(Δ). I^[0] is the unit ideal.
ColonLemmaCheck verify_colon_lemma(const SimplicialComplex& complex, VertexSet leaf, std::size_t k);

}  // namespace sqfree
