#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/grafting.hpp"
#include "sqfree/homology.hpp"
#include "sqfree/ideal.hpp"

namespace sqfree {

/// Which multidegrees σ the Hochster sum visits.
enum class Enumeration {
  kLcmLattice,  ///< σ equal to a union of generator supports
  kNonFaces,    ///< σ containing at least one generator support
  kAll,         ///< every σ ⊆ V
};

/// Default vertex cap: 20, or SQFREE_ENGINE_CAP from the environment.
unsigned default_vertex_cap();

struct EngineOptions {
  Field field = Field::rationals();
  /// Compute every graded Betti number instead of stopping at the projective dimension.
  bool betti = false;
  unsigned vertex_cap = default_vertex_cap();
  Enumeration enumeration = Enumeration::kLcmLattice;
  HomologyRoute route = HomologyRoute::kAuto;
  unsigned threads = 1;
  /// Run the Reisner link test when n is at most this.
  unsigned reisner_cap = 12;
  HomologyOptions homology;
};

struct BettiEntry {
  int index = 0;
  VertexSet multidegree;
  std::size_t rank = 0;
};

struct DepthReport {
  LabelTable variables;
  std::size_t n = 0;
  std::size_t height = 0;
  std::size_t krull_dim = 0;
  std::size_t proj_dim = 0;
  std::size_t depth = 0;
  bool is_cm = false;
  bool is_unmixed = false;
  std::vector<VertexSet> min_covers;
  unsigned field_char = 0;
  /// Reisner verdict, present when n <= reisner_cap.
  std::optional<bool> reisner_cm;
  /// Multidegrees visited by the Hochster sum.
  std::size_t restrictions = 0;
  /// Nonzero β_{i,σ}(R/I) for i >= 1, only in Betti mode; sorted by (i, σ).
  std::vector<BettiEntry> betti;
};

/// Minimal transversals of the generator supports (minimal primes), canonical order.
/// Errors: zero or unit ideal.
std::vector<VertexSet> minimal_covers(const MonomialIdeal& ideal);
/// Minimum cover size. Cross-checked against n minus the largest face of the
/// Stanley-Reisner complex, found by an independent search.
std::size_t height(const MonomialIdeal& ideal);
std::size_t krull_dim(const MonomialIdeal& ideal);
bool is_unmixed(const MonomialIdeal& ideal);

/// Number of multidegrees the Hochster sum would visit; the cost estimate.
std::size_t hochster_restrictions(const MonomialIdeal& ideal, Enumeration enumeration);

/// Full report via Hochster's formula. Errors: zero or unit ideal, n above the cap.
DepthReport depth_report(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// CM test via Reisner's criterion on links of the Stanley-Reisner complex.
bool reisner_cm(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// depth == dim; when n <= reisner_cap the Reisner verdict must agree
/// (InvariantViolation otherwise).
bool is_cm(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// g(k) = depth(R/I^[k]) - (d_k - 1) for 1 <= k <= ν, over the smallest ring
/// containing the generators of I.
struct NormalizedDepth {
  std::map<std::size_t, std::size_t> depth;
  std::map<std::size_t, std::size_t> min_degree;
  std::map<std::size_t, long long> g;
  bool nonincreasing() const;
};
NormalizedDepth normalized_depth(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// Contraction of a CM forest on A inside the neighbour intersection of a grafted leaf.
struct ContractionLemmaCheck {
  SimplicialComplex contracted;
  bool colon_matches = false;
  bool cm_forest = false;
  /// Only compared when A is the full intersection.
  std::optional<bool> partition_matches;
  std::vector<VertexSet> predicted_leaves;
  std::vector<VertexSet> predicted_base;
  bool holds() const { return colon_matches && cm_forest && partition_matches.value_or(true); }
};
/// ∩ (F ∩ G) over base facets G meeting the grafted leaf F; empty when none meets F.
VertexSet neighbor_intersection(const GraftingCertificate& cert, VertexSet leaf);
ContractionLemmaCheck verify_contraction_lemma(const SimplicialComplex& complex, VertexSet leaf, VertexSet removed);

/// (I : m) stays CM when I is CM. Errors: m ∈ I, R/I not CM.
bool verify_colon_cm(const MonomialIdeal& ideal, VertexSet monomial, const EngineOptions& options = {});

struct DepthTheoremRow {
  std::size_t k = 0;
  std::size_t expected = 0;  ///< |V| - ν + k - 1
  std::size_t dim = 0;
  std::size_t depth = 0;
  bool is_cm = false;
  /// depth of R/(I^[k] + <x_F>) for each special leaf F.
  std::vector<std::pair<VertexSet, std::size_t>> special_leaf_depths;
  long long g = 0;
  bool holds() const;
};
struct DepthTheoremReport {
  std::size_t vertices = 0;
  std::size_t matching_number = 0;
  std::vector<DepthTheoremRow> rows;
  bool g_nonincreasing = false;
  bool holds() const;
};
/// Replays the dimension and depth formulas on every 1 <= k <= ν, restricted
/// to `k_values` when non-empty. Errors: not a CM forest.
DepthTheoremReport verify_depth_theorem(const SimplicialComplex& complex, const EngineOptions& options = {},
                                        const std::vector<std::size_t>& k_values = {});

}  // namespace sqfree
