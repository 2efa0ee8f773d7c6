#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/linalg.hpp"

namespace sqfree {

namespace detail {
class ChainComplex;
}

struct HomologyOptions {
  /// Total faces a single chain complex may materialise.
  std::size_t face_budget = 4'000'000;
  /// Dominated-vertex removal on facet-given complexes before building chains.
  bool strong_collapse = true;
};

/// Ranks of reduced homology H̃_d for d = -1 .. dim, stored at index d + 1.
/// ∂∘∂ = 0 and the Euler-characteristic identity are checked on every call.
std::vector<std::size_t> reduced_homology_ranks(std::span<const VertexSet> facets, Field field,
                                                const HomologyOptions& options = {});
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, Field field,
                                                const HomologyOptions& options = {});

/// Repeatedly deletes a vertex v when every facet through v also contains
/// some other vertex w. The result is homotopy equivalent to the input.
std::vector<VertexSet> strong_collapse(std::vector<VertexSet> facets);

/// Complex of all subsets of `ground` that contain no `nonfaces` member.
/// This is the restriction of a Stanley-Reisner complex to `ground`.
struct StanleyReisnerData {
  VertexSet ground;
  std::vector<VertexSet> nonfaces;  ///< minimal, each a subset of ground
};

enum class HomologyRoute {
  kAuto,    ///< cheaper of the two per query
  kPrimal,  ///< chains of the complex itself
  kDual,    ///< Alexander dual ⟨ground \ g⟩ on the same ground set
};

/// Lazily computes H̃_d of a Stanley-Reisner complex, caching boundary ranks.
///
/// The dual route uses H̃_d(Δ) ≅ H̃_{|W|-d-3}(Δ^∨) over a field, where W is the
/// ground set and Δ^∨ is generated by the complements of the minimal nonfaces.
class StanleyReisnerHomology {
 public:
  /// `degree_hint` bounds the degrees the caller intends to query; it only
  /// steers the kAuto route choice.
  StanleyReisnerHomology(StanleyReisnerData data, Field field, HomologyRoute route,
                         std::pair<int, int> degree_hint, const HomologyOptions& options = {},
                         const simd::RowKernels& kernels = simd::active_kernels());
  ~StanleyReisnerHomology();
  StanleyReisnerHomology(StanleyReisnerHomology&&) noexcept;
  StanleyReisnerHomology& operator=(StanleyReisnerHomology&&) noexcept;

  std::size_t reduced_homology(int degree);
  /// All degrees -1 .. |ground| - 2, with the Euler check on the complex actually built.
  std::vector<std::size_t> all_reduced_homology();
  HomologyRoute route() const { return route_; }

 private:
  StanleyReisnerData data_;
  HomologyRoute route_;
  bool full_simplex_ = false;
  std::unique_ptr<detail::ChainComplex> chains_;
};

}  // namespace sqfree
