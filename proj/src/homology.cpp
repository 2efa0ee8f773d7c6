#include "sqfree/homology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "sqfree/error.hpp"

namespace sqfree {
namespace {

double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Calls `emit` for every `size`-subset of `pool`, built from `pool`'s members.
void for_each_subset(VertexSet pool, unsigned size, const std::function<void(std::uint64_t)>& emit) {
  const auto members = pool.to_vector();
  if (size > members.size()) return;
  std::vector<unsigned> idx(size);
  for (unsigned i = 0; i < size; ++i) idx[i] = i;
  const unsigned m = static_cast<unsigned>(members.size());
  while (true) {
    std::uint64_t mask = 0;
    for (unsigned i : idx) mask |= std::uint64_t{1} << members[i];
    emit(mask);
    int i = static_cast<int>(size) - 1;
    while (i >= 0 && idx[static_cast<unsigned>(i)] == m - size + static_cast<unsigned>(i)) --i;
    if (i < 0) return;
    ++idx[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<VertexSet> strong_collapse(std::vector<VertexSet> facets) {
  facets = maximal_elements(std::move(facets));
  bool changed = true;
  while (changed) {
    changed = false;
    VertexSet all;
    for (VertexSet f : facets) all |= f;
    for (unsigned v : all) {
      VertexSet common = all;
      for (VertexSet f : facets) {
        if (f.contains(v)) common &= f;
      }
      common.erase(v);
      if (!common.empty()) {
        for (VertexSet& f : facets) f.erase(v);
        facets = maximal_elements(std::move(facets));
        changed = true;
        break;
      }
    }
  }
  return facets;
}

/// Chain complex over a face oracle with cached face lists and boundary ranks.
namespace detail {

class ChainComplex {
 public:
  using FaceLister = std::function<std::vector<std::uint64_t>(unsigned size)>;

  ChainComplex(FaceLister lister, unsigned max_size, Field field, const HomologyOptions& options,
         const simd::RowKernels& kernels)
      : lister_(std::move(lister)), max_size_(max_size), field_(field), options_(options), kernels_(kernels) {}

  unsigned max_size() const { return max_size_; }

  const std::vector<std::uint64_t>& faces(unsigned size) {
    if (auto it = faces_.find(size); it != faces_.end()) return it->second;
    std::vector<std::uint64_t> list;
    if (size == 0) {
      list.push_back(0);
    } else if (size <= max_size_) {
      list = lister_(size);
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    total_faces_ += list.size();
    if (total_faces_ > options_.face_budget) {
      throw BudgetExceeded("chain complex exceeds the face budget of " + std::to_string(options_.face_budget));
    }
    return faces_.emplace(size, std::move(list)).first->second;
  }

  /// Rank of ∂_d : C_d -> C_{d-1}, with C_{-1} spanned by the empty face.
  std::size_t boundary_rank(int d) {
    if (d < 0) return 0;
    if (auto it = ranks_.find(d); it != ranks_.end()) return it->second;
    std::size_t rank = 0;
    if (d == 0) {
      rank = faces(1).empty() ? 0 : 1;
    } else {
      const SparseIntMatrix& m = boundary(d);
      rank = m.rows == 0 || m.cols == 0 ? 0 : matrix_rank(m, field_, kernels_);
    }
    ranks_.emplace(d, rank);
    return rank;
  }

  std::size_t reduced_homology(int d) {
    if (d < -1 || d + 1 > static_cast<int>(max_size_)) return 0;
    const std::size_t fd = faces(static_cast<unsigned>(d + 1)).size();
    if (fd == 0) return 0;
    const std::size_t r1 = boundary_rank(d), r2 = boundary_rank(d + 1);
    if (r1 + r2 > fd) throw InvariantViolation("boundary ranks exceed the chain dimension");
    return fd - r1 - r2;
  }

  /// Σ (-1)^d f_d must equal Σ (-1)^d rank H̃_d.
  void check_euler(const std::vector<std::size_t>& homology) {
    long long faces_sum = 0, homology_sum = 0;
    for (int d = -1; d + 1 <= static_cast<int>(max_size_); ++d) {
      const long long sign = (d % 2 == 0) ? 1 : -1;
      faces_sum += sign * static_cast<long long>(faces(static_cast<unsigned>(d + 1)).size());
    }
    for (std::size_t i = 0; i < homology.size(); ++i) {
      const int d = static_cast<int>(i) - 1;
      homology_sum += ((d % 2 == 0) ? 1 : -1) * static_cast<long long>(homology[i]);
    }
    if (faces_sum != homology_sum) {
      throw InvariantViolation("Euler characteristic of faces (" + std::to_string(faces_sum) +
                               ") differs from that of homology (" + std::to_string(homology_sum) + ")");
    }
  }

 private:
  const SparseIntMatrix& boundary(int d) {
    if (auto it = matrices_.find(d); it != matrices_.end()) return it->second;
    const auto& rows = faces(static_cast<unsigned>(d + 1));
    const auto& cols = faces(static_cast<unsigned>(d));
    SparseIntMatrix m;
    m.rows = rows.size();
    m.cols = cols.size();
    m.entries.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto& out = m.entries[r];
      out.reserve(static_cast<std::size_t>(d) + 1);
      int sign = 1;
      for (unsigned v : VertexSet(rows[r])) {
        const std::uint64_t facet = rows[r] & ~(std::uint64_t{1} << v);
        auto it = std::lower_bound(cols.begin(), cols.end(), facet);
        if (it == cols.end() || *it != facet) throw InvariantViolation("face list is not closed under taking faces");
        out.emplace_back(static_cast<std::uint32_t>(it - cols.begin()), sign);
        sign = -sign;
      }
    }
    const SparseIntMatrix& stored = matrices_.emplace(d, std::move(m)).first->second;
    if (auto lower = matrices_.find(d - 1); lower != matrices_.end()) check_composition(stored, lower->second);
    if (auto upper = matrices_.find(d + 1); upper != matrices_.end()) check_composition(upper->second, stored);
    return stored;
  }

  /// ∂_{d} ∘ ∂_{d+1} = 0 over the integers; `upper` is ∂_{d+1}, `lower` is ∂_d.
  static void check_composition(const SparseIntMatrix& upper, const SparseIntMatrix& lower) {
    std::vector<long long> acc(lower.cols, 0);
    std::vector<std::uint32_t> touched;
    for (const auto& row : upper.entries) {
      touched.clear();
      for (auto [mid, s] : row) {
        for (auto [c, t] : lower.entries[mid]) {
          if (acc[c] == 0) touched.push_back(c);
          acc[c] += static_cast<long long>(s) * t;
        }
      }
      for (std::uint32_t c : touched) {
        if (acc[c] != 0) throw InvariantViolation("boundary of a boundary is non-zero");
        acc[c] = 0;
      }
    }
  }

  FaceLister lister_;
  unsigned max_size_;
  Field field_;
  HomologyOptions options_;
  const simd::RowKernels& kernels_;
  std::map<unsigned, std::vector<std::uint64_t>> faces_;
  std::map<int, SparseIntMatrix> matrices_;
  std::map<int, std::size_t> ranks_;
  std::size_t total_faces_ = 0;
};

}  // namespace detail

namespace {

/// Faces of a given size of the complex generated by `facets`.
std::vector<std::uint64_t> faces_from_facets(const std::vector<VertexSet>& facets, unsigned size) {
  VertexSet all;
  double per_facet = 0;
  for (VertexSet f : facets) {
    all |= f;
    per_facet += binomial(f.size(), size);
  }
  const double by_universe = binomial(all.size(), size) * std::max<double>(1.0, facets.size() / 8.0);
  std::vector<std::uint64_t> out;
  if (per_facet <= by_universe) {
    for (VertexSet f : facets) {
      if (f.size() >= size) for_each_subset(f, size, [&](std::uint64_t m) { out.push_back(m); });
    }
  } else {
    for_each_subset(all, size, [&](std::uint64_t m) {
      for (VertexSet f : facets) {
        if (VertexSet(m).subset_of(f)) {
          out.push_back(m);
          return;
        }
      }
    });
  }
  return out;
}

double facet_face_estimate(const std::vector<VertexSet>& facets, unsigned lo_size, unsigned hi_size) {
  VertexSet all;
  for (VertexSet f : facets) all |= f;
  double total = 0;
  for (unsigned s = lo_size; s <= hi_size; ++s) {
    double per_facet = 0;
    for (VertexSet f : facets) per_facet += binomial(f.size(), s);
    total += std::min(per_facet, binomial(all.size(), s));
  }
  return total;
}

}  // namespace

std::vector<std::size_t> reduced_homology_ranks(std::span<const VertexSet> facets, Field field,
                                                const HomologyOptions& options) {
  if (facets.empty()) return {};  // no faces at all, not even the empty one
  std::vector<VertexSet> gens(facets.begin(), facets.end());
  if (options.strong_collapse) gens = strong_collapse(std::move(gens));
  else gens = maximal_elements(std::move(gens));
  unsigned max_size = 0;
  for (VertexSet f : gens) max_size = std::max(max_size, f.size());

  detail::ChainComplex chains(
      [gens](unsigned size) { return faces_from_facets(gens, size); }, max_size, field, options,
      simd::active_kernels());
  // Report up to the original dimension so callers see a stable length.
  unsigned original_max = 0;
  for (VertexSet f : facets) original_max = std::max(original_max, f.size());
  std::vector<std::size_t> ranks(original_max + 1, 0);
  std::vector<std::size_t> built(max_size + 1, 0);
  for (int d = -1; d + 1 <= static_cast<int>(max_size); ++d) {
    built[static_cast<std::size_t>(d + 1)] = chains.reduced_homology(d);
    ranks[static_cast<std::size_t>(d + 1)] = built[static_cast<std::size_t>(d + 1)];
  }
  chains.check_euler(built);
  return ranks;
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, Field field,
                                                const HomologyOptions& options) {
  return reduced_homology_ranks(complex.facets(), field, options);
}

StanleyReisnerHomology::StanleyReisnerHomology(StanleyReisnerData data, Field field, HomologyRoute route,
                                               std::pair<int, int> degree_hint, const HomologyOptions& options,
                                               const simd::RowKernels& kernels)
    : data_(std::move(data)), route_(route) {
  data_.nonfaces = minimal_elements(std::move(data_.nonfaces));
  for (VertexSet g : data_.nonfaces) {
    if (!g.subset_of(data_.ground)) throw InvalidArgument("nonface outside the ground set");
  }
  if (!data_.nonfaces.empty() && data_.nonfaces.front().empty()) {
    throw InvalidArgument("the empty set cannot be a nonface");
  }
  full_simplex_ = data_.nonfaces.empty();
  const unsigned w = data_.ground.size();

  if (full_simplex_) {
    route_ = HomologyRoute::kPrimal;
  }

  std::vector<VertexSet> dual;
  if (!full_simplex_ && route_ != HomologyRoute::kPrimal) {
    dual.reserve(data_.nonfaces.size());
    for (VertexSet g : data_.nonfaces) dual.push_back(data_.ground - g);
    dual = options.strong_collapse ? strong_collapse(std::move(dual)) : maximal_elements(std::move(dual));
  }

  if (route_ == HomologyRoute::kAuto) {
    // Dual sizes needed for Δ-degrees [lo, hi]: e = w - d - 3, faces of size e+1 and e+2.
    const int lo = std::max(degree_hint.first, -1), hi = std::min(degree_hint.second, static_cast<int>(w) - 2);
    unsigned dual_max = 0;
    for (VertexSet f : dual) dual_max = std::max(dual_max, f.size());
    const int e_lo = static_cast<int>(w) - hi - 3, e_hi = static_cast<int>(w) - lo - 3;
    const unsigned s_lo = static_cast<unsigned>(std::max(e_lo + 1, 0));
    const unsigned s_hi = static_cast<unsigned>(std::clamp(e_hi + 2, 0, static_cast<int>(dual_max)));
    const bool contractible = dual.size() == 1 && !dual.front().empty();
    const double dual_cost = contractible ? 0.0 : facet_face_estimate(dual, s_lo, s_hi);
    // The primal side is built bottom-up, so every size up to hi + 2 counts.
    double primal_cost = 0;
    for (int s = 1; s <= hi + 2 && s <= static_cast<int>(w); ++s) primal_cost += binomial(w, static_cast<unsigned>(s));
    // Minimal nonfaces thin the primal side; edge-like nonfaces thin it a lot.
    if (!data_.nonfaces.empty() && data_.nonfaces.front().size() <= 2 && data_.nonfaces.size() >= w / 2) {
      primal_cost *= 0.25;
    }
    route_ = (dual_cost <= primal_cost) ? HomologyRoute::kDual : HomologyRoute::kPrimal;
  }

  if (route_ == HomologyRoute::kDual) {
    unsigned max_size = 0;
    for (VertexSet f : dual) max_size = std::max(max_size, f.size());
    chains_ = std::make_unique<detail::ChainComplex>([dual](unsigned size) { return faces_from_facets(dual, size); },
                                       max_size, field, options, kernels);
  } else {
    const auto& kern = kernels;
    // Bottom-up: faces of size s are one-vertex extensions of faces of size s-1.
    std::vector<std::uint64_t> gens;
    gens.reserve(data_.nonfaces.size());
    for (VertexSet g : data_.nonfaces) gens.push_back(g.bits());
    const VertexSet ground = data_.ground;
    auto previous = std::make_shared<std::map<unsigned, std::vector<std::uint64_t>>>();
    (*previous)[0] = {0};
    chains_ = std::make_unique<detail::ChainComplex>(
        [gens, ground, previous, &kern](unsigned size) {
          auto& cache = *previous;
          for (unsigned s = 1; s <= size; ++s) {
            if (cache.count(s)) continue;
            const auto& below = cache.at(s - 1);
            std::vector<std::uint64_t> candidates;
            for (std::uint64_t t : below) {
              const VertexSet above = ground - VertexSet::range(t == 0 ? 0 : VertexSet(t).max() + 1);
              for (unsigned v : above) candidates.push_back(t | (std::uint64_t{1} << v));
            }
            std::vector<std::uint8_t> keep(candidates.size());
            if (!candidates.empty()) {
              kern.face_filter(candidates.data(), candidates.size(), gens.data(), gens.size(), keep.data());
            }
            std::vector<std::uint64_t> out;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
              if (keep[i]) out.push_back(candidates[i]);
            }
            cache[s] = std::move(out);
          }
          return cache.at(size);
        },
        w, field, options, kernels);
  }
}

StanleyReisnerHomology::~StanleyReisnerHomology() = default;
StanleyReisnerHomology::StanleyReisnerHomology(StanleyReisnerHomology&&) noexcept = default;
StanleyReisnerHomology& StanleyReisnerHomology::operator=(StanleyReisnerHomology&&) noexcept = default;

std::size_t StanleyReisnerHomology::reduced_homology(int degree) {
  const int w = static_cast<int>(data_.ground.size());
  if (route_ == HomologyRoute::kDual) return chains_->reduced_homology(w - degree - 3);
  return chains_->reduced_homology(degree);
}

std::vector<std::size_t> StanleyReisnerHomology::all_reduced_homology() {
  const int w = static_cast<int>(data_.ground.size());
  // Degrees -1 .. w - 2; an empty ground set still reports H̃_{-1}.
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(w, 1)), 0);
  for (int d = -1; d + 1 < static_cast<int>(out.size()); ++d) out[static_cast<std::size_t>(d + 1)] = reduced_homology(d);
  // Euler identity on the complex that was actually built.
  const int built_max = static_cast<int>(chains_->max_size());
  std::vector<std::size_t> built(static_cast<std::size_t>(built_max) + 1, 0);
  for (int e = -1; e + 1 <= built_max; ++e) built[static_cast<std::size_t>(e + 1)] = chains_->reduced_homology(e);
  chains_->check_euler(built);
  return out;
}

}  // namespace sqfree
