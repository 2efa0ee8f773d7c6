#include "sqfree/depth.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "sqfree/error.hpp"
#include "sqfree/leaf.hpp"

namespace sqfree {
namespace {

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("the zero ideal has no finite invariants here");
  if (ideal.is_unit()) throw InvalidArgument("the unit ideal has an empty quotient");
}

bool contains_nonface(VertexSet set, std::span<const VertexSet> nonfaces) {
  for (VertexSet g : nonfaces) {
    if (g.subset_of(set)) return true;
  }
  return false;
}

/// Largest subset of `ground` containing no nonface, by branch and bound.
unsigned largest_face(VertexSet ground, std::span<const VertexSet> nonfaces) {
  const auto order = ground.to_vector();
  unsigned best = 0;
  auto search = [&](auto&& self, std::size_t pos, VertexSet current) -> void {
    if (current.size() + (order.size() - pos) <= best) return;
    if (pos == order.size()) {
      best = current.size();
      return;
    }
    VertexSet with = current;
    with.insert(order[pos]);
    if (!contains_nonface(with, nonfaces)) self(self, pos + 1, with);
    self(self, pos + 1, current);
  };
  search(search, 0, VertexSet{});
  return best;
}

std::vector<VertexSet> nonfaces_inside(std::span<const VertexSet> gens, VertexSet sigma) {
  std::vector<VertexSet> out;
  for (VertexSet g : gens) {
    if (g.subset_of(sigma)) out.push_back(g);
  }
  return out;
}

std::vector<VertexSet> enumerate_sigmas(const MonomialIdeal& ideal, Enumeration enumeration) {
  const auto gens = ideal.generators();
  std::vector<VertexSet> out;
  switch (enumeration) {
    case Enumeration::kLcmLattice: {
      std::unordered_set<std::uint64_t> seen;
      std::vector<std::uint64_t> stack;
      for (VertexSet g : gens) {
        if (seen.insert(g.bits()).second) stack.push_back(g.bits());
      }
      while (!stack.empty()) {
        const std::uint64_t x = stack.back();
        stack.pop_back();
        for (VertexSet g : gens) {
          const std::uint64_t y = x | g.bits();
          if (seen.insert(y).second) stack.push_back(y);
        }
      }
      for (std::uint64_t x : seen) out.emplace_back(x);
      break;
    }
    case Enumeration::kNonFaces:
    case Enumeration::kAll: {
      const std::uint64_t all = ideal.ambient().all().bits();
      std::uint64_t sub = 0;
      do {
        if (enumeration == Enumeration::kAll || contains_nonface(VertexSet(sub), gens)) out.emplace_back(sub);
        sub = (sub - all) & all;
      } while (sub != 0);
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return canonical_less(a, b);
  });
  return out;
}

/// Runs `work(index)` for each index on `threads` workers, rethrowing the first error.
template <class Work>
void parallel_for(std::size_t count, unsigned threads, Work&& work) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  const unsigned used = std::min<unsigned>(threads, static_cast<unsigned>(count));
  for (unsigned t = 0; t < used; ++t) {
    pool.emplace_back([&] {
      while (!failed.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void check_cap(const MonomialIdeal& ideal, const EngineOptions& options) {
  if (ideal.variable_count() > options.vertex_cap) {
    throw BudgetExceeded(std::to_string(ideal.variable_count()) + " variables exceed the engine cap of " +
                         std::to_string(options.vertex_cap));
  }
}

}  // namespace

unsigned default_vertex_cap() {
  if (const char* env = std::getenv("SQFREE_ENGINE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= VertexSet::kCapacity) return static_cast<unsigned>(v);
  }
  return 20;
}

std::vector<VertexSet> minimal_covers(const MonomialIdeal& ideal) {
  require_proper(ideal);
  std::vector<VertexSet> covers{VertexSet{}};
  for (VertexSet g : ideal.generators()) {
    std::vector<VertexSet> next;
    for (VertexSet c : covers) {
      if (c.intersects(g)) {
        next.push_back(c);
      } else {
        for (unsigned v : g) next.push_back(c | VertexSet::singleton(v));
      }
    }
    covers = minimal_elements(std::move(next));
  }
  return covers;
}

std::size_t height(const MonomialIdeal& ideal) {
  const auto covers = minimal_covers(ideal);
  std::size_t h = covers.front().size();
  for (VertexSet c : covers) h = std::min<std::size_t>(h, c.size());
  const std::size_t n = ideal.variable_count();
  const unsigned face = largest_face(ideal.ambient().all(), ideal.generators());
  if (n - face != h) {
    throw InvariantViolation("minimum cover size " + std::to_string(h) + " disagrees with n - largest face = " +
                             std::to_string(n - face));
  }
  return h;
}

std::size_t krull_dim(const MonomialIdeal& ideal) { return ideal.variable_count() - height(ideal); }

bool is_unmixed(const MonomialIdeal& ideal) {
  const auto covers = minimal_covers(ideal);
  return std::all_of(covers.begin(), covers.end(), [&](VertexSet c) { return c.size() == covers.front().size(); });
}

std::size_t hochster_restrictions(const MonomialIdeal& ideal, Enumeration enumeration) {
  require_proper(ideal);
  return enumerate_sigmas(ideal, enumeration).size();
}

bool reisner_cm(const MonomialIdeal& ideal, const EngineOptions& options) {
  require_proper(ideal);
  check_cap(ideal, options);
  const VertexSet all = ideal.ambient().all();
  const auto gens = ideal.generators();
  std::vector<VertexSet> faces;
  const std::uint64_t mask = all.bits();
  std::uint64_t sub = 0;
  do {
    if (!contains_nonface(VertexSet(sub), gens)) faces.emplace_back(sub);
    sub = (sub - mask) & mask;
  } while (sub != 0);
  canonicalize(faces);

  std::atomic<bool> cm{true};
  parallel_for(faces.size(), options.threads, [&](std::size_t idx) {
    if (!cm.load()) return;
    const VertexSet face = faces[idx];
    StanleyReisnerData link;
    link.ground = all - face;
    for (VertexSet g : gens) link.nonfaces.push_back(g - face);
    link.nonfaces = minimal_elements(std::move(link.nonfaces));
    VertexSet used;
    for (VertexSet g : link.nonfaces) used |= g;
    if (!link.ground.subset_of(used)) return;  // cone over a free vertex
    const int top = static_cast<int>(largest_face(link.ground, link.nonfaces)) - 1;
    if (top < 0) return;
    StanleyReisnerHomology homology(link, options.field, options.route, {-1, top - 1}, options.homology);
    for (int d = -1; d < top; ++d) {
      if (homology.reduced_homology(d) != 0) {
        cm.store(false);
        return;
      }
    }
  });
  return cm.load();
}

DepthReport depth_report(const MonomialIdeal& ideal, const EngineOptions& options) {
  require_proper(ideal);
  check_cap(ideal, options);
  DepthReport report;
  report.variables = ideal.ambient();
  report.n = ideal.variable_count();
  report.field_char = options.field.characteristic();
  report.min_covers = minimal_covers(ideal);
  report.height = height(ideal);
  report.krull_dim = report.n - report.height;
  report.is_unmixed = is_unmixed(ideal);

  const auto sigmas = enumerate_sigmas(ideal, options.enumeration);
  report.restrictions = sigmas.size();
  const auto gens = ideal.generators();

  if (options.betti) {
    std::vector<std::vector<BettiEntry>> found(sigmas.size());
    parallel_for(sigmas.size(), options.threads, [&](std::size_t idx) {
      const VertexSet sigma = sigmas[idx];
      const int w = static_cast<int>(sigma.size());
      StanleyReisnerHomology homology({sigma, nonfaces_inside(gens, sigma)}, options.field, options.route, {-1, w - 2},
                                      options.homology);
      const auto ranks = homology.all_reduced_homology();
      for (int d = -1; d <= w - 2; ++d) {
        const std::size_t r = ranks[static_cast<std::size_t>(d + 1)];
        if (r != 0) found[idx].push_back({w - d - 1, sigma, r});
      }
    });
    for (auto& list : found) {
      for (auto& e : list) {
        report.proj_dim = std::max<std::size_t>(report.proj_dim, static_cast<std::size_t>(e.index));
        report.betti.push_back(e);
      }
    }
    std::sort(report.betti.begin(), report.betti.end(), [](const BettiEntry& a, const BettiEntry& b) {
      if (a.index != b.index) return a.index < b.index;
      return canonical_less(a.multidegree, b.multidegree);
    });
  } else {
    std::atomic<std::size_t> best{0};
    parallel_for(sigmas.size(), options.threads, [&](std::size_t idx) {
      const VertexSet sigma = sigmas[idx];
      const std::size_t w = sigma.size();
      std::size_t floor = best.load();
      if (w <= floor) return;
      // i runs downward from |σ|, i.e. the homological degree |σ| - i - 1 upward from -1.
      const int top_degree = static_cast<int>(w) - static_cast<int>(floor) - 2;
      StanleyReisnerHomology homology({sigma, nonfaces_inside(gens, sigma)}, options.field, options.route,
                                      {-1, top_degree}, options.homology);
      for (std::size_t i = w; i > floor; --i) {
        const int d = static_cast<int>(w) - static_cast<int>(i) - 1;
        if (homology.reduced_homology(d) != 0) {
          std::size_t seen = best.load();
          while (seen < i && !best.compare_exchange_weak(seen, i)) {
          }
          break;
        }
        floor = std::max(floor, best.load());
      }
    });
    report.proj_dim = best.load();
  }

  if (report.proj_dim == 0 || report.proj_dim > report.n) {
    throw InvariantViolation("projective dimension " + std::to_string(report.proj_dim) + " out of range");
  }
  report.depth = report.n - report.proj_dim;
  if (report.depth > report.krull_dim) {
    throw InvariantViolation("depth " + std::to_string(report.depth) + " exceeds dimension " +
                             std::to_string(report.krull_dim));
  }
  report.is_cm = report.depth == report.krull_dim;
  if (report.n <= options.reisner_cap) report.reisner_cm = reisner_cm(ideal, options);
  return report;
}

bool is_cm(const MonomialIdeal& ideal, const EngineOptions& options) {
  const DepthReport report = depth_report(ideal, options);
  if (report.reisner_cm && *report.reisner_cm != report.is_cm) {
    throw InvariantViolation("Reisner's criterion and depth = dim disagree on " + ideal.format());
  }
  return report.is_cm;
}

bool NormalizedDepth::nonincreasing() const {
  for (auto it = g.begin(); it != g.end(); ++it) {
    auto next = std::next(it);
    if (next != g.end() && next->second > it->second) return false;
  }
  return true;
}

NormalizedDepth normalized_depth(const MonomialIdeal& ideal, const EngineOptions& options) {
  require_proper(ideal);
  const MonomialIdeal base = ideal.over_support();
  const std::size_t nu = matching_number(std::vector<VertexSet>(base.generators().begin(), base.generators().end()));
  NormalizedDepth out;
  for (std::size_t k = 1; k <= nu; ++k) {
    const MonomialIdeal power = squarefree_power(base, k);
    const std::size_t dk = power.generators().front().size();  // canonical order puts a smallest first
    const std::size_t depth = depth_report(power, options).depth;
    if (depth + 1 < dk) {
      throw InvariantViolation("depth " + std::to_string(depth) + " below d_k - 1 = " + std::to_string(dk - 1));
    }
    out.depth[k] = depth;
    out.min_degree[k] = dk;
    out.g[k] = static_cast<long long>(depth) - static_cast<long long>(dk) + 1;
  }
  return out;
}

VertexSet neighbor_intersection(const GraftingCertificate& cert, VertexSet leaf) {
  bool any = false;
  VertexSet meet;
  for (VertexSet g : cert.base_facets) {
    if (!g.intersects(leaf)) continue;
    meet = any ? (meet & (leaf & g)) : (leaf & g);
    any = true;
  }
  return meet;
}

ContractionLemmaCheck verify_contraction_lemma(const SimplicialComplex& complex, VertexSet leaf, VertexSet removed) {
  if (!is_cm_forest(complex)) throw InvalidArgument("contraction lemma needs a Cohen-Macaulay forest");
  const auto cert = is_grafted(complex);
  if (!cert) throw InvalidArgument("Cohen-Macaulay forest without a grafting certificate");
  const auto& grafted = cert->grafted_leaves;
  if (std::find(grafted.begin(), grafted.end(), leaf) == grafted.end()) {
    throw InvalidArgument(complex.labels().format(leaf) + " is not a grafted leaf");
  }
  const VertexSet full = neighbor_intersection(*cert, leaf);
  if (!removed.subset_of(full)) {
    throw InvalidArgument(complex.labels().format(removed) + " is not inside the neighbour intersection " +
                          complex.labels().format(full));
  }

  ContractionLemmaCheck check;
  check.contracted = contraction(complex, removed);
  check.colon_matches = ideal_equal(facet_ideal(check.contracted), colon(facet_ideal(complex), removed));
  check.cm_forest = is_cm_forest(check.contracted);

  if (removed == full) {
    std::vector<VertexSet> swallowed_base;
    std::vector<VertexSet> near;
    for (VertexSet g : cert->base_facets) {
      if (g.intersects(leaf)) near.push_back(g);
    }
    std::vector<VertexSet> leaves_out{leaf - removed}, base_out;
    for (VertexSet f : grafted) {
      if (f == leaf) continue;
      bool dropped = false;
      for (VertexSet g : near) {
        if ((g - removed).subset_of(f)) {
          leaves_out.push_back(g - removed);
          swallowed_base.push_back(g);
          dropped = true;
        }
      }
      if (!dropped) leaves_out.push_back(f);
    }
    for (VertexSet g : cert->base_facets) {
      const bool is_near = std::find(near.begin(), near.end(), g) != near.end();
      if (is_near) {
        if (std::find(swallowed_base.begin(), swallowed_base.end(), g) == swallowed_base.end()) {
          base_out.push_back(g - removed);
        }
        continue;
      }
      const bool covers_near = std::any_of(near.begin(), near.end(), [&](VertexSet h) { return (h - removed).subset_of(g); });
      if (!covers_near) base_out.push_back(g);
    }
    canonicalize(leaves_out);
    canonicalize(base_out);
    check.predicted_leaves = leaves_out;
    check.predicted_base = base_out;
    const auto contracted_cert = is_grafted(check.contracted);
    check.partition_matches = contracted_cert && contracted_cert->grafted_leaves == leaves_out &&
                              contracted_cert->base_facets == base_out;
  }
  return check;
}

bool verify_colon_cm(const MonomialIdeal& ideal, VertexSet monomial, const EngineOptions& options) {
  if (ideal.contains(monomial)) throw InvalidArgument(ideal.ambient().format(monomial) + " lies in the ideal");
  if (!is_cm(ideal, options)) throw InvalidArgument("R/I is not Cohen-Macaulay");
  return is_cm(colon(ideal, monomial), options);
}

bool DepthTheoremRow::holds() const {
  if (dim != expected || depth != expected || !is_cm) return false;
  return std::all_of(special_leaf_depths.begin(), special_leaf_depths.end(),
                     [&](const auto& p) { return p.second == expected; });
}

bool DepthTheoremReport::holds() const {
  return g_nonincreasing && std::all_of(rows.begin(), rows.end(), [](const DepthTheoremRow& r) { return r.holds(); });
}

DepthTheoremReport verify_depth_theorem(const SimplicialComplex& input, const EngineOptions& options,
                                        const std::vector<std::size_t>& k_values) {
  if (!is_cm_forest(input)) throw InvalidArgument("depth formula needs a Cohen-Macaulay forest");
  // Work over the ring of the vertices actually used.
  SimplicialComplex complex = input;
  if (input.vertices() != input.labels().all()) {
    std::vector<std::vector<std::string>> lists;
    for (VertexSet f : input.facets()) lists.push_back(input.labels().names_of(f));
    complex = build_complex(lists);
  }

  DepthTheoremReport report;
  report.vertices = complex.vertices().size();
  report.matching_number = matching_number(complex);
  const std::size_t n = report.vertices, nu = report.matching_number;
  std::vector<std::size_t> ks = k_values;
  if (ks.empty()) {
    for (std::size_t k = 1; k <= nu; ++k) ks.push_back(k);
  }
  for (std::size_t k : ks) {
    if (k < 1 || k > nu) throw InvalidArgument("k = " + std::to_string(k) + " outside 1.." + std::to_string(nu));
  }
  const MonomialIdeal ideal = facet_ideal(complex);
  const auto special = special_leaves(complex);
  for (std::size_t k : ks) {
    DepthTheoremRow row;
    row.k = k;
    row.expected = n - nu + k - 1;
    const MonomialIdeal power = squarefree_power(ideal, k);
    const DepthReport rep = depth_report(power, options);
    row.dim = rep.krull_dim;
    row.depth = rep.depth;
    row.is_cm = rep.is_cm && rep.reisner_cm.value_or(rep.is_cm);
    for (VertexSet f : special) {
      row.special_leaf_depths.emplace_back(f, depth_report(add_principal(power, f), options).depth);
    }
    row.g = static_cast<long long>(rep.depth) - static_cast<long long>(power.generators().front().size()) + 1;
    report.rows.push_back(std::move(row));
  }
  report.g_nonincreasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].k > report.rows[i - 1].k && report.rows[i].g > report.rows[i - 1].g) report.g_nonincreasing = false;
  }
  return report;
}

}  // namespace sqfree
