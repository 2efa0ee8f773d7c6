#include <algorithm>
#include <map>
#include <random>

#include "sqfree/error.hpp"
#include "sqfree/harness.hpp"

namespace sqfree {
namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Traces of `s` on the facets form a chain, so a facet meeting the complex in s is a good leaf.
bool traces_form_chain(VertexSet s, const std::vector<VertexSet>& facets) {
  std::vector<VertexSet> traces;
  for (VertexSet f : facets) {
    if ((f & s).empty()) continue;
    traces.push_back(f & s);
  }
  std::sort(traces.begin(), traces.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  for (std::size_t i = 1; i < traces.size(); ++i) {
    if (!traces[i].subset_of(traces[i - 1])) return false;
  }
  return true;
}

VertexSet random_subset(Rng& rng, VertexSet pool, std::size_t size) {
  auto members = pool.to_vector();
  std::shuffle(members.begin(), members.end(), rng);
  VertexSet out;
  for (std::size_t i = 0; i < size && i < members.size(); ++i) out.insert(members[i]);
  return out;
}

struct Builder {
  std::vector<VertexSet> base;
  unsigned next_vertex = 0;

  VertexSet fresh(std::size_t count) {
    VertexSet out;
    for (std::size_t i = 0; i < count; ++i) out.insert(next_vertex++);
    return out;
  }
};

/// Random forest with facets of size >= 2, grown by attaching good leaves.
std::vector<VertexSet> grow_base(Rng& rng, const GeneratorParams& p, std::size_t vertex_limit, Builder& b) {
  const std::size_t max_size = std::max<std::size_t>(2, p.max_facet_size);
  if (vertex_limit < 2) return {};
  b.base.push_back(b.fresh(pick(rng, 2, std::min(max_size, vertex_limit))));
  while (b.base.size() < p.base_facet_count && b.next_vertex < vertex_limit) {
    const VertexSet host = b.base[pick(rng, 0, b.base.size() - 1)];
    const std::size_t room = vertex_limit - b.next_vertex;
    const std::size_t most = std::min<std::size_t>(host.size() - 1, max_size - 1);
    std::size_t shared = pick(rng, 0, 9) < 8 ? pick(rng, 1, most) : 0;
    VertexSet s = random_subset(rng, host, shared);
    if (!traces_form_chain(s, b.base)) s = shared > 0 ? VertexSet::singleton(host.min()) : VertexSet{};
    const std::size_t lo_new = s.empty() ? 2 : 1;
    const std::size_t hi_new = std::min(room, max_size - s.size());
    if (hi_new < lo_new) break;
    b.base.push_back(s | b.fresh(pick(rng, lo_new, hi_new)));
  }
  return b.base;
}

SimplicialComplex to_complex(const std::vector<VertexSet>& facets, unsigned base_vertices) {
  std::vector<std::vector<std::string>> lists;
  for (VertexSet f : facets) {
    std::vector<std::string> l;
    for (unsigned v : f) l.push_back(v < base_vertices ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - base_vertices + 1));
    lists.push_back(std::move(l));
  }
  return build_complex(lists);
}

}  // namespace

GeneratedForest random_grafted_forest(const GeneratorParams& params) {
  if (params.vertex_budget == 0 || params.max_facet_size == 0 || params.max_attempts == 0) {
    throw InvalidArgument("generator budgets must be positive");
  }
  if (params.vertex_budget > VertexSet::kCapacity) throw InvalidArgument("vertex budget above 64");
  Rng rng(params.seed);
  GeneratedForest out;

  if (params.base_facet_count == 0) {
    const std::size_t size = pick(rng, 1, std::min(params.max_facet_size, params.vertex_budget));
    Builder b;
    out.complex = to_complex({b.fresh(size)}, 0);
    out.certificate = *is_grafted(out.complex);
    return out;
  }

  for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
    Builder b;
    std::vector<VertexSet> facets;
    unsigned base_vertices = 0;
    if (params.whisker_mode == WhiskerMode::kAllVertices) {
      const auto base = grow_base(rng, params, params.vertex_budget / 2, b);
      if (base.empty()) throw InvalidArgument("vertex budget too small for a base facet");
      base_vertices = b.next_vertex;
      facets = base;
      for (unsigned v = 0; v < base_vertices; ++v) facets.push_back(VertexSet::singleton(v) | b.fresh(1));
    } else {
      // Leave room for at least one fresh vertex per base vertex in the worst case.
      const auto base = grow_base(rng, params, std::max<std::size_t>(2, params.vertex_budget / 2), b);
      if (base.empty()) throw InvalidArgument("vertex budget too small for a base facet");
      base_vertices = b.next_vertex;
      facets = base;
      // Vertices with identical facet membership can share a grafted leaf.
      std::map<std::vector<std::size_t>, std::vector<unsigned>> classes;
      for (unsigned v = 0; v < base_vertices; ++v) {
        std::vector<std::size_t> membership;
        for (std::size_t i = 0; i < base.size(); ++i) {
          if (base[i].contains(v)) membership.push_back(i);
        }
        classes[membership].push_back(v);
      }
      for (auto& [membership, members] : classes) {
        std::shuffle(members.begin(), members.end(), rng);
        // A block filling a whole base facet would swallow that facet.
        VertexSet whole;
        for (unsigned v : members) whole.insert(v);
        const bool fills_facet = std::find(base.begin(), base.end(), whole) != base.end();
        std::size_t i = 0;
        while (i < members.size()) {
          std::size_t most = members.size() - i;
          if (fills_facet && i == 0) most = std::max<std::size_t>(1, most - 1);
          const std::size_t block = pick(rng, 1, most);
          VertexSet leaf;
          for (std::size_t j = 0; j < block; ++j) leaf.insert(members[i + j]);
          i += block;
          const std::size_t room = params.vertex_budget - b.next_vertex;
          const std::size_t extra = std::min<std::size_t>(pick(rng, 1, 2), room);
          facets.push_back(leaf | b.fresh(extra));
        }
      }
      if (b.next_vertex > params.vertex_budget) {
        ++out.rejections;
        continue;
      }
    }
    SimplicialComplex complex = to_complex(facets, base_vertices);
    if (!is_cm_forest(complex)) {
      if (params.whisker_mode == WhiskerMode::kAllVertices) {
        throw InvariantViolation("whiskered forest failed the Cohen-Macaulay forest check: " + complex.format());
      }
      ++out.rejections;
      continue;
    }
    auto cert = is_grafted(complex);
    if (!cert) throw InvariantViolation("Cohen-Macaulay forest without a grafting certificate: " + complex.format());
    out.complex = std::move(complex);
    out.certificate = std::move(*cert);
    return out;
  }
  throw BudgetExceeded("no grafted forest accepted after " + std::to_string(params.max_attempts) + " attempts (" +
                       std::to_string(out.rejections) + " rejections)");
}

}  // namespace sqfree
