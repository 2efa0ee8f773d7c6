#include "sqfree/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sqfree/error.hpp"

namespace sqfree {

SimplicialComplex SimplicialComplex::from_faces(LabelTable labels, std::vector<VertexSet> faces) {
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.facets_ = maximal_elements(std::move(faces));
  for (VertexSet f : c.facets_) {
    if (!f.subset_of(c.labels_.all())) throw InvalidArgument("face uses a vertex outside the label table");
    c.vertices_ |= f;
  }
  return c;
}

bool SimplicialComplex::is_facet(VertexSet f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f, CanonicalLess{});
}

std::size_t SimplicialComplex::facet_index(VertexSet f) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), f, CanonicalLess{});
  if (it == facets_.end() || *it != f) {
    throw InvalidArgument(labels_.format(f) + " is not a facet");
  }
  return static_cast<std::size_t>(it - facets_.begin());
}

bool SimplicialComplex::contains_face(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.subset_of(f); });
}

SimplicialComplex SimplicialComplex::without(std::span<const VertexSet> removed) const {
  SimplicialComplex c;
  c.labels_ = labels_;
  for (VertexSet f : facets_) {
    if (std::find(removed.begin(), removed.end(), f) == removed.end()) {
      c.facets_.push_back(f);
      c.vertices_ |= f;
    }
  }
  return c;
}

std::string SimplicialComplex::format() const {
  std::string out = "<";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) out += ", ";
    out += labels_.format(facets_[i]);
  }
  return out + ">";
}

SimplicialComplex build_complex(std::vector<std::string> labels,
                                const std::vector<std::vector<std::string>>& facet_lists) {
  if (facet_lists.empty()) throw InvalidArgument("a complex needs at least one facet");
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
      throw InvalidArgument("duplicate label '" + *it + "'");
    }
  }
  std::set<std::string> used;
  for (const auto& facet : facet_lists) {
    if (facet.empty()) throw InvalidArgument("facets must be non-empty");
    for (const auto& l : facet) {
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) {
        throw InvalidArgument("facet uses unknown vertex '" + l + "'");
      }
      used.insert(l);
    }
  }
  std::vector<std::string> table(used.begin(), used.end());
  std::sort(table.begin(), table.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  LabelTable lt(std::move(table));
  std::vector<VertexSet> faces;
  faces.reserve(facet_lists.size());
  for (const auto& facet : facet_lists) faces.push_back(lt.set_of(facet));
  return SimplicialComplex::from_faces(std::move(lt), std::move(faces));
}

SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& facet_lists) {
  std::set<std::string> all;
  for (const auto& f : facet_lists) all.insert(f.begin(), f.end());
  return build_complex(std::vector<std::string>(all.begin(), all.end()), facet_lists);
}

std::vector<VertexSet> neighbors(const SimplicialComplex& complex, VertexSet facet) {
  complex.facet_index(facet);
  std::vector<VertexSet> out;
  for (VertexSet g : complex.facets()) {
    if (g != facet && g.intersects(facet)) out.push_back(g);
  }
  return out;
}

std::vector<VertexSet> closed_neighborhood(const SimplicialComplex& complex, VertexSet facet) {
  auto out = neighbors(complex, facet);
  out.push_back(facet);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

SimplicialComplex subcomplex(const SimplicialComplex& complex, std::span<const VertexSet> facets) {
  if (facets.empty()) throw InvalidArgument("subcomplex needs at least one facet");
  for (VertexSet f : facets) {
    if (!complex.is_facet(f)) {
      throw InvalidArgument(complex.labels().format(f) + " is not a facet of the complex");
    }
  }
  return SimplicialComplex::from_faces(complex.labels(), {facets.begin(), facets.end()});
}

SimplicialComplex contraction(const SimplicialComplex& complex, VertexSet removed) {
  std::vector<VertexSet> diffs;
  diffs.reserve(complex.facet_count());
  for (VertexSet f : complex.facets()) diffs.push_back(f - removed);
  // Minimal differences; an empty difference swallows everything else.
  auto minimal = minimal_elements(std::move(diffs));
  return SimplicialComplex::from_faces(complex.labels(), std::move(minimal));
}

SimplicialComplex restriction(const SimplicialComplex& complex, VertexSet sigma) {
  std::vector<VertexSet> faces;
  faces.reserve(complex.facet_count() + 1);
  faces.emplace_back();
  for (VertexSet f : complex.facets()) faces.push_back(f & sigma);
  return SimplicialComplex::from_faces(complex.labels(), std::move(faces));
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& complex) {
  const auto facets = complex.facets();
  const std::size_t m = facets.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (facets[i].intersects(facets[j])) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<VertexSet>> groups;
  std::vector<std::size_t> group_of(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = find(i);
    if (group_of[r] == m) {
      group_of[r] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(facets[i]);
  }
  std::vector<SimplicialComplex> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.push_back(SimplicialComplex::from_faces(complex.labels(), std::move(g)));
  return out;
}

VertexSet free_vertices(const SimplicialComplex& complex, VertexSet facet) {
  complex.facet_index(facet);
  VertexSet shared;
  for (VertexSet g : complex.facets()) {
    if (g != facet) shared |= g;
  }
  return facet - shared;
}

}  // namespace sqfree
