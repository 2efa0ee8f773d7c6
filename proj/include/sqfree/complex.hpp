#pragma once

#include <span>
#include <string>
#include <vector>

#include "sqfree/labels.hpp"
#include "sqfree/vertex_set.hpp"

namespace sqfree {

/// A simplicial complex stored as its facet antichain over a shared label table.
///
/// Facets are kept in canonical order (size, then lex). Two special values
/// exist besides ordinary complexes:
///  - the empty complex, with no facets at all (e.g. after removing every
///    facet of a complex);
///  - the void complex `{∅}`, whose single facet is the empty face. It comes
///    out of contractions that swallow a whole facet and out of restriction to
///    the empty set; its facet ideal is the unit ideal.
///
/// Instances are immutable once built.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds from arbitrary generating faces; keeps the inclusion-maximal ones.
  /// Empty faces are allowed here and only survive when nothing else is given.
  static SimplicialComplex from_faces(LabelTable labels, std::vector<VertexSet> faces);

  const LabelTable& labels() const { return labels_; }
  std::span<const VertexSet> facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  /// Union of the facets.
  VertexSet vertices() const { return vertices_; }
  bool empty() const { return facets_.empty(); }
  bool is_void() const { return facets_.size() == 1 && facets_.front().empty(); }
  bool is_facet(VertexSet f) const;
  /// Index of `f` in facets(); throws InvalidArgument if `f` is not a facet.
  std::size_t facet_index(VertexSet f) const;
  bool contains_face(VertexSet face) const;

  /// The complex with facet set F(this) minus `removed`.
  SimplicialComplex without(std::span<const VertexSet> removed) const;

  std::string format() const;

  bool operator==(const SimplicialComplex& other) const {
    return facets_ == other.facets_ && labels_ == other.labels_;
  }

 private:
  LabelTable labels_;
  std::vector<VertexSet> facets_;
  VertexSet vertices_;
};

/// Builds a complex from labelled facet lists. The label table is reduced to
/// the labels that occur in some facet and sorted naturally.
/// Errors: duplicate label, empty facet, empty facet list, facet label not in
/// `labels`, more than 64 vertices.
SimplicialComplex build_complex(std::vector<std::string> labels,
                                const std::vector<std::vector<std::string>>& facet_lists);

/// Same, deriving the label list from the facets.
SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& facet_lists);

std::vector<VertexSet> neighbors(const SimplicialComplex& complex, VertexSet facet);
std::vector<VertexSet> closed_neighborhood(const SimplicialComplex& complex, VertexSet facet);

/// Complex whose facet set is exactly `facets` (a non-empty subset of F(complex)).
SimplicialComplex subcomplex(const SimplicialComplex& complex, std::span<const VertexSet> facets);

/// Facets are the inclusion-minimal differences F \ A. When some facet lies
/// inside A the result is the void complex {∅}.
SimplicialComplex contraction(const SimplicialComplex& complex, VertexSet removed);

/// All faces of `complex` inside `sigma`, as a facet antichain. Restricting to
/// a set that meets no facet gives the void complex {∅}.
SimplicialComplex restriction(const SimplicialComplex& complex, VertexSet sigma);

/// Facets grouped by the transitive closure of "shares a vertex".
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& complex);

/// Vertices of `facet` lying in no other facet.
VertexSet free_vertices(const SimplicialComplex& complex, VertexSet facet);

}  // namespace sqfree
