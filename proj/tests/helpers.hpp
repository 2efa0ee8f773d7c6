#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/ideal.hpp"

namespace sqfree::test {

inline std::vector<std::string> words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// C({"x1 y1", "x1 x2 x3"})
inline SimplicialComplex C(const std::vector<std::string>& facets) {
  std::vector<std::vector<std::string>> lists;
  for (const auto& f : facets) lists.push_back(words(f));
  return build_complex(lists);
}

inline VertexSet S(const LabelTable& labels, const std::string& text) { return labels.set_of(words(text)); }
inline VertexSet S(const SimplicialComplex& c, const std::string& text) { return S(c.labels(), text); }

inline std::vector<VertexSet> sets(const LabelTable& labels, const std::vector<std::string>& texts) {
  std::vector<VertexSet> out;
  for (const auto& t : texts) out.push_back(S(labels, t));
  canonicalize(out);
  return out;
}

/// Ideal over the given variables with generators written as "a b" strings.
inline MonomialIdeal ideal(const std::string& variables, const std::vector<std::string>& gens) {
  LabelTable labels(words(variables));
  std::vector<VertexSet> supports;
  for (const auto& g : gens) supports.push_back(S(labels, g));
  return MonomialIdeal(labels, supports);
}

inline LabelTable numbered(unsigned n, const std::string& prefix = "v") {
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
  return LabelTable(names);
}

/// Random complex with at most `facets` facets over `n` vertices.
inline SimplicialComplex random_complex(std::mt19937_64& rng, unsigned n, unsigned facets, unsigned max_size = 4) {
  std::uniform_int_distribution<unsigned> count(1, facets), size(1, max_size), vertex(0, n - 1);
  std::vector<VertexSet> faces;
  const unsigned m = count(rng);
  for (unsigned i = 0; i < m; ++i) {
    VertexSet f;
    const unsigned s = size(rng);
    while (f.size() < s) f.insert(vertex(rng));
    faces.push_back(f);
  }
  return SimplicialComplex::from_faces(numbered(n), faces);
}

}  // namespace sqfree::test
