#include <algorithm>
#include <charconv>

#include "sqfree/error.hpp"
#include "sqfree/harness.hpp"
#include "sqfree/leaf.hpp"

namespace sqfree {
namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

FixtureFact fact(std::string property, std::string expected, Provenance p,
                 std::function<std::string(const EngineOptions&)> evaluate) {
  return {std::move(property), std::move(expected), p, std::move(evaluate)};
}

std::vector<VertexSet> sets_of(const LabelTable& labels, const std::vector<std::vector<std::string>>& lists) {
  std::vector<VertexSet> out;
  for (const auto& l : lists) out.push_back(labels.set_of(l));
  return out;
}

std::string canonical_list(const LabelTable& labels, const std::vector<std::vector<std::string>>& lists) {
  auto sets = sets_of(labels, lists);
  canonicalize(sets);
  return format_sets(labels, sets);
}

Fixture make(std::string name, const std::vector<std::vector<std::string>>& facets) {
  Fixture f;
  f.name = std::move(name);
  f.complex = build_complex(facets);
  f.ideal = facet_ideal(f.complex);
  return f;
}

Fixture delta1() {
  Fixture f = make("delta1", {{"x", "y1", "y2"}, {"x", "y3", "y4"}, {"x", "y5", "y6"}});
  const SimplicialComplex c = f.complex;
  f.facts.push_back(fact("facet_count", "3", Provenance::kPaper,
                         [c](const EngineOptions&) { return std::to_string(c.facet_count()); }));
  f.facts.push_back(fact("is_forest", "true", Provenance::kPaper,
                         [c](const EngineOptions&) { return yes_no(is_forest(c).has_value()); }));
  f.facts.push_back(fact("components", "1", Provenance::kPaper,
                         [c](const EngineOptions&) { return std::to_string(connected_components(c).size()); }));
  f.facts.push_back(fact("special_leaves", "none", Provenance::kPaper, [c](const EngineOptions&) {
    return format_sets(c.labels(), special_leaves(c));
  }));
  return f;
}

Fixture delta2() {
  Fixture f = make("delta2", {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"x4", "y4"}, {"x1", "x2", "x3"}, {"x3", "x4"}});
  const SimplicialComplex c = f.complex;
  f.facts.push_back(fact("facet_count", "6", Provenance::kPaper,
                         [c](const EngineOptions&) { return std::to_string(c.facet_count()); }));
  f.facts.push_back(fact("vertex_count", "8", Provenance::kPaper,
                         [c](const EngineOptions&) { return std::to_string(c.vertices().size()); }));
  f.facts.push_back(fact("is_cm_forest", "true", Provenance::kPaper,
                         [c](const EngineOptions&) { return yes_no(is_cm_forest(c)); }));
  f.facts.push_back(fact("special_leaves", "{x1,y1} {x2,y2} {x4,y4}", Provenance::kPaper, [c](const EngineOptions&) {
    return format_sets(c.labels(), special_leaves(c));
  }));
  f.facts.push_back(fact("leaves_not_special", "{x3,y3}", Provenance::kPaper, [c](const EngineOptions&) {
    std::vector<VertexSet> out;
    for (VertexSet l : leaves(c)) {
      if (!is_special_leaf(c, l)) out.push_back(l);
    }
    return format_sets(c.labels(), out);
  }));
  f.facts.push_back(fact("matching_number", "4", Provenance::kDerived,
                         [c](const EngineOptions&) { return std::to_string(matching_number(c)); }));
  return f;
}

Fixture g1() {
  Fixture f = make("g1", {{"x1", "x2"}, {"x2", "x3"}, {"x1", "x3"}, {"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}});
  const MonomialIdeal i = f.ideal;
  f.facts.push_back(fact("is_cm(I)", "true", Provenance::kPaper,
                         [i](const EngineOptions& o) { return yes_no(is_cm(i, o)); }));
  const std::vector<std::vector<std::string>> listed = {{"x1", "y1", "x3", "y3"}, {"x1", "y1", "x2", "x3"},
                                                           {"x1", "y1", "x2", "y2"}, {"x3", "y3", "x2", "y2"},
                                                           {"x3", "y3", "x1", "x2"}, {"x2", "y2", "x1", "x3"}};
  f.facts.push_back(fact("generators(I^[2])", canonical_list(i.ambient(), listed), Provenance::kPaper,
                         [i](const EngineOptions&) {
                           return format_sets(i.ambient(), squarefree_power(i, 2).generators());
                         }));
  f.facts.push_back(fact("min_covers(I^[2]) include {x1,x2} {y1,y2,y3}", "true", Provenance::kPaper,
                         [i](const EngineOptions&) {
                           const MonomialIdeal p = squarefree_power(i, 2);
                           const auto covers = minimal_covers(p);
                           const auto want = sets_of(p.ambient(), {{"x1", "x2"}, {"y1", "y2", "y3"}});
                           return yes_no(std::all_of(want.begin(), want.end(), [&](VertexSet w) {
                             return std::find(covers.begin(), covers.end(), w) != covers.end();
                           }));
                         }));
  f.facts.push_back(fact("is_unmixed(I^[2])", "false", Provenance::kPaper,
                         [i](const EngineOptions&) { return yes_no(is_unmixed(squarefree_power(i, 2))); }));
  f.facts.push_back(fact("is_cm(I^[2])", "false", Provenance::kPaper,
                         [i](const EngineOptions& o) { return yes_no(is_cm(squarefree_power(i, 2), o)); }));
  return f;
}

Fixture g2() {
  Fixture f = make("g2", {{"x1", "x2"}, {"x2", "x3"}, {"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}});
  const SimplicialComplex c = f.complex;
  const MonomialIdeal i = f.ideal;
  f.facts.push_back(fact("is_cm_forest", "true", Provenance::kPaper,
                         [c](const EngineOptions&) { return yes_no(is_cm_forest(c)); }));
  f.facts.push_back(fact("is_cm(I)", "true", Provenance::kPaper,
                         [i](const EngineOptions& o) { return yes_no(is_cm(i, o)); }));
  const std::vector<std::vector<std::string>> listed = {
      {"x1", "y1", "x2", "y2"}, {"x1", "y1", "x3", "y3"}, {"x1", "y1", "x2", "x3"}, {"x1", "x2", "x3", "y3"},
      {"x2", "y2", "x3", "y3"}};
  f.facts.push_back(fact("generators(I^[2])", canonical_list(i.ambient(), listed), Provenance::kPaper, [i](const EngineOptions&) {
                           return format_sets(i.ambient(), squarefree_power(i, 2).generators());
                         }));
  f.facts.push_back(fact("free_vertices(complex of I^[2])", "none", Provenance::kPaper, [i](const EngineOptions&) {
    const MonomialIdeal p = squarefree_power(i, 2);
    const auto d = SimplicialComplex::from_faces(p.ambient(), {p.generators().begin(), p.generators().end()});
    VertexSet free;
    for (VertexSet facet : d.facets()) free |= free_vertices(d, facet);
    return free.empty() ? std::string("none") : d.labels().format(free);
  }));
  f.facts.push_back(fact("is_forest(complex of I^[2])", "false", Provenance::kPaper, [i](const EngineOptions&) {
    const MonomialIdeal p = squarefree_power(i, 2);
    const auto d = SimplicialComplex::from_faces(p.ambient(), {p.generators().begin(), p.generators().end()});
    return yes_no(is_forest(d).has_value());
  }));
  f.facts.push_back(fact("matching_number", "3", Provenance::kDerived,
                         [c](const EngineOptions&) { return std::to_string(matching_number(c)); }));
  return f;
}

Fixture fakhari(unsigned n) {
  std::vector<std::vector<std::string>> gens;
  for (unsigned i = 1; i + 4 <= n; ++i) gens.push_back({"x1", "x3", "x" + std::to_string(i + 4)});
  gens.push_back({"x1", "x4", "x5"});
  gens.push_back({"x2", "x3", "x4"});
  gens.push_back({"x2", "x3", "x6"});
  Fixture f = make("fakhari" + std::to_string(n), gens);
  const SimplicialComplex c = f.complex;
  const MonomialIdeal i = f.ideal;
  f.facts.push_back(fact("generator_count", std::to_string(n - 4 + 3), Provenance::kPaper,
                         [i](const EngineOptions&) { return std::to_string(i.generators().size()); }));
  f.facts.push_back(fact("is_forest", "false", Provenance::kPaper,
                         [c](const EngineOptions&) { return yes_no(is_forest(c).has_value()); }));
  f.facts.push_back(fact("leaves of <x1x3x5, x1x4x5, x2x3x4>", "none", Provenance::kPaper, [c](const EngineOptions&) {
    const auto part = sets_of(c.labels(), {{"x1", "x3", "x5"}, {"x1", "x4", "x5"}, {"x2", "x3", "x4"}});
    const auto sub = subcomplex(c, part);
    return format_sets(sub.labels(), leaves(sub));
  }));
  f.facts.push_back(fact("d_1", "3", Provenance::kPaper,
                         [i](const EngineOptions&) { return std::to_string(i.generators().front().size()); }));
  f.facts.push_back(fact("g(2) > g(1)", "true", Provenance::kPaper, [i](const EngineOptions& o) {
    const auto g = normalized_depth(i, o);
    return yes_no(g.g.count(2) && g.g.at(2) > g.g.at(1));
  }));
  return f;
}

std::optional<unsigned> fakhari_size(std::string_view name) {
  if (!name.starts_with("fakhari")) return std::nullopt;
  name.remove_prefix(7);
  if (name.starts_with("(") && name.ends_with(")")) name = name.substr(1, name.size() - 2);
  unsigned n = 0;
  const auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size() || name.empty()) return std::nullopt;
  return n;
}

}  // namespace

std::string_view provenance_tag(Provenance p) {
  switch (p) {
    case Provenance::kPaper: return "PAPER";
    case Provenance::kTrivial: return "TRIVIAL";
    case Provenance::kDerived: return "DERIVED";
  }
  return "?";
}

std::string format_sets(const LabelTable& labels, std::span<const VertexSet> sets) {
  if (sets.empty()) return "none";
  std::string out;
  for (VertexSet s : sets) {
    if (!out.empty()) out += ' ';
    out += labels.format(s);
  }
  return out;
}

bool is_fixture_name(std::string_view name) {
  return name == "delta1" || name == "delta2" || name == "g1" || name == "g2" || fakhari_size(name).has_value();
}

std::vector<std::string> fixture_names() { return {"delta1", "delta2", "g1", "g2", "fakhari6"}; }

Fixture load_fixture(std::string_view name) {
  if (name == "delta1") return delta1();
  if (name == "delta2") return delta2();
  if (name == "g1") return g1();
  if (name == "g2") return g2();
  if (const auto n = fakhari_size(name)) {
    if (*n < 5) throw InvalidArgument("the fakhari family needs n >= 5");
    if (*n > 40) throw InvalidArgument("fakhari n is limited to 40");
    return fakhari(*n);
  }
  throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace sqfree
