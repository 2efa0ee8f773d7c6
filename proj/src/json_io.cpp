#include "sqfree/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "sqfree/error.hpp"

namespace sqfree {
namespace {

Json names(const LabelTable& labels, VertexSet set) { return Json(labels.names_of(set)); }

std::vector<std::vector<std::string>> string_lists(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InvalidArgument(std::string("expected an array under \"") + key + "\"");
  }
  std::vector<std::vector<std::string>> out;
  for (const auto& entry : doc[key]) {
    if (!entry.is_array()) throw InvalidArgument(std::string("entries of \"") + key + "\" must be arrays");
    std::vector<std::string> list;
    for (const auto& label : entry) {
      if (!label.is_string()) throw InvalidArgument("labels must be strings");
      list.push_back(label.get<std::string>());
    }
    out.push_back(std::move(list));
  }
  return out;
}

std::vector<std::string> string_list(const Json& doc, const char* key) {
  if (!doc[key].is_array()) throw InvalidArgument(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& label : doc[key]) {
    if (!label.is_string()) throw InvalidArgument("labels must be strings");
    out.push_back(label.get<std::string>());
  }
  return out;
}

}  // namespace

Json complex_to_json(const SimplicialComplex& complex) {
  Json doc;
  doc["vertices"] = names(complex.labels(), complex.vertices());
  Json facets = Json::array();
  for (VertexSet f : complex.facets()) facets.push_back(names(complex.labels(), f));
  doc["facets"] = std::move(facets);
  return doc;
}

SimplicialComplex complex_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidArgument("complex JSON must be an object");
  const auto facets = string_lists(doc, "facets");
  if (doc.contains("vertices")) return build_complex(string_list(doc, "vertices"), facets);
  return build_complex(facets);
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json doc;
  doc["variables"] = Json(std::vector<std::string>(ideal.ambient().labels().begin(), ideal.ambient().labels().end()));
  Json gens = Json::array();
  for (VertexSet g : ideal.generators()) gens.push_back(names(ideal.ambient(), g));
  doc["generators"] = std::move(gens);
  return doc;
}

MonomialIdeal ideal_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidArgument("ideal JSON must be an object");
  const auto gens = string_lists(doc, "generators");
  std::vector<std::string> variables;
  if (doc.contains("variables")) {
    variables = string_list(doc, "variables");
  } else {
    for (const auto& g : gens) variables.insert(variables.end(), g.begin(), g.end());
    std::sort(variables.begin(), variables.end());
    variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  }
  std::stable_sort(variables.begin(), variables.end(), [](const std::string& a, const std::string& b) {
    return natural_less(a, b);
  });
  LabelTable table(std::move(variables));
  std::vector<VertexSet> supports;
  for (const auto& g : gens) supports.push_back(table.set_of(g));
  return MonomialIdeal(std::move(table), std::move(supports));
}

Json depth_report_to_json(const DepthReport& report) {
  Json doc;
  doc["n"] = report.n;
  doc["field_char"] = report.field_char;
  doc["height"] = report.height;
  doc["krull_dim"] = report.krull_dim;
  doc["proj_dim"] = report.proj_dim;
  doc["depth"] = report.depth;
  doc["is_cm"] = report.is_cm;
  doc["is_unmixed"] = report.is_unmixed;
  doc["reisner_cm"] = report.reisner_cm ? Json(*report.reisner_cm) : Json(nullptr);
  Json covers = Json::array();
  for (VertexSet c : report.min_covers) covers.push_back(names(report.variables, c));
  doc["min_covers"] = std::move(covers);
  doc["restrictions"] = report.restrictions;
  if (!report.betti.empty()) {
    Json betti = Json::array();
    for (const auto& e : report.betti) {
      betti.push_back({{"i", e.index}, {"sigma", names(report.variables, e.multidegree)}, {"rank", e.rank}});
    }
    doc["betti"] = std::move(betti);
  }
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace sqfree
