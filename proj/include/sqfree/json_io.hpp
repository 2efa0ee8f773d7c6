#pragma once

#include <string>

#include <json.hpp>

#include "sqfree/complex.hpp"
#include "sqfree/depth.hpp"
#include "sqfree/ideal.hpp"

namespace sqfree {

using Json = nlohmann::ordered_json;

/// {"vertices": [...], "facets": [[...], ...]}. "vertices" is optional on input.
Json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& doc);

/// {"variables": [...], "generators": [[...], ...]}. [[]] is the unit ideal.
Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& doc);

Json depth_report_to_json(const DepthReport& report);

/// Throws InvalidArgument when the file is missing or not JSON.
Json read_json_file(const std::string& path);

}  // namespace sqfree
