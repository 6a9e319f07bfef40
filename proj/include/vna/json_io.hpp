// JSON wire formats: algebras as block arrays, elements and maps with
// row-major [re, im] coefficient pairs over the fixed basis.

#pragma once

#include "vna/duplicability.hpp"
#include "vna/report.hpp"

#include <json.hpp>

namespace vna {

using Json = nlohmann::ordered_json;

Json algebra_to_json(const Algebra& a);
Json element_to_json(const Element& x);
Json linmap_to_json(const LinMap& phi);
Json duplicator_to_json(const Duplicator& dup);
Json report_to_json(const Report& report);

Algebra algebra_from_json(const Json& j);
Element element_from_json(const Json& j);
LinMap linmap_from_json(const Json& j);
Duplicator duplicator_from_json(const Json& j);

}  // namespace vna
