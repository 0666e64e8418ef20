#pragma once

#include <json.hpp>

#include "grasscat/homological.hpp"
#include "grasscat/tubes.hpp"

namespace grasscat {

using nlohmann::json;

json to_json(const Rim& r);
Rim rim_from_json(const json& j, int n);
json to_json(const RootVector& a);
RootVector root_from_json(const json& j, int k);
json to_json(const ExtDecomp& e);
ExtDecomp ext_from_json(const json& j);
json to_json(const TauOrbit& o);
json to_json(const ARSequence& s);
json to_json(const TubeCensus& t);
// Matrices as nested arrays of coefficient lists, lowest degree first.
json to_json(const DVRMatrix& m);
json to_json(const CMModuleRep& m);
CMModuleRep module_from_json(const json& j);

}  // namespace grasscat
