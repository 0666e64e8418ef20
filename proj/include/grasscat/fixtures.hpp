#pragma once

#include <string>

namespace grasscat {

// Golden data compiled into the library from fixtures/*.json.
const std::string& tube_fixture_json();
const std::string& census_fixture_json();

}  // namespace grasscat
