#pragma once

#include <string>

#include "gq/expr.hpp"

namespace gq {

/// JSON mirrors of the textual forms; schemas documented in the README.
std::string scalar_json(const GenScalar& x);
std::string quaternion_json(const GenQuaternion& x);
std::string report_json(const OracleReport& r);
std::string summary_json(const SuiteSummary& s);
std::string ideal_json(const FgIdeal& i);
std::string value_json(const Value& v);

}  // namespace gq
