#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include <json.hpp>

namespace gbt::scenarios {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "3/8", "0.375", "1", "2.5e-1". Throws StructuralError otherwise.
Rational parse_rational(std::string_view text);

// JSON strings go through parse_rational; JSON numbers are read from their
// shortest round-trip decimal form, so 0.375 stays 3/8.
Rational rational_from_json(const nlohmann::json& j, const std::string& where);

double to_double(const Rational& r);
// "3/8", "5/4", "1"
std::string to_string(const Rational& r);

}  // namespace gbt::scenarios
