#ifndef ACM_TOOLS_JSON_IO_HPP
#define ACM_TOOLS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "acm/acm.hpp"

namespace acm {

using Json = nlohmann::json;

// Complex scalars are two-element arrays [re, im]; matrices are row-major
// 3x3 nested arrays of them.

Json to_json(Complex z);
Json to_json(const CubicPoly& poly);
Json to_json(const CanonicalCubic& canon);
Json to_json(const Matrix3& m);
Json to_json(const UnitaryParams& params);
Json to_json(const DensityReport& report);

/// Parse helpers throw std::invalid_argument naming the offending field.
Complex complex_from_json(const Json& j, const std::string& field);
double real_from_json(const Json& j, const std::string& field);
CubicPoly cubic_from_json(const Json& j, const std::string& field = "poly");
PolyN polyn_from_json(const Json& j, const std::string& field = "coeffs");
UnitaryParams params_from_json(const Json& j, const std::string& field = "params");

}  // namespace acm

#endif  // ACM_TOOLS_JSON_IO_HPP
