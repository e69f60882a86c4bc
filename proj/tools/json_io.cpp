#include "json_io.hpp"

#include <stdexcept>

namespace acm {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CubicPoly& poly) {
  return Json{{"c1", to_json(poly.c1)},
              {"c2", to_json(poly.c2)},
              {"c3", to_json(poly.c3)}};
}

Json to_json(const CanonicalCubic& canon) {
  return Json{{"p", to_json(canon.p)},
              {"q", to_json(canon.q)},
              {"shift", to_json(canon.shift)}};
}

Json to_json(const Matrix3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const UnitaryParams& params) {
  return Json{{"r2", params.r2}, {"theta", params.theta}, {"eps", params.eps}};
}

Json to_json(const DensityReport& report) {
  Json eigs = Json::array();
  for (const Complex& e : report.eigenvalues) eigs.push_back(to_json(e));
  return Json{{"hermitian", report.hermitian},
              {"unit_trace", report.unit_trace},
              {"positive_semidefinite", report.positive_semidefinite},
              {"eigenvalues", eigs},
              {"hermiticity_defect", report.hermiticity_defect},
              {"trace_defect", report.trace_defect},
              {"min_eigenvalue", report.min_eigenvalue},
              {"pass", report.all_pass()}};
}

namespace {
[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument(field + ": " + what);
}
}  // namespace

Complex complex_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(field, "expected a two-element array [re, im]");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

double real_from_json(const Json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

CubicPoly cubic_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object with c1, c2, c3");
  CubicPoly poly;
  for (const char* key : {"c1", "c2", "c3"})
    if (!j.contains(key)) fail(field + "." + key, "missing");
  poly.c1 = complex_from_json(j["c1"], field + ".c1");
  poly.c2 = complex_from_json(j["c2"], field + ".c2");
  poly.c3 = complex_from_json(j["c3"], field + ".c3");
  return poly;
}

PolyN polyn_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of [re, im] pairs");
  PolyN poly;
  poly.coeffs.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    poly.coeffs.push_back(
        complex_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return poly;
}

UnitaryParams params_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object with r2, theta, eps");
  UnitaryParams params;
  for (const char* key : {"r2", "theta", "eps"})
    if (!j.contains(key)) fail(field + "." + key, "missing");
  params.r2 = real_from_json(j["r2"], field + ".r2");
  params.theta = real_from_json(j["theta"], field + ".theta");
  params.eps = real_from_json(j["eps"], field + ".eps");
  return params;
}

}  // namespace acm
