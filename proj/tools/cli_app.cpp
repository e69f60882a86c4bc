#include "cli_app.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace acm {

namespace {

double tol_or(const Json& req, double fallback) {
  if (!req.contains("tol")) return fallback;
  const double t = real_from_json(req["tol"], "tol");
  if (!(t > 0.0)) throw std::invalid_argument("tol: must be > 0");
  return t;
}

Json roots_json(const std::array<Complex, 3>& roots) {
  Json arr = Json::array();
  for (const Complex& r : roots) arr.push_back(to_json(r));
  return arr;
}

RunOutcome handle_solve(const Json& req, const ToleranceProfile&) {
  const CubicPoly poly = cubic_from_json(req.at("poly"), "poly");
  const RootTriple triple =
      poly.real_coefficients() ? roots_real(poly) : roots_general(poly);
  const CanonicalCubic canon = depress(poly);

  Json doc;
  doc["command"] = "solve";
  doc["regime"] = to_string(triple.regime);
  doc["roots"] = roots_json(triple.roots);
  Json residuals = Json::array();
  for (const Complex& r : triple.roots) residuals.push_back(std::abs(poly.eval(r)));
  doc["residuals"] = residuals;
  doc["canonical"] = to_json(canon);
  doc["tolerance"] = Json{
      {"p_zero_threshold", p_zero_threshold(canon.q)},
      {"delta_band", 1e-12 * (1.0 + std::abs(std::pow(std::abs(canon.p), 3)) +
                              std::norm(canon.q))}};
  if (req.value("compare_oracle", false)) {
    const std::vector<Complex> oracle = oracle_roots(to_poly_n(poly));
    doc["oracle_max_distance"] = multiset_distance(triple.roots, oracle);
  }
  return {doc, 0};
}

RunOutcome handle_depress(const Json& req, const ToleranceProfile&) {
  const CubicPoly poly = cubic_from_json(req.at("poly"), "poly");
  Json doc = to_json(depress(poly));
  doc["command"] = "depress";
  return {doc, 0};
}

RunOutcome handle_acm(const Json& req, const ToleranceProfile& profile) {
  const bool hermitian = req.value("hermitian", false);
  CubicPoly target;
  std::string regime = "general";
  Matrix3 m;

  if (req.contains("poly")) {
    target = cubic_from_json(req["poly"], "poly");
    if (hermitian) {
      if (!target.real_coefficients())
        throw std::invalid_argument("poly: hermitian ACM needs real coefficients");
      const CanonicalCubic canon = depress(target);
      m = acm_hermitian(canon.p.real(), canon.q.real());
      for (int d = 0; d < 3; ++d) m(d, d) -= canon.shift;
      regime = "hermitian";
    } else {
      m = acm_general(target);
      const CanonicalCubic canon = depress(target);
      if (std::abs(canon.p) <= p_zero_threshold(canon.q)) regime = "p-zero";
    }
  } else if (req.contains("p") && req.contains("q")) {
    const Complex p = complex_from_json(req["p"], "p");
    const Complex q = complex_from_json(req["q"], "q");
    target = CubicPoly{Complex{}, p, q};
    if (hermitian) {
      if (p.imag() != 0.0 || q.imag() != 0.0)
        throw std::invalid_argument("p/q: hermitian ACM needs real p, q");
      m = acm_hermitian(p.real(), q.real());
      regime = "hermitian";
    } else {
      m = acm_canonical(p, q);
      regime = std::abs(p) <= p_zero_threshold(q) ? "p-zero" : "canonical";
    }
  } else {
    throw std::invalid_argument("acm: provide poly, or p and q");
  }

  const CubicPoly achieved = char_poly_3(m);
  const double residual =
      std::max({std::abs(achieved.c1 - target.c1), std::abs(achieved.c2 - target.c2),
                std::abs(achieved.c3 - target.c3)});
  Json doc;
  doc["command"] = "acm";
  doc["regime"] = regime;
  doc["matrix"] = to_json(m);
  doc["char_poly"] = to_json(achieved);
  doc["char_poly_residual"] = residual;
  doc["hermitian"] = is_hermitian(m, profile.hermitian);
  return {doc, 0};
}

RunOutcome handle_density(const Json& req, const ToleranceProfile& profile) {
  const double a2 = real_from_json(req.at("a2"), "a2");
  const double b2 = real_from_json(req.at("b2"), "b2");
  const double tol = tol_or(req, profile.density);
  const DensityPolySpec spec = DensityPolySpec::from_squares(a2, b2);
  const Matrix3 rho = density_acm(spec);  // DomainError when inadmissible
  Json doc;
  doc["command"] = "density";
  doc["matrix"] = to_json(rho);
  doc["char_poly"] = to_json(char_poly_3(rho));
  doc["report"] = to_json(validate_density(rho, tol));
  doc["tolerance"] = tol;
  return {doc, 0};
}

RunOutcome handle_unitary_build(const Json& req, const ToleranceProfile&) {
  UnitaryParams params;
  if (req.contains("params")) {
    params = params_from_json(req["params"], "params");
  } else if (req.contains("r2") && req.contains("theta") && req.contains("eps")) {
    params.r2 = real_from_json(req["r2"], "r2");
    params.theta = real_from_json(req["theta"], "theta");
    params.eps = real_from_json(req["eps"], "eps");
  } else {
    throw std::invalid_argument("unitary-build: provide params, or r2/theta/eps");
  }
  const UnitaryAcm acm = build_unitary_acm(params);
  Json doc;
  doc["command"] = "unitary-build";
  doc["matrix"] = to_json(acm.matrix);
  doc["char_poly"] = to_json(char_poly_3(acm.matrix));
  doc["unitary"] = acm.unitary;
  doc["params"] = to_json(UnitaryParams{params.r2, normalize_theta(params.theta),
                                        normalize_angle(params.eps)});
  // A build request answered by a non-unitary matrix is a domain verdict.
  return {doc, acm.unitary ? 0 : 2};
}

RunOutcome handle_unitary_check(const Json& req, const ToleranceProfile& profile) {
  const CubicPoly poly = cubic_from_json(req.at("poly"), "poly");
  const double tol = tol_or(req, profile.unit_modulus);
  const auto structure = unitary_structure(poly, profile.structure);
  const auto params = recognize_unitary(poly, tol);
  const RootTriple triple = roots_general(poly);

  Json doc;
  doc["command"] = "unitary-check";
  doc["unitary"] = params.has_value();
  doc["theorem3_structure"] = structure.has_value();
  if (structure)
    doc["structure"] = Json{{"r", structure->r},
                            {"theta1", structure->theta1},
                            {"theta", structure->theta}};
  if (params) doc["params"] = to_json(*params);
  doc["roots"] = roots_json(triple.roots);
  Json moduli = Json::array();
  for (const Complex& r : triple.roots) moduli.push_back(std::abs(r));
  doc["root_moduli"] = moduli;
  doc["tolerance"] = tol;
  return {doc, 0};
}

RunOutcome handle_classify(const Json& req, const ToleranceProfile&) {
  const double p = real_from_json(req.at("p"), "p");
  const double q = real_from_json(req.at("q"), "q");
  Json doc;
  doc["command"] = "classify";
  doc["class"] = to_string(classify(p, q));
  doc["delta"] = p * p * p / 27.0 + q * q / 4.0;
  doc["tolerance"] = 1e-12 * (1.0 + std::abs(p * p * p) + q * q);
  return {doc, 0};
}

RunOutcome handle_oracle(const Json& req, const ToleranceProfile&) {
  const PolyN poly = polyn_from_json(req.at("coeffs"), "coeffs");
  const std::vector<Complex> roots = oracle_roots(poly);
  Json doc;
  doc["command"] = "oracle";
  Json arr = Json::array();
  Json residuals = Json::array();
  for (const Complex& r : roots) {
    arr.push_back(to_json(r));
    residuals.push_back(std::abs(poly.eval(r)));
  }
  doc["roots"] = arr;
  doc["residuals"] = residuals;
  doc["tolerance"] = 1e-12;  // residual target, scaled per root
  return {doc, 0};
}

}  // namespace

ToleranceProfile ToleranceProfile::from_environment() {
  ToleranceProfile profile;
  const char* path = std::getenv("ACM_TOLERANCE_PROFILE");
  if (path == nullptr || *path == '\0') return profile;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string("ACM_TOLERANCE_PROFILE: cannot open ") + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("ACM_TOLERANCE_PROFILE: ") + e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("ACM_TOLERANCE_PROFILE: expected a JSON object");
  if (j.contains("unit_modulus"))
    profile.unit_modulus = real_from_json(j["unit_modulus"], "unit_modulus");
  if (j.contains("structure"))
    profile.structure = real_from_json(j["structure"], "structure");
  if (j.contains("density"))
    profile.density = real_from_json(j["density"], "density");
  if (j.contains("hermitian"))
    profile.hermitian = real_from_json(j["hermitian"], "hermitian");
  return profile;
}

RunOutcome run_request(const Json& request, const ToleranceProfile& profile) {
  if (!request.is_object() || !request.contains("command") ||
      !request["command"].is_string())
    throw std::invalid_argument("command: missing or not a string");
  const std::string command = request["command"].get<std::string>();
  try {
    if (command == "solve") return handle_solve(request, profile);
    if (command == "depress") return handle_depress(request, profile);
    if (command == "acm") return handle_acm(request, profile);
    if (command == "density") return handle_density(request, profile);
    if (command == "unitary-build") return handle_unitary_build(request, profile);
    if (command == "unitary-check") return handle_unitary_check(request, profile);
    if (command == "classify") return handle_classify(request, profile);
    if (command == "oracle") return handle_oracle(request, profile);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("request: ") + e.what());
  }
  throw std::invalid_argument("command: unknown command '" + command + "'");
}

namespace {
void render_line(std::ostringstream& out, const std::string& key, const Json& value,
                 int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (value.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) render_line(out, k, v, indent + 2);
  } else {
    out << pad << key << ": " << value.dump() << "\n";
  }
}
}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  for (const auto& [key, value] : doc.items()) render_line(out, key, value, 0);
  return out.str();
}

}  // namespace acm
