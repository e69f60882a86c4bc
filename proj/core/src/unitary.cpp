#include "acm/unitary.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "acm/branch.hpp"
#include "acm/errors.hpp"
#include "acm/roots.hpp"

namespace acm {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr Complex kI{0.0, 1.0};

CubicPoly unitary_poly_unchecked(double r2, double theta, double eps) {
  const Complex half = complex_exp(kI * (theta / 2.0));
  const Complex full = half * half;  // e^{i*theta}, half-angle consistent
  const Complex rot = complex_exp(-kI * eps);
  CubicPoly poly;
  poly.c1 = -(1.0 + r2 * half) * rot;
  poly.c2 = (1.0 + r2 * std::conj(half)) * full * rot * rot;
  poly.c3 = -full * rot * rot * rot;
  return poly;
}

double coeff_distance(const CubicPoly& a, const CubicPoly& b) {
  return std::max({std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2),
                   std::abs(a.c3 - b.c3)});
}
}  // namespace

double normalize_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r = kPi;
  if (r == 0.0) r = 0.0;  // fold -0.0
  return r;
}

double normalize_theta(double a) {
  double r = std::remainder(a, 4.0 * kPi);
  if (r <= -2.0 * kPi) r = 2.0 * kPi;
  if (r == 0.0) r = 0.0;
  return r;
}

double arg_via_arctan(double x, double y) {
  const double h = std::hypot(x, y);
  if (h == 0.0) throw DomainError("argument of zero undefined");
  if (y == 0.0) return x < 0.0 ? kPi : 0.0;
  // tan(Arg/2) = y/(x + h) = (h - x)/y; the second form dodges the
  // cancellation in x + h on the left half plane.
  if (x >= 0.0) return 2.0 * std::atan(y / (x + h));
  return 2.0 * std::atan((h - x) / y);
}

UnitaryQuadratic p2_unitary(double r2, double vartheta) {
  if (r2 < 0.0) throw DomainError("p2_unitary: r2 must be >= 0");
  const double th = normalize_angle(vartheta);
  UnitaryQuadratic out;
  out.c1 = -r2 * complex_exp(kI * th);
  out.c2 = complex_exp(kI * (2.0 * th));
  out.unitary = r2 <= 2.0;
  return out;
}

std::optional<UnitaryStructure> unitary_structure(const CubicPoly& poly,
                                                  double tol) {
  const double scale = 1.0 + poly.max_coeff_abs();
  if (std::abs(std::abs(poly.c3) - 1.0) > tol) return std::nullopt;
  if (std::abs(poly.c2 - std::conj(poly.c1) * poly.c3) > tol * scale)
    return std::nullopt;
  const double r = std::abs(poly.c1);
  if (r > 3.0 + tol) return std::nullopt;
  UnitaryStructure s;
  s.r = r;
  s.theta1 = r > tol ? principal_arg(-poly.c1) : 0.0;
  s.theta = principal_arg(-poly.c3);
  return s;
}

CubicPoly build_unitary_poly(const UnitaryParams& params) {
  if (params.r2 < 0.0 || params.r2 > 2.0)
    throw DomainError("build_unitary_poly: r2 must lie in [0, 2]");
  return unitary_poly_unchecked(params.r2, normalize_theta(params.theta),
                                normalize_angle(params.eps));
}

UnitaryAcm build_unitary_acm(const UnitaryParams& params) {
  if (params.r2 < 0.0)
    throw DomainError("build_unitary_acm: r2 must be >= 0");
  const double r2 = params.r2;
  const double theta = normalize_theta(params.theta);
  const double eps = normalize_angle(params.eps);
  double disc = 1.0 - 0.25 * r2 * r2;
  if (disc < 0.0 && disc > -1e-14) disc = 0.0;  // r2 grazing 2 stays unitary
  const Complex g = principal_sqrt(Complex{disc, 0.0});
  const Complex k = complex_exp(kI * (theta / 2.0 - eps));
  UnitaryAcm out;
  out.matrix(0, 0) = 0.5 * r2 * k;
  out.matrix(0, 1) = g * k;
  out.matrix(1, 0) = -g * k;
  out.matrix(1, 1) = 0.5 * r2 * k;
  out.matrix(2, 2) = complex_exp(-kI * eps);
  out.unitary = r2 <= 2.0;
  return out;
}

std::optional<UnitaryParams> recognize_unitary(const CubicPoly& poly,
                                               double tol) {
  const RootTriple rt = roots_general(poly);
  for (const Complex& r : rt.roots)
    if (std::abs(std::abs(r) - 1.0) > tol) return std::nullopt;

  std::array<Complex, 3> w = rt.roots;
  std::sort(w.begin(), w.end(), [](const Complex& a, const Complex& b) {
    const double aa = principal_arg(a);
    const double ab = principal_arg(b);
    if (aa != ab) return aa < ab;
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  const double accept = std::max(1e-8, 10.0 * tol) * (1.0 + poly.max_coeff_abs());
  const double loose = 1e-6 + 10.0 * tol;

  for (int i = 0; i < 3; ++i) {
    const double eps = normalize_angle(-principal_arg(w[static_cast<size_t>(i)]));
    const Complex rot = complex_exp(kI * eps);
    const Complex vb = w[static_cast<size_t>((i + 1) % 3)] * rot;
    const Complex vc = w[static_cast<size_t>((i + 2) % 3)] * rot;
    const double theta0 = principal_arg(vb * vc);
    // The half-angle phase fixes theta only modulo 4*pi; when the principal
    // representative forces r2 < 0, the 2*pi shift flips its sign.
    const std::array<double, 2> candidates{
        theta0, theta0 > 0.0 ? theta0 - 2.0 * kPi : theta0 + 2.0 * kPi};
    for (const double theta : candidates) {
      const Complex sum = (vb + vc) * complex_exp(-kI * (theta / 2.0));
      if (std::abs(sum.imag()) > loose) continue;
      if (sum.real() < -loose) continue;
      UnitaryParams params{std::clamp(sum.real(), 0.0, 2.0), theta, eps};
      const CubicPoly rebuilt =
          unitary_poly_unchecked(params.r2, params.theta, params.eps);
      if (coeff_distance(rebuilt, poly) <= accept) return params;
    }
  }
  return std::nullopt;
}

}  // namespace acm
