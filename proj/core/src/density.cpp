#include "acm/density.hpp"

#include <cmath>
#include <limits>

#include "acm/builder.hpp"
#include "acm/core.hpp"
#include "acm/errors.hpp"
#include "acm/roots.hpp"

namespace acm {

DensityPolySpec DensityPolySpec::from_squares(double a2, double b2) {
  if (a2 < 0.0 || b2 < 0.0)
    throw DomainError("density spec: a2 and b2 must be >= 0");
  return DensityPolySpec{std::sqrt(a2), std::sqrt(b2)};
}

CubicPoly density_poly(const DensityPolySpec& spec) {
  return CubicPoly{Complex{-1.0, 0.0}, Complex{spec.a * spec.a, 0.0},
                   Complex{-spec.b * spec.b, 0.0}};
}

Admissibility is_admissible(const CubicPoly& poly, double tol) {
  if (!poly.real_coefficients())
    throw DomainError("is_admissible: coefficients must be real");
  if (std::abs(poly.c1.real() + 1.0) > tol)
    return {false, "c1 must equal -1 (unit trace)"};
  if (poly.c2.real() < -tol) return {false, "c2 must be >= 0"};
  if (poly.c3.real() > tol) return {false, "c3 must be <= 0"};
  const CanonicalCubic canon = depress(poly);
  const double p = canon.p.real();
  const double q = canon.q.real();
  const double bound = -1.5 * std::cbrt(2.0 * q * q);
  const double slack = std::max(tol, 1e-10) * (1.0 + std::cbrt(q * q));
  if (p > bound + slack)
    return {false, "p exceeds -(3/2)*cbrt(2*q^2): roots are not all real"};
  return {true, {}};
}

Matrix3 density_acm(const DensityPolySpec& spec) {
  const CubicPoly poly = density_poly(spec);
  const Admissibility adm = is_admissible(poly);
  if (!adm) throw DomainError("density spec not admissible: " + adm.reason);
  const CanonicalCubic canon = depress(poly);
  const double p = canon.p.real();
  const double q = canon.q.real();
  Matrix3 m;
  // Admissibility slack can let p graze zero from either side; anything at
  // or above -threshold degenerates to the triple-root matrix (1/3) * I.
  if (p < -p_zero_threshold(canon.q)) {
    // Hermitian canonical ACM; chi is clamped so admissible boundary specs
    // never bounce off the discriminant check.
    const double phi = hermitian_phi13(p, q);
    const double s = -std::sqrt(-p / 3.0);
    m(0, 1) = s;
    m(0, 2) = s * Complex{std::cos(phi), std::sin(phi)};
    m(1, 0) = s;
    m(1, 2) = s;
    m(2, 0) = s * Complex{std::cos(phi), -std::sin(phi)};
    m(2, 1) = s;
  }
  for (int d = 0; d < 3; ++d) m(d, d) += 1.0 / 3.0;  // -c1/3 with c1 = -1
  return m;
}

DensityReport validate_density(const Matrix3& m, double tol) {
  DensityReport rep;
  rep.hermiticity_defect = max_abs_diff(m, m.adjoint());
  rep.hermitian = rep.hermiticity_defect <= tol;
  rep.trace_defect = std::abs(m.trace() - Complex{1.0, 0.0});
  rep.unit_trace = rep.trace_defect <= tol;

  const RootTriple eig = roots_general(char_poly_3(m));
  rep.eigenvalues = eig.roots;
  double min_re = std::numeric_limits<double>::infinity();
  bool spectrum_real = true;
  for (const Complex& e : eig.roots) {
    min_re = std::min(min_re, e.real());
    if (std::abs(e.imag()) > tol * (1.0 + std::abs(e))) spectrum_real = false;
  }
  rep.min_eigenvalue = min_re;
  rep.positive_semidefinite = spectrum_real && min_re >= -tol;
  return rep;
}

}  // namespace acm
