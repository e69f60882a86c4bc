#include "acm/builder.hpp"

#include <cmath>

#include "acm/branch.hpp"
#include "acm/core.hpp"
#include "acm/errors.hpp"

namespace acm {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr Complex kI{0.0, 1.0};
}  // namespace

Complex discriminant(Complex p, Complex q) {
  return p * p * p / 27.0 + q * q / 4.0;
}

double p_zero_threshold(Complex q) {
  return 1e-12 * std::max(1.0, std::cbrt(std::norm(q)));
}

Complex chi_of(Complex p, Complex q) {
  if (std::abs(p) <= p_zero_threshold(q))
    throw DomainError("p_zero: use acm_p_zero");
  const double theta_p = principal_arg(p);
  const double rho3 = std::sqrt(std::pow(std::abs(p), 3) / 27.0);
  return -kI * q * complex_exp(-1.5 * theta_p * kI) / (2.0 * rho3);
}

AcmParams acm_params(Complex p, Complex q) {
  AcmParams params;
  params.chi = chi_of(p, q);
  params.theta_p = principal_arg(p);
  params.phi_p = params.theta_p + kPi;
  params.rho = std::sqrt(std::abs(p) / 3.0);
  params.phi13 = arccos_principal(params.chi).value();
  return params;
}

Matrix3 acm_p_zero(Complex q) {
  Matrix3 m;
  if (q == Complex{}) return m;  // eta^3 exactly
  const double mag = std::cbrt(std::abs(q) / std::sqrt(3.0));
  const Complex scale =
      mag * complex_exp(kI * (principal_arg(-kI * q) / 3.0));
  const Complex w = complex_exp(kI * (4.0 * kPi / 3.0));  // e^{4i*pi/3}
  m(0, 1) = scale;
  m(0, 2) = scale;
  m(1, 0) = -std::conj(w) * scale;
  m(1, 2) = -scale;
  m(2, 0) = -w * scale;
  m(2, 1) = scale;
  return m;
}

Matrix3 acm_canonical(Complex p, Complex q) {
  if (std::abs(p) <= p_zero_threshold(q)) return acm_p_zero(q);
  const AcmParams params = acm_params(p, q);
  const Complex s =
      params.rho * complex_exp(kI * (params.phi_p / 2.0));
  const ArccosPhases phases = exp_i_arccos(params.chi);
  Matrix3 m;
  m(0, 1) = s;
  m(0, 2) = s * phases.plus;
  m(1, 0) = s;
  m(1, 2) = s;
  m(2, 0) = s * phases.minus;
  m(2, 1) = s;
  return m;
}

Matrix3 acm_general(const CubicPoly& poly) {
  const CanonicalCubic canon = depress(poly);
  Matrix3 m = acm_canonical(canon.p, canon.q);
  for (int d = 0; d < 3; ++d) m(d, d) -= canon.shift;
  return m;
}

double hermitian_phi13(double p, double q) {
  // chi is real with |chi| <= 1 exactly when the discriminant is <= 0.
  const double chi = 1.5 * std::sqrt(3.0) * q / std::pow(std::abs(p), 1.5);
  return std::acos(std::clamp(chi, -1.0, 1.0));
}

Matrix3 acm_hermitian(double p, double q) {
  const double delta = p * p * p / 27.0 + q * q / 4.0;
  const double slack = 1e-12 * (1.0 + std::abs(p * p * p) + q * q);
  // For p > 0 both discriminant terms are nonnegative, so delta is
  // genuinely positive even inside the zero band.
  if (delta > slack || p > p_zero_threshold(Complex{q, 0.0}))
    throw DomainError("not Hermitian-admissible");
  if (std::abs(p) <= p_zero_threshold(Complex{q, 0.0})) {
    // delta <= 0 with p ~ 0 forces q ~ 0: the zero matrix carries eta^3.
    return Matrix3::zero();
  }
  const double phi = hermitian_phi13(p, q);
  const double s = -std::sqrt(std::abs(p) / 3.0);
  Matrix3 m;
  m(0, 1) = s;
  m(0, 2) = s * Complex{std::cos(phi), std::sin(phi)};
  m(1, 0) = s;
  m(1, 2) = s;
  m(2, 0) = s * Complex{std::cos(phi), -std::sin(phi)};
  m(2, 1) = s;
  return m;
}

}  // namespace acm
