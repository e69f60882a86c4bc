#include "acm/branch.hpp"

#include <cmath>

#include "acm/errors.hpp"

namespace acm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double principal_arg(Complex z) {
  if (z.real() == 0.0 && z.imag() == 0.0)
    throw DomainError("argument of zero undefined");
  double a = std::atan2(z.imag(), z.real());
  // atan2 yields -pi on the (x < 0, y = -0) edge; the principal interval
  // (-pi, pi] keeps +pi for the whole negative real axis.
  if (a == -kPi) a = kPi;
  if (a == 0.0) a = 0.0;  // fold -0.0
  return a;
}

Complex principal_sqrt(Complex z) {
  if (z.imag() == 0.0) {
    // Keep the real and negative-real axes exact: the cut maps to +i.
    if (z.real() >= 0.0) return Complex{std::sqrt(z.real()), 0.0};
    return Complex{0.0, std::sqrt(-z.real())};
  }
  return std::sqrt(z);  // principal branch off the axis
}

Complex principal_cbrt(Complex z) {
  if (z.imag() == 0.0 && z.real() >= 0.0)
    return Complex{std::cbrt(z.real()), 0.0};
  const double m = std::cbrt(std::abs(z));
  const double a = principal_arg(z) / 3.0;
  return Complex{m * std::cos(a), m * std::sin(a)};
}

ArccosPhases exp_i_arccos(Complex chi) {
  // exp(+i*Arccos(chi)) = chi + i*sqrt(1 - chi^2); the two sign choices of
  // the radical multiply to exactly 1, so whichever addition cancels is
  // recovered as the reciprocal of the other.
  const Complex radical = Complex{0.0, 1.0} * principal_sqrt(1.0 - chi * chi);
  const Complex plus = chi + radical;
  const Complex minus = chi - radical;
  ArccosPhases out;
  if (std::abs(plus) >= std::abs(minus)) {
    out.plus = plus;
    out.minus = 1.0 / plus;
  } else {
    out.minus = minus;
    out.plus = 1.0 / minus;
  }
  return out;
}

ArccosPrincipal arccos_principal(Complex chi) {
  const Complex w = exp_i_arccos(chi).plus;
  // Arccos(chi) = -i Ln(w) = Arg(w) - i*ln|w|.
  ArccosPrincipal out;
  out.re = principal_arg(w);
  out.im = -std::log(std::abs(w));
  if (out.im == -0.0) out.im = 0.0;
  return out;
}

Complex complex_cos(Complex z) { return std::cos(z); }

Complex complex_exp(Complex z) { return std::exp(z); }

}  // namespace acm
