#ifndef ACM_BRANCH_HPP
#define ACM_BRANCH_HPP

#include "acm/types.hpp"

namespace acm {

/// Principal argument in (-pi, pi]. The negative real axis maps to +pi.
/// Throws DomainError for z = 0 ("argument of zero undefined").
double principal_arg(Complex z);

/// Principal square root |z|^(1/2) * exp(i*Arg(z)/2). Re >= 0, with the
/// negative real axis sent to the +i side.
Complex principal_sqrt(Complex z);

/// Principal cube root |z|^(1/3) * exp(i*Arg(z)/3). Real nonnegative input
/// yields the real root; negative reals land on the upper branch.
Complex principal_cbrt(Complex z);

/// Principal inverse cosine, split into its real part (in (-pi, pi]) and
/// imaginary part. For real chi in [-1, 1] the imaginary part is exactly
/// zero; for real chi with |chi| >= 1 the real part is exactly 0 or pi.
struct ArccosPrincipal {
  double re{};
  double im{};

  Complex value() const { return Complex{re, im}; }
};

/// Evaluates Arccos(chi) = -i Ln(chi + i*sqrt(1 - chi^2)) on the principal
/// branch, formulated through 1 - chi^2 (not chi^2 - 1).
ArccosPrincipal arccos_principal(Complex chi);

/// The two phase factors exp(+i*Arccos(chi)) and exp(-i*Arccos(chi)),
/// computed from the closed form chi + i*sqrt(1 - chi^2) and its exact
/// reciprocal. They are mutual inverses, not conjugates, once Arccos(chi)
/// leaves the real axis.
struct ArccosPhases {
  Complex plus{};
  Complex minus{};
};

ArccosPhases exp_i_arccos(Complex chi);

Complex complex_cos(Complex z);
Complex complex_exp(Complex z);

}  // namespace acm

#endif  // ACM_BRANCH_HPP
