#ifndef ACM_BUILDER_HPP
#define ACM_BUILDER_HPP

#include "acm/matrix3.hpp"
#include "acm/types.hpp"

namespace acm {

/// Discriminant p^3/27 + q^2/4 (nonpositive iff three real roots when
/// p, q are real).
Complex discriminant(Complex p, Complex q);

/// Below this |p| the canonical builder dispatches to the p = 0 matrix;
/// scale-aware so the arccos parameter stays well conditioned.
double p_zero_threshold(Complex q);

/// chi = -i*q*exp(-3i*Theta_p/2) / (2*sqrt(|p|^3/27)) with Theta_p = Arg(p).
/// Throws DomainError("p_zero: use acm_p_zero") when |p| is below the
/// threshold.
Complex chi_of(Complex p, Complex q);

/// Scalars entering the trial ACM of eta^3 + p*eta + q for p != 0.
struct AcmParams {
  double rho{};      // sqrt(|p|/3)
  double theta_p{};  // Arg(p)
  double phi_p{};    // Arg(p) + pi
  Complex chi{};
  Complex phi13{};   // Arccos(chi), principal branch
};

AcmParams acm_params(Complex p, Complex q);

/// Trial ACM of eta^3 + p*eta + q covering every regime: the phase-scaled
/// cyclic matrix for |p| above threshold, the dedicated p = 0 matrix below
/// it (zero matrix once q = 0 as well). Its characteristic polynomial is
/// (0, p, q).
Matrix3 acm_canonical(Complex p, Complex q);

/// The p = 0 ACM. The scalar prefactor phase must be exp(i*Arg(-i*q)/3):
/// the bracket matrix has determinant -i*sqrt(3) and vanishing principal
/// 2x2 minor sum, so the opposite phase exp(i*Arg(i*q)/3) would flip the
/// sign of the free term and break the eta^3 + q round trip.
Matrix3 acm_p_zero(Complex q);

/// ACM of a general monic cubic: acm_canonical of its canonical form minus
/// (c1/3) * I.
Matrix3 acm_general(const CubicPoly& poly);

/// Real arccos angle of the Hermitian ACM for real (p, q) with
/// discriminant <= 0. Clamps chi into [-1, 1] at the boundary.
double hermitian_phi13(double p, double q);

/// Hermitian ACM -sqrt(|p|/3) * [[0,1,e^{i*phi}],[1,0,1],[e^{-i*phi},1,0]]
/// for real (p, q) with discriminant <= 0. Throws
/// DomainError("not Hermitian-admissible") otherwise.
Matrix3 acm_hermitian(double p, double q);

}  // namespace acm

#endif  // ACM_BUILDER_HPP
