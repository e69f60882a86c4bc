#ifndef ACM_UNITARY_HPP
#define ACM_UNITARY_HPP

#include <optional>

#include "acm/matrix3.hpp"
#include "acm/types.hpp"

namespace acm {

/// Parameters of the cubic family z^3 - (1 + r2*e^{i*theta/2})e^{-i*eps}z^2
/// + (1 + r2*e^{-i*theta/2})e^{i*theta}e^{-2i*eps}z - e^{i(theta - 3*eps)},
/// which is exactly the set of characteristic polynomials of 3x3 unitary
/// matrices when r2 is in [0, 2].
///
/// eps lives in (-pi, pi]. theta enters only through e^{i*theta/2} and
/// e^{i*theta}, so its natural domain is (-2pi, 2pi]; values outside the
/// principal interval are required for polynomials whose roots form an
/// equilateral triangle on the unit circle (e.g. z^3 - e^{i*theta'}).
struct UnitaryParams {
  double r2{};
  double theta{};
  double eps{};
};

/// Normalizes into (-pi, pi].
double normalize_angle(double a);

/// Normalizes modulo 4*pi into (-2*pi, 2*pi]; the half-angle phase is
/// invariant under this reduction.
double normalize_theta(double a);

/// Principal argument through the half-angle arctangent identity
/// Arg(x + i*y) = 2*Arctan(y / (x + sqrt(x^2 + y^2))), with the negative
/// real axis mapped to +pi. Throws DomainError at the origin.
double arg_via_arctan(double x, double y);

/// Monic quadratic z^2 - r2*e^{i*vartheta}z + e^{2i*vartheta}, the
/// characteristic polynomial of a 2x2 unitary matrix iff r2 <= 2. Larger
/// r2 is permitted and flagged: the two roots then keep equal principal
/// arguments and reciprocal moduli.
struct UnitaryQuadratic {
  Complex c1{};  // coefficient of z
  Complex c2{};  // free term
  bool unitary{};
};

/// Requires r2 >= 0.
UnitaryQuadratic p2_unitary(double r2, double vartheta);

/// The necessary coefficient structure of the characteristic polynomial of
/// a 3x3 unitary matrix: z^3 - r*e^{i*theta1}z^2 + r*e^{i(theta-theta1)}z
/// - e^{i*theta} with r in [0, 3]. Tested branch-free through the exact
/// identities |c3| = 1 and c2 = conj(c1)*c3.
struct UnitaryStructure {
  double r{};
  double theta1{};
  double theta{};
};

std::optional<UnitaryStructure> unitary_structure(const CubicPoly& poly,
                                                  double tol = 1e-9);

/// The cubic of the UnitaryParams family. Angles are normalized; r2
/// outside [0, 2] throws DomainError (use build_unitary_acm for the larger
/// range, which it flags instead).
CubicPoly build_unitary_poly(const UnitaryParams& params);

struct UnitaryAcm {
  Matrix3 matrix;
  bool unitary{};
};

/// Block ACM of the params family: a 2x2 rotation-like block scaled by
/// e^{i(theta/2 - eps)} plus the one-dimensional block e^{-i*eps}. For
/// r2 > 2 the matrix is still produced (the off-diagonal square root turns
/// imaginary) and flagged non-unitary. Requires r2 >= 0.
UnitaryAcm build_unitary_acm(const UnitaryParams& params);

/// Decision procedure: if all three roots have modulus within tol of 1,
/// returns parameters that rebuild the polynomial (anchor root chosen by
/// smallest principal argument among those admitting r2 >= 0); otherwise
/// empty.
std::optional<UnitaryParams> recognize_unitary(const CubicPoly& poly,
                                               double tol = 1e-9);

}  // namespace acm

#endif  // ACM_UNITARY_HPP
