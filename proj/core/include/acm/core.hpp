#ifndef ACM_CORE_HPP
#define ACM_CORE_HPP

#include "acm/matrix3.hpp"
#include "acm/types.hpp"

namespace acm {

/// Coefficients of det(z*I - m) by direct cofactor expansion:
/// c1 = -tr(m), c2 = sum of principal 2x2 minors, c3 = -det(m).
CubicPoly char_poly_3(const Matrix3& m);

/// Classical sparse companion matrix of a monic degree-n polynomial:
/// ones on the subdiagonal, last column (-cn, ..., -c1) top to bottom.
/// Requires degree >= 1.
MatrixN frobenius_companion(const PolyN& poly);

/// Canonical form of a monic cubic under the translation eta = z + c1/3:
/// p = -c1^2/3 + c2, q = 2c1^3/27 - c1*c2/3 + c3.
CanonicalCubic depress(const CubicPoly& poly);

/// Inverse of depress; reconstructs the cubic from (p, q, shift).
CubicPoly undepress(const CanonicalCubic& canon);

/// True iff max entrywise |m - m^dagger| <= tol. Requires tol > 0.
bool is_hermitian(const Matrix3& m, double tol);

/// True iff max entrywise |m * m^dagger - I| <= tol. Requires tol > 0.
bool is_unitary(const Matrix3& m, double tol);

}  // namespace acm

#endif  // ACM_CORE_HPP
