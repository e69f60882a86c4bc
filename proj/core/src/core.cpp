#include "acm/core.hpp"

#include <cmath>

#include "acm/errors.hpp"

namespace acm {

double max_abs_diff(const Matrix3& a, const Matrix3& b) {
  double m = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

CubicPoly char_poly_3(const Matrix3& m) {
  const Complex tr = m.trace();
  const Complex minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) +
                         (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
                         (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  const Complex det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                      m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                      m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return CubicPoly{-tr, minors, -det};
}

MatrixN frobenius_companion(const PolyN& poly) {
  const int n = poly.degree();
  if (n < 1) throw DomainError("frobenius_companion: degree must be >= 1");
  MatrixN m(n);
  for (int r = 1; r < n; ++r) m(r, r - 1) = Complex{1.0, 0.0};
  // Last column carries (-cn, ..., -c1) top to bottom.
  for (int r = 0; r < n; ++r) m(r, n - 1) = -poly.coeffs[static_cast<size_t>(n - 1 - r)];
  return m;
}

CanonicalCubic depress(const CubicPoly& poly) {
  const Complex c1 = poly.c1;
  CanonicalCubic canon;
  canon.p = -c1 * c1 / 3.0 + poly.c2;
  canon.q = 2.0 * c1 * c1 * c1 / 27.0 - c1 * poly.c2 / 3.0 + poly.c3;
  canon.shift = c1 / 3.0;
  return canon;
}

CubicPoly undepress(const CanonicalCubic& canon) {
  const Complex s = canon.shift;
  CubicPoly poly;
  poly.c1 = 3.0 * s;
  poly.c2 = canon.p + 3.0 * s * s;
  poly.c3 = canon.q + canon.p * s + s * s * s;
  return poly;
}

bool is_hermitian(const Matrix3& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("is_hermitian: tol must be > 0");
  return max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const Matrix3& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("is_unitary: tol must be > 0");
  return max_abs_diff(m * m.adjoint(), Matrix3::identity()) <= tol;
}

}  // namespace acm
