#ifndef ACM_TYPES_HPP
#define ACM_TYPES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace acm {

using Complex = std::complex<double>;

/// Monic cubic z^3 + c1*z^2 + c2*z + c3 over the complex field.
struct CubicPoly {
  Complex c1{};
  Complex c2{};
  Complex c3{};

  Complex eval(Complex z) const { return ((z + c1) * z + c2) * z + c3; }

  /// Magnitude bound used to scale residual tolerances at z.
  double eval_scale(Complex z) const {
    const double az = std::abs(z);
    return 1.0 + ((az + std::abs(c1)) * az + std::abs(c2)) * az + std::abs(c3);
  }

  bool real_coefficients() const {
    return c1.imag() == 0.0 && c2.imag() == 0.0 && c3.imag() == 0.0;
  }

  double max_coeff_abs() const;
};

/// Canonical form eta^3 + p*eta + q of a cubic, with eta = z + shift
/// (shift = c1/3). Roots of the original cubic are eta_k - shift.
struct CanonicalCubic {
  Complex p{};
  Complex q{};
  Complex shift{};
};

/// Monic polynomial z^n + c1*z^{n-1} + ... + cn, stored highest to lowest
/// after the implicit leading 1.
struct PolyN {
  std::vector<Complex> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()); }

  Complex eval(Complex z) const {
    Complex acc{1.0, 0.0};
    for (const Complex& c : coeffs) acc = acc * z + c;
    return acc;
  }

  /// Same Horner recursion on absolute values; scales residual tolerances.
  double eval_scale(Complex z) const {
    const double az = std::abs(z);
    double acc = 1.0;
    for (const Complex& c : coeffs) acc = acc * az + std::abs(c);
    return acc + 1.0;
  }
};

inline double CubicPoly::max_coeff_abs() const {
  return std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
}

inline PolyN to_poly_n(const CubicPoly& p) {
  return PolyN{{p.c1, p.c2, p.c3}};
}

}  // namespace acm

#endif  // ACM_TYPES_HPP
