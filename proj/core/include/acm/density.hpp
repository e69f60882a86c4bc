#ifndef ACM_DENSITY_HPP
#define ACM_DENSITY_HPP

#include <array>
#include <string>

#include "acm/matrix3.hpp"
#include "acm/types.hpp"

namespace acm {

/// Parameters of the qutrit density-matrix family x^3 - x^2 + a^2*x - b^2.
struct DensityPolySpec {
  double a{};
  double b{};

  /// Builds from the squared values the polynomial actually uses.
  /// Requires a2 >= 0 and b2 >= 0.
  static DensityPolySpec from_squares(double a2, double b2);
};

/// The monic cubic x^3 - x^2 + a^2*x - b^2.
CubicPoly density_poly(const DensityPolySpec& spec);

struct Admissibility {
  bool ok{};
  std::string reason;  // empty when ok

  explicit operator bool() const { return ok; }
};

/// A real cubic is the characteristic polynomial of some qutrit density
/// matrix iff c1 = -1 (unit trace), c2 >= 0, c3 <= 0 (alternating signs)
/// and its canonical form satisfies p <= -(3/2) * cbrt(2*q^2), i.e. the
/// discriminant is nonpositive. Boundary specs (double roots) are accepted
/// within a scale-aware slack. Throws DomainError on complex coefficients.
Admissibility is_admissible(const CubicPoly& poly, double tol = 1e-10);

/// Hermitian, trace-1, positive semi-definite ACM of the spec's polynomial:
/// the Hermitian canonical ACM plus (1/3) * I. Throws DomainError carrying
/// the violated condition when the spec is not admissible.
Matrix3 density_acm(const DensityPolySpec& spec);

struct DensityReport {
  bool hermitian{};
  bool unit_trace{};
  bool positive_semidefinite{};
  std::array<Complex, 3> eigenvalues{};
  double hermiticity_defect{};
  double trace_defect{};
  double min_eigenvalue{};

  bool all_pass() const { return hermitian && unit_trace && positive_semidefinite; }
};

/// Checks the three density-matrix properties; eigenvalues come from the
/// library's own root machinery applied to the characteristic polynomial.
DensityReport validate_density(const Matrix3& m, double tol = 1e-10);

}  // namespace acm

#endif  // ACM_DENSITY_HPP
