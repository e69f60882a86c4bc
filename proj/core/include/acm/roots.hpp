#ifndef ACM_ROOTS_HPP
#define ACM_ROOTS_HPP

#include <array>
#include <string_view>
#include <vector>

#include "acm/types.hpp"

namespace acm {

enum class RootRegime {
  complex_general,
  p_zero,
  real_delta_nonpos,
  real_delta_pos_pgt0,
  real_delta_pos_plt0,
};

std::string_view to_string(RootRegime regime);

struct RootTriple {
  std::array<Complex, 3> roots{};
  RootRegime regime{RootRegime::complex_general};
};

/// Roots of eta^3 + p*eta + q without Cardano radicals: the leading root is
/// 2*cos(Arccos(chi)/3), the companions follow from the half-angle form,
/// all rescaled by sqrt(|p|/3)*exp(i*phi_p/2). For |p| below threshold the
/// three cube roots of -q are returned instead.
RootTriple roots_canonical(Complex p, Complex q);

/// Roots of a general monic cubic: canonical roots minus c1/3.
RootTriple roots_general(const CubicPoly& poly);

/// Real-coefficient solver with discriminant dispatch: the trigonometric
/// form for delta <= 0 (three real roots), the radical X/Y form for
/// delta > 0 with p > 0, and the C form for delta > 0 with p < 0. Ordering
/// is fixed per regime: the real root is third for p > 0 and first for
/// p < 0. Throws DomainError on complex coefficients.
RootTriple roots_real(const CubicPoly& poly);

/// Intermediates of the delta > 0 radical forms, exposed for verification.
/// For p > 0: u, the cube-root pair (a, b) with a*b = 1, x = a + b and
/// y = (b - a)/sqrt(3). For p < 0: chi, c = cbrt(chi + sqrt(chi^2-1)) +
/// cbrt(chi - sqrt(chi^2-1)) with odd real cube roots, and nu = ln of the
/// dominant branch so that |c| = 2*cosh(nu/3).
struct RadicalIntermediates {
  bool positive_p{};
  double u{};
  double a{};
  double b{};
  double x{};
  double y{};
  double chi{};
  double c{};
  double nu{};
};

/// Requires real (p, q) with delta > 0 and |p| above threshold.
RadicalIntermediates radical_intermediates(double p, double q);

/// A real root of a genuinely complex cubic, flagged "double" when the
/// imaginary-part quadratic degenerates (delta = y2^2 - 4*y1*y3 = 0).
struct RealRootCandidate {
  double value{};
  bool double_root{};
};

/// Real roots of a cubic with at least one nonreal coefficient. Writing
/// c_j = x_j + i*y_j, a real root must satisfy y1*r^2 + y2*r + y3 = 0 and
/// r^3 + x1*r^2 + x2*r = -x3; candidates from the first equation are
/// accepted iff the full polynomial residual vanishes. Throws
/// DomainError("use roots_real") for all-real coefficients.
std::vector<RealRootCandidate> real_roots_of_complex_cubic(const CubicPoly& poly);

/// Independent brute-force oracle: simultaneous (Weierstrass/Durand-Kerner)
/// iteration from the standard geometric seed, perturbed restart on stall,
/// hard failure after the iteration cap. Residual target 1e-12 * scale per
/// root.
std::vector<Complex> oracle_roots(const PolyN& poly);

enum class CubicClass {
  three_distinct_real,
  real_with_double,
  one_real_two_conjugate,
};

std::string_view to_string(CubicClass cls);

/// Root pattern of eta^3 + p*eta + q for real (p, q) from the sign of the
/// discriminant; |delta| <= 1e-12 * (1 + |p|^3 + q^2) counts as zero.
CubicClass classify(double p, double q);

/// Smallest over all 3! pairings of the largest pairwise distance; greedy
/// matching misbehaves near degenerate roots, exhaustive search is cheap.
double multiset_distance(const std::array<Complex, 3>& a,
                         const std::array<Complex, 3>& b);
double multiset_distance(const std::array<Complex, 3>& a,
                         const std::vector<Complex>& b);
double multiset_distance(const std::array<Complex, 3>& a,
                         std::initializer_list<Complex> b);

}  // namespace acm

#endif  // ACM_ROOTS_HPP
