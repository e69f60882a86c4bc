#include "acm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "acm/branch.hpp"
#include "acm/builder.hpp"
#include "acm/core.hpp"
#include "acm/errors.hpp"

namespace acm {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr Complex kI{0.0, 1.0};

double delta_band(double p, double q) {
  return 1e-12 * (1.0 + std::abs(p * p * p) + q * q);
}
}  // namespace

std::string_view to_string(RootRegime regime) {
  switch (regime) {
    case RootRegime::complex_general: return "complex-general";
    case RootRegime::p_zero: return "p-zero";
    case RootRegime::real_delta_nonpos: return "real-delta-nonpos";
    case RootRegime::real_delta_pos_pgt0: return "real-delta-pos-pgt0";
    case RootRegime::real_delta_pos_plt0: return "real-delta-pos-plt0";
  }
  return "unknown";
}

std::string_view to_string(CubicClass cls) {
  switch (cls) {
    case CubicClass::three_distinct_real: return "three-distinct-real";
    case CubicClass::real_with_double: return "real-with-double";
    case CubicClass::one_real_two_conjugate: return "one-real-two-conjugate";
  }
  return "unknown";
}

RootTriple roots_canonical(Complex p, Complex q) {
  RootTriple out;
  if (std::abs(p) <= p_zero_threshold(q)) {
    out.regime = RootRegime::p_zero;
    const Complex t = principal_cbrt(-q);
    const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
    out.roots = {t, t * w, t * std::conj(w)};
    return out;
  }
  out.regime = RootRegime::complex_general;
  const AcmParams params = acm_params(p, q);
  const Complex s = params.rho * complex_exp(kI * (params.phi_p / 2.0));
  const Complex third = params.phi13 / 3.0;
  const Complex eta1 = 2.0 * std::cos(third);
  const Complex sin_third = std::sin(third);
  const Complex psi = principal_sqrt(sin_third * sin_third);
  const Complex eta2 = -0.5 * eta1 - std::sqrt(3.0) * psi;
  const Complex eta3 = -0.5 * eta1 + std::sqrt(3.0) * psi;
  out.roots = {s * eta1, s * eta2, s * eta3};
  return out;
}

RootTriple roots_general(const CubicPoly& poly) {
  const CanonicalCubic canon = depress(poly);
  RootTriple out = roots_canonical(canon.p, canon.q);
  for (Complex& r : out.roots) r -= canon.shift;
  return out;
}

RootTriple roots_real(const CubicPoly& poly) {
  if (!poly.real_coefficients())
    throw DomainError("roots_real: coefficients must be real; use roots_general");
  const CanonicalCubic canon = depress(poly);
  const double p = canon.p.real();
  const double q = canon.q.real();
  const double shift = canon.shift.real();

  RootTriple out;
  if (std::abs(p) <= p_zero_threshold(canon.q)) {
    out.regime = RootRegime::p_zero;
    const double r0 = std::cbrt(-q);  // real anchor; companions rotate by 2pi/3
    const Complex w{-0.5, 0.5 * std::sqrt(3.0)};
    out.roots = {Complex{r0 - shift, 0.0}, r0 * w - shift, r0 * std::conj(w) - shift};
    return out;
  }

  if (p < 0.0) {
    const double delta = p * p * p / 27.0 + q * q / 4.0;
    if (delta <= delta_band(p, q)) {
      // Three real roots through the real arccos angle; boundary inputs
      // (double roots) take this branch.
      out.regime = RootRegime::real_delta_nonpos;
      const double phi = hermitian_phi13(p, q);
      const double amp = 2.0 * std::sqrt(-p / 3.0);
      for (int k = 1; k <= 3; ++k)
        out.roots[static_cast<size_t>(k - 1)] =
            Complex{amp * std::cos((phi + (2 * k + 1) * kPi) / 3.0) - shift, 0.0};
      return out;
    }
    out.regime = RootRegime::real_delta_pos_plt0;
    const double chi = 1.5 * std::sqrt(3.0) * q / std::pow(-p, 1.5);
    const double g = std::abs(chi) + std::sqrt(chi * chi - 1.0);
    const double cr = std::cbrt(g);
    const double c = std::copysign(cr + 1.0 / cr, chi);
    const double s = std::sqrt(-p / 3.0);
    const double wing = std::sqrt(std::max(0.0, 3.0 * (0.25 * c * c - 1.0)));
    out.roots = {Complex{-s * c - shift, 0.0},
                 Complex{0.5 * s * c - shift, s * wing},
                 Complex{0.5 * s * c - shift, -s * wing}};
    return out;
  }

  // p > 0 keeps the discriminant strictly positive: one real root.
  out.regime = RootRegime::real_delta_pos_pgt0;
  const double u = 1.5 * (q / p) * std::sqrt(3.0 / p);
  const double su = std::sqrt(1.0 + u * u);
  double a, b;
  if (u >= 0.0) {
    b = std::cbrt(su + u);
    a = 1.0 / b;
  } else {
    a = std::cbrt(su - u);
    b = 1.0 / a;
  }
  const double x = a + b;
  const double y = (b - a) / std::sqrt(3.0);
  const double sp = std::sqrt(p);
  out.roots = {Complex{0.5 * sp * y - shift, 0.5 * sp * x},
               Complex{0.5 * sp * y - shift, -0.5 * sp * x},
               Complex{-sp * y - shift, 0.0}};
  return out;
}

RadicalIntermediates radical_intermediates(double p, double q) {
  if (std::abs(p) <= p_zero_threshold(Complex{q, 0.0}))
    throw DomainError("radical_intermediates: p below threshold");
  const double delta = p * p * p / 27.0 + q * q / 4.0;
  if (delta <= delta_band(p, q))
    throw DomainError("radical_intermediates: discriminant not positive");
  RadicalIntermediates mid;
  if (p > 0.0) {
    mid.positive_p = true;
    mid.u = 1.5 * (q / p) * std::sqrt(3.0 / p);
    const double su = std::sqrt(1.0 + mid.u * mid.u);
    if (mid.u >= 0.0) {
      mid.b = std::cbrt(su + mid.u);
      mid.a = 1.0 / mid.b;
    } else {
      mid.a = std::cbrt(su - mid.u);
      mid.b = 1.0 / mid.a;
    }
    mid.x = mid.a + mid.b;
    mid.y = (mid.b - mid.a) / std::sqrt(3.0);
  } else {
    mid.positive_p = false;
    mid.chi = 1.5 * std::sqrt(3.0) * q / std::pow(-p, 1.5);
    const double g = std::abs(mid.chi) + std::sqrt(mid.chi * mid.chi - 1.0);
    mid.nu = std::log(g);
    const double cr = std::cbrt(g);
    mid.c = std::copysign(cr + 1.0 / cr, mid.chi);
  }
  return mid;
}

std::vector<RealRootCandidate> real_roots_of_complex_cubic(const CubicPoly& poly) {
  const double y1 = poly.c1.imag();
  const double y2 = poly.c2.imag();
  const double y3 = poly.c3.imag();
  if (y1 == 0.0 && y2 == 0.0 && y3 == 0.0)
    throw DomainError("use roots_real");

  std::vector<RealRootCandidate> accepted;
  const auto try_accept = [&](double r, bool dbl) {
    if (std::abs(poly.eval(Complex{r, 0.0})) <= 1e-9 * poly.eval_scale(Complex{r, 0.0}))
      accepted.push_back({r, dbl});
  };

  if (y1 != 0.0) {
    const double delta = y2 * y2 - 4.0 * y1 * y3;
    const double band = 1e-12 * (y2 * y2 + 4.0 * std::abs(y1 * y3));
    if (delta < -band) return accepted;  // imaginary part never vanishes
    if (std::abs(delta) <= band) {
      try_accept(-y2 / (2.0 * y1), true);
    } else {
      const double sd = std::sqrt(delta);
      try_accept((-y2 - sd) / (2.0 * y1), false);
      try_accept((-y2 + sd) / (2.0 * y1), false);
    }
  } else if (y2 != 0.0) {
    try_accept(-y3 / y2, false);
  }
  // y1 = y2 = 0 with y3 != 0: the imaginary part is constant; no real root.

  std::sort(accepted.begin(), accepted.end(),
            [](const RealRootCandidate& a, const RealRootCandidate& b) {
              return a.value < b.value;
            });
  return accepted;
}

std::vector<Complex> oracle_roots(const PolyN& poly) {
  const int n = poly.degree();
  if (n < 1) throw DomainError("oracle_roots: degree must be >= 1");
  if (n == 1) return {-poly.coeffs[0]};

  std::vector<Complex> w(static_cast<size_t>(n));
  const auto reseed = [&](double jitter) {
    const Complex seed{0.4 + jitter, 0.9 - jitter};
    Complex acc{1.0, 0.0};
    for (auto& wi : w) {
      acc *= seed;
      wi = acc;
    }
  };
  reseed(0.0);

  const auto converged = [&]() {
    for (const Complex& wi : w)
      if (std::abs(poly.eval(wi)) > 1e-12 * poly.eval_scale(wi)) return false;
    return true;
  };

  constexpr int kMaxIter = 500;
  int stalled = 0;
  int restarts = 0;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    double max_step = 0.0;
    double max_mag = 0.0;
    for (size_t i = 0; i < w.size(); ++i) {
      Complex denom{1.0, 0.0};
      for (size_t j = 0; j < w.size(); ++j)
        if (j != i) denom *= w[i] - w[j];
      if (denom == Complex{}) {
        w[i] += Complex{1e-6, 1e-6};  // collided iterates; nudge apart
        continue;
      }
      const Complex step = poly.eval(w[i]) / denom;
      w[i] -= step;
      max_step = std::max(max_step, std::abs(step));
      max_mag = std::max(max_mag, std::abs(w[i]));
    }
    if (converged()) return w;
    if (max_step <= 1e-16 * (1.0 + max_mag)) {
      if (++stalled >= 3) {
        if (++restarts > 3)
          throw ConvergenceError("oracle_roots: stalled without meeting residual target");
        reseed(0.07 * restarts);
        stalled = 0;
      }
    } else {
      stalled = 0;
    }
  }
  throw ConvergenceError("oracle_roots: no convergence within 500 iterations");
}

CubicClass classify(double p, double q) {
  const double delta = p * p * p / 27.0 + q * q / 4.0;
  const double band = delta_band(p, q);
  if (delta < -band) return CubicClass::three_distinct_real;
  // For p > 0 the discriminant is a sum of nonnegative terms: genuinely
  // positive even inside the band.
  if (delta <= band && p <= 0.0) return CubicClass::real_with_double;
  return CubicClass::one_real_two_conjugate;
}

double multiset_distance(const std::array<Complex, 3>& a,
                         const std::array<Complex, 3>& b) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& perm : perms) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::abs(a[static_cast<size_t>(i)] -
                                       b[static_cast<size_t>(perm[i])]));
    best = std::min(best, worst);
  }
  return best;
}

double multiset_distance(const std::array<Complex, 3>& a,
                         const std::vector<Complex>& b) {
  if (b.size() != 3)
    throw DomainError("multiset_distance: expected exactly 3 roots");
  return multiset_distance(a, std::array<Complex, 3>{b[0], b[1], b[2]});
}

double multiset_distance(const std::array<Complex, 3>& a,
                         std::initializer_list<Complex> b) {
  if (b.size() != 3)
    throw DomainError("multiset_distance: expected exactly 3 roots");
  auto it = b.begin();
  const Complex b0 = *it++;
  const Complex b1 = *it++;
  return multiset_distance(a, std::array<Complex, 3>{b0, b1, *it});
}

}  // namespace acm
