#include <doctest.h>

#include <cmath>

#include "acm/acm.hpp"
#include "test_util.hpp"

using namespace acm;
using test::Rng;

namespace {

Matrix3 reference_density() {
  // (1/(6*sqrt(3))) * [[2*sqrt(3), -1, -i], [-1, 2*sqrt(3), -1], [i, -1, 2*sqrt(3)]]
  const double s = 1.0 / (6.0 * std::sqrt(3.0));
  Matrix3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = Complex{1.0 / 3.0, 0.0};
  m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = Complex{-s, 0.0};
  m(0, 2) = Complex{0.0, -s};
  m(2, 0) = Complex{0.0, s};
  return m;
}

Matrix3 inverse_diag(const Matrix3& d) {
  return Matrix3::diagonal(1.0 / d(0, 0), 1.0 / d(1, 1), 1.0 / d(2, 2));
}

}  // namespace

TEST_SUITE_BEGIN("density");

TEST_CASE("density_poly") {
  SUBCASE("worked example coefficients") {
    const CubicPoly poly =
        density_poly(DensityPolySpec::from_squares(11.0 / 36.0, 1.0 / 36.0));
    CHECK(poly.c1 == Complex{-1.0, 0.0});
    CHECK(poly.c2.real() == doctest::Approx(11.0 / 36.0).epsilon(1e-15));
    CHECK(poly.c3.real() == doctest::Approx(-1.0 / 36.0).epsilon(1e-15));
  }
  SUBCASE("a = b = 0: x^3 - x^2 with roots {0, 0, 1}") {
    const CubicPoly poly = density_poly(DensityPolySpec{});
    CHECK(poly.c2 == Complex{});
    CHECK(poly.c3 == Complex{});
    const std::vector<Complex> roots = oracle_roots(to_poly_n(poly));
    CHECK(multiset_distance({Complex{}, Complex{}, Complex{1.0, 0.0}}, roots) <= 1e-5);
  }
  SUBCASE("a^2 = 1/4, b = 0: factor x*(x - 1/2)^2") {
    const CubicPoly poly = density_poly(DensityPolySpec::from_squares(0.25, 0.0));
    const std::vector<Complex> roots = oracle_roots(to_poly_n(poly));
    CHECK(multiset_distance({Complex{}, Complex{0.5, 0.0}, Complex{0.5, 0.0}}, roots) <=
          1e-5);
  }
  SUBCASE("negative squares are rejected") {
    CHECK_THROWS_AS(DensityPolySpec::from_squares(-0.1, 0.0), DomainError);
  }
}

TEST_CASE("is_admissible") {
  SUBCASE("worked example passes") {
    CHECK(is_admissible(density_poly(DensityPolySpec::from_squares(11.0 / 36.0, 1.0 / 36.0)),
                        1e-10));
  }
  SUBCASE("x^3 - x^2 + x - 1 fails: roots 1 and +-i") {
    const Admissibility adm = is_admissible(
        CubicPoly{Complex{-1.0, 0.0}, Complex{1.0, 0.0}, Complex{-1.0, 0.0}}, 1e-10);
    CHECK_FALSE(adm.ok);
    CHECK(adm.reason.find("roots") != std::string::npos);
  }
  SUBCASE("x^3 - 2x^2 + x fails the trace constraint") {
    const Admissibility adm = is_admissible(
        CubicPoly{Complex{-2.0, 0.0}, Complex{1.0, 0.0}, Complex{}}, 1e-10);
    CHECK_FALSE(adm.ok);
    CHECK(adm.reason.find("c1") != std::string::npos);
  }
  SUBCASE("a = 0, b != 0 is never admissible") {
    CHECK_FALSE(is_admissible(density_poly(DensityPolySpec::from_squares(0.0, 0.01)),
                              1e-10));
  }
  SUBCASE("sign constraints") {
    CHECK_FALSE(is_admissible(
        CubicPoly{Complex{-1.0, 0.0}, Complex{-0.2, 0.0}, Complex{}}, 1e-10));
    CHECK_FALSE(is_admissible(
        CubicPoly{Complex{-1.0, 0.0}, Complex{0.25, 0.0}, Complex{0.2, 0.0}}, 1e-10));
  }
  SUBCASE("complex coefficients are an error") {
    CHECK_THROWS_AS(is_admissible(CubicPoly{Complex{0.0, 1.0}, Complex{}, Complex{}}, 1e-10),
                    DomainError);
  }
}

TEST_CASE("density_acm worked matrices") {
  SUBCASE("reference matrix, entrywise") {
    const Matrix3 rho = density_acm(DensityPolySpec::from_squares(11.0 / 36.0, 1.0 / 36.0));
    CHECK(max_abs_diff(rho, reference_density()) <= 1e-14);
    const DensityReport rep = validate_density(rho, 1e-10);
    CHECK(rep.all_pass());
  }
  SUBCASE("a = b = 0: pure-state spectrum {0, 0, 1}") {
    const Matrix3 rho = density_acm(DensityPolySpec{});
    CHECK(is_hermitian(rho, 1e-12));
    CHECK(std::abs(rho.trace() - Complex{1.0, 0.0}) <= 1e-12);
    const RootTriple eig = roots_general(char_poly_3(rho));
    CHECK(multiset_distance(eig.roots, {Complex{}, Complex{}, Complex{1.0, 0.0}}) <= 1e-7);
  }
  SUBCASE("a^2 = 1/4, b = 0: spectrum {0, 1/2, 1/2}") {
    const Matrix3 rho = density_acm(DensityPolySpec::from_squares(0.25, 0.0));
    const RootTriple eig = roots_general(char_poly_3(rho));
    CHECK(multiset_distance(eig.roots,
                            {Complex{}, Complex{0.5, 0.0}, Complex{0.5, 0.0}}) <= 1e-7);
  }
  SUBCASE("inadmissible spec raises with the reason attached") {
    CHECK_THROWS_AS(density_acm(DensityPolySpec::from_squares(1.0, 0.0)), DomainError);
  }
}

TEST_CASE("density_acm contracts on random admissible specs") {
  Rng rng(501);
  int built = 0;
  while (built < 500) {
    const double a2 = rng.uniform(0.0, 0.34);
    const double b2 = rng.uniform(0.0, 0.04);
    const CubicPoly poly = density_poly(DensityPolySpec::from_squares(a2, b2));
    if (!is_admissible(poly, 1e-10)) continue;
    ++built;
    const Matrix3 rho = density_acm(DensityPolySpec::from_squares(a2, b2));
    CHECK(std::abs(rho.trace() - Complex{1.0, 0.0}) <= 1e-12);
    CHECK(is_hermitian(rho, 1e-12));
    CHECK(test::coeff_distance(char_poly_3(rho), poly) <= 1e-10);
    const DensityReport rep = validate_density(rho, 1e-10);
    CHECK(rep.positive_semidefinite);
    CHECK(rep.min_eigenvalue >= -1e-10);
    // eigenvalues coincide with the polynomial roots (the populations)
    const std::vector<Complex> roots = oracle_roots(to_poly_n(poly));
    CHECK(multiset_distance(rep.eigenvalues, roots) <= 1e-7);
  }
}

TEST_CASE("validate_density verdicts") {
  CHECK(validate_density(reference_density(), 1e-10).all_pass());
  const Matrix3 third = Complex{1.0 / 3.0, 0.0} * Matrix3::identity();
  CHECK(validate_density(third, 1e-12).all_pass());
  const DensityReport bad =
      validate_density(Matrix3::diagonal({1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}), 1e-10);
  CHECK(bad.hermitian);
  CHECK(bad.unit_trace);  // trace is 1; only positivity fails
  CHECK_FALSE(bad.positive_semidefinite);
  CHECK(bad.min_eigenvalue == doctest::Approx(-1.0));
}

TEST_CASE("unitary conjugation preserves the density class") {
  const Matrix3 rho = density_acm(DensityPolySpec::from_squares(11.0 / 36.0, 1.0 / 36.0));
  const CubicPoly base = char_poly_3(rho);
  Rng rng(502);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix3 u = build_unitary_acm(rng.unitary_params()).matrix;
    if (trial % 3 == 0)  // products of unitaries stay unitary
      u = u * build_unitary_acm(rng.unitary_params()).matrix;
    REQUIRE(is_unitary(u, 1e-11));
    const Matrix3 conj = u * rho * u.adjoint();
    const DensityReport rep = validate_density(conj, 1e-9);
    CHECK(rep.all_pass());
    CHECK(test::coeff_distance(char_poly_3(conj), base) <= 1e-9);
  }
}

TEST_CASE("similarity does not preserve the density class") {
  const Matrix3 rho = density_acm(DensityPolySpec::from_squares(11.0 / 36.0, 1.0 / 36.0));
  const Matrix3 s = Matrix3::diagonal({2.0, 0.0}, {1.0, 0.0}, {1.0, 0.0});
  const Matrix3 similar = s * rho * inverse_diag(s);
  // same characteristic polynomial, no longer Hermitian
  CHECK(test::coeff_distance(char_poly_3(similar), char_poly_3(rho)) <= 1e-12);
  CHECK_FALSE(is_hermitian(similar, 1e-6));
  CHECK_FALSE(validate_density(similar, 1e-10).all_pass());
}

TEST_SUITE_END();
