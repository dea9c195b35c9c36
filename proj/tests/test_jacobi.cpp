#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ajf/jacobi.hpp"

using namespace ajf;

TEST_CASE("evaluation points are restricted to the open interval") {
  CHECK_NOTHROW(EvalPoint(0.999999));
  CHECK_THROWS_AS(EvalPoint(1.0), std::domain_error);
  CHECK_THROWS_AS(EvalPoint(-1.0), std::domain_error);
  CHECK_THROWS_AS(EvalPoint(2.5), std::domain_error);
}

TEST_CASE("recurrence reproduces frozen polynomial values") {
  CHECK(jacobi_poly(0, 3, 2, 0.7) == doctest::Approx(1.0).epsilon(1e-15));
  // degree one: (alpha+1) + (alpha+beta+2)(x-1)/2
  CHECK(jacobi_poly(1, 2, 1, 0.3) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(jacobi_poly(2, 1, 0, 0.5) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(jacobi_poly(3, 2, 1, -0.5) == doctest::Approx(0.8125).epsilon(1e-15));
  // value at the right endpoint is binom(n+alpha, n)
  CHECK(jacobi_poly(3, 2, 0, 1.0) == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("exact series agrees with the recurrence") {
  CHECK(jacobi_poly_series(2, 1, 0, exact::Rat(1, 2)) == exact::Rat(5, 8));
  CHECK(jacobi_poly_series(3, 2, 1, exact::Rat(-1, 2)) == exact::Rat(13, 16));

  const exact::Rat xs[] = {exact::Rat(-3, 4), exact::Rat(-1, 4), exact::Rat(1, 3),
                           exact::Rat(7, 8)};
  for (int n = 0; n <= 12; ++n)
    for (int a : {0, 1, 2, 5, 10})
      for (int b : {0, 1, 3, 10})
        for (const auto& x : xs) {
          const double exact_val = exact::to_double(jacobi_poly_series(n, a, b, x));
          const double rec = jacobi_poly(n, a, b, exact::to_double(x));
          const double scale = std::max(1.0, std::abs(exact_val));
          CHECK(std::abs(rec - exact_val) / scale <= 1e-12);
        }
}

TEST_CASE("tracked evaluation reports growth") {
  const PolyEval pe = jacobi_poly_tracked(8, 3, 2, 0.9);
  CHECK(pe.growth >= std::abs(pe.value));
  CHECK(pe.growth >= 1.0);
}

TEST_CASE("prefactor and full values at frozen points") {
  const IndexTriple t110 = IndexTriple::of(1, 1, 0);
  CHECK(ajf_prefactor(t110, EvalPoint(0.0)) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(ajf::ajf(t110, 0.0) == doctest::Approx(0.7071067811865476).epsilon(1e-15));
  CHECK(ajf::ajf(t110, 0.5) == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-15));

  // the (0,0) channel reduces to Legendre polynomials
  CHECK(ajf::ajf(IndexTriple::of(0, 0, 0), 0.9) == doctest::Approx(1.0).epsilon(1e-15));
  for (double x : {-0.7, 0.1, 0.5}) {
    CHECK(ajf::ajf(IndexTriple::of(1, 0, 0), x) == doctest::Approx(x).epsilon(1e-14));
    CHECK(ajf::ajf(IndexTriple::of(2, 0, 0), x) ==
          doctest::Approx(0.5 * (3.0 * x * x - 1.0)).epsilon(1e-14));
  }

  // prefactor times series, assembled independently of ajf_eval
  const IndexTriple t211 = IndexTriple::of(2, 1, 1);
  const ClassicalIndex ci = to_classical(t211);
  const double expect = ajf_prefactor(t211, EvalPoint(0.25)) *
                        exact::to_double(jacobi_poly_series(ci.n, ci.alpha, ci.beta,
                                                            exact::Rat(1, 4)));
  CHECK(ajf::ajf(t211, 0.25) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("canonical reduction matches the symmetry rules") {
  SUBCASE("already canonical") {
    const CanonicalForm cf = canonical_reduce(IndexTriple::of(2, 1, 0), EvalPoint(0.3));
    CHECK(cf.triple == IndexTriple::of(2, 1, 0));
    CHECK(cf.x == 0.3);
    CHECK(cf.sign == 1);
  }
  SUBCASE("exchange m and q") {
    const CanonicalForm cf = canonical_reduce(IndexTriple::of(1, 0, 1), EvalPoint(0.3));
    CHECK(cf.triple == IndexTriple::of(1, 1, 0));
    CHECK(cf.x == 0.3);
    CHECK(cf.sign == 1);
  }
  SUBCASE("exchange then reflect") {
    const CanonicalForm cf = canonical_reduce(IndexTriple::of(1, 0, -1), EvalPoint(0.3));
    CHECK(cf.triple == IndexTriple::of(1, 1, 0));
    CHECK(cf.x == -0.3);
    CHECK(cf.sign == -1);
  }
  SUBCASE("reflect only") {
    const CanonicalForm cf = canonical_reduce(IndexTriple::of(2, -1, 1), EvalPoint(0.4));
    CHECK(cf.triple == IndexTriple::of(2, 1, 1));
    CHECK(cf.x == -0.4);
    CHECK(cf.sign == -1);
  }
  SUBCASE("result always has m >= |q|") {
    for (const auto& t : enumerate_states(HalfInt::from_twice(7))) {
      const CanonicalForm cf = canonical_reduce(t, EvalPoint(0.37));
      CHECK(cf.triple.m >= abs(cf.triple.q));
      CHECK(is_valid(cf.triple));
      CHECK((cf.sign == 1 || cf.sign == -1));
    }
  }
}

TEST_CASE("half-integer labels evaluate through the same path") {
  // J_{1/2}^{1/2,1/2}(x) = sqrt((1-x)/2) * sqrt(G(2)G(1)/(2 G(2)G(1))) ... =
  // prefactor only, since the polynomial degree is zero.
  const IndexTriple t = IndexTriple::from_twice(1, 1, 1);
  const double x = 0.28;
  CHECK(ajf::ajf(t, x) == doctest::Approx(std::sqrt((1.0 - x) / 2.0)).epsilon(1e-14));
  const IndexTriple tm = IndexTriple::from_twice(1, 1, -1);
  CHECK(ajf::ajf(tm, x) == doctest::Approx(std::sqrt((1.0 + x) / 2.0)).epsilon(1e-14));
}

TEST_CASE("associated Legendre values") {
  CHECK(assoc_legendre(1, 1, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(assoc_legendre(2, 1, 0.5) == doctest::Approx(-1.299038105676658).epsilon(1e-13));
  CHECK(assoc_legendre(3, 0, 0.4) == doctest::Approx(-0.44).epsilon(1e-14));
  CHECK(assoc_legendre(2, 2, 0.6) == doctest::Approx(3.0 * (1.0 - 0.36)).epsilon(1e-14));
  CHECK_THROWS_AS(assoc_legendre(1, 2, 0.0), std::domain_error);
}

TEST_CASE("equal-exponent bridge to associated Legendre") {
  for (int n = 0; n <= 4; ++n)
    for (int a = 0; a <= 3; ++a)
      for (double x : {0.37, -0.61}) {
        CHECK(legendre_crosscheck(n, a, EvalPoint(x)) <= 1e-12);
      }
}

TEST_CASE("condition hint grows with the recurrence, never below one") {
  const AjfValue v = ajf_eval(IndexTriple::of(5, 2, -1), EvalPoint(0.83));
  CHECK(v.condition_hint >= 1.0);
  CHECK(std::isfinite(v.value));
}
