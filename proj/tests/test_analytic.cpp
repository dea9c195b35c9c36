#include <doctest.h>

#include <cmath>

#include "ajf/analytic.hpp"
#include "ajf/operators.hpp"

using namespace ajf;

namespace {

// five-point Richardson stencil, independent of the ladder-based derivative
double fd_derivative(const IndexTriple& t, double x, double h) {
  const auto f = [&t](double y) { return ajf::ajf(t, y); };
  return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12.0 * h);
}

double fd_second(const IndexTriple& t, double x, double h) {
  const auto f = [&t](double y) { return ajf::ajf(t, y); };
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace

TEST_CASE("derivatives of the Legendre channel are polynomial derivatives") {
  for (double x : {-0.5, 0.2, 0.8}) {
    CHECK(ajf_derivative(IndexTriple::of(1, 0, 0), EvalPoint(x)) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ajf_derivative(IndexTriple::of(2, 0, 0), EvalPoint(x)) ==
          doctest::Approx(3.0 * x).epsilon(1e-13));
    CHECK(ajf_second_derivative(IndexTriple::of(2, 0, 0), EvalPoint(x)) ==
          doctest::Approx(3.0).epsilon(1e-12));
  }
}

TEST_CASE("ladder-based derivatives match finite differences") {
  const IndexTriple cases[] = {IndexTriple::of(2, 1, 1), IndexTriple::of(3, -2, 0),
                               IndexTriple::from_twice(3, 1, -1)};
  for (const auto& t : cases) {
    for (double x : {0.3, -0.45}) {
      const double d = ajf_derivative(t, EvalPoint(x));
      CHECK(d == doctest::Approx(fd_derivative(t, x, 1e-3)).epsilon(1e-8));
      const double dd = ajf_second_derivative(t, EvalPoint(x));
      CHECK(dd == doctest::Approx(fd_second(t, x, 1e-4)).epsilon(1e-5));
    }
  }
}

TEST_CASE("differential form agrees with ladder coefficients at a point") {
  SUBCASE("A+ on the Legendre channel") {
    const IndexTriple t = IndexTriple::of(1, 0, 0);
    const double x = 0.5;
    const DiffOpCoeffs c = diff_op_coeffs(GeneratorId::APlus, t, x);
    CHECK(c.a == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    CHECK(c.b == doctest::Approx(0.0));
    const LadderAction act = ladder_coefficient(GeneratorId::APlus, t);
    CHECK(apply_differential(GeneratorId::APlus, t, EvalPoint(x)) ==
          doctest::Approx(act.coefficient * ajf::ajf(act.target, x)).epsilon(1e-13));
  }
  SUBCASE("C- collapses the lowest half-integer state to the scalar") {
    const IndexTriple t = IndexTriple::from_twice(1, 1, 1);
    CHECK(apply_differential(GeneratorId::CMinus, t, EvalPoint(0.2)) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("differential and algebraic actions agree across generators") {
  const auto grid = grids::chebyshev_interior(12);
  const IndexTriple cases[] = {IndexTriple::of(1, 0, 0), IndexTriple::of(2, -1, 1),
                               IndexTriple::from_twice(3, -1, 1),
                               IndexTriple::from_twice(1, 1, -1)};
  for (const auto& t : cases)
    for (GeneratorId g : ladder_generators())
      CHECK(diff_vs_algebraic_check(g, t, grid) <= 1e-11);
}

TEST_CASE("second-order equation residual vanishes") {
  const auto grid = grids::chebyshev_interior(10);
  for (const auto& t : enumerate_states(HalfInt::of(2)))
    for (double x : grid) CHECK(ode_residual(t, EvalPoint(x)) <= 1e-10);
}

TEST_CASE("reflection relations hold as coefficient identities") {
  for (const auto& t : {IndexTriple::of(1, 0, 0), IndexTriple::of(2, 1, -1),
                        IndexTriple::from_twice(3, 1, 1)}) {
    const auto residuals = weyl_relation_check(t, EvalPoint(0.25));
    CHECK(residuals.size() == 8);
    for (const auto& r : residuals) {
      CHECK(r.da <= 1e-14);
      CHECK(r.db <= 1e-13);
    }
  }
}

TEST_CASE("interior grids are symmetric and strictly inside the interval") {
  const auto g = grids::chebyshev_interior(7);
  REQUIRE(g.size() == 7);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(std::abs(g[i]) < 0.95 + 1e-15);
    CHECK(g[i] == doctest::Approx(-g[g.size() - 1 - i]).epsilon(1e-15));
  }
}
