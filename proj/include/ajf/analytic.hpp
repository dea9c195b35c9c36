#pragma once

#include <string>
#include <vector>

#include "ajf/generators.hpp"
#include "ajf/jacobi.hpp"

namespace ajf {

/// d/dx of the algebraic Jacobi function, assembled from the exact ladder
/// identity 2 sqrt(1-x^2) d/dx = (A+ - A-) applied on the m index.
double ajf_derivative(const IndexTriple& t, EvalPoint p);

/// Second derivative by composing the same ladder identity twice.
double ajf_second_derivative(const IndexTriple& t, EvalPoint p);

/// First-order differential form a(x) d/dx + b(x; l, m, q) of a ladder
/// generator.  The diagonal labels L, M, Q inside b are resolved on the
/// input state (the function the operator is applied to).
struct DiffOpCoeffs {
  double a = 0.0;
  double b = 0.0;
};

DiffOpCoeffs diff_op_coeffs(GeneratorId g, const IndexTriple& t, double x);

/// a(x) J'(t; x) + b(x; l, m, q) J(t; x) for a ladder generator.
double apply_differential(GeneratorId g, const IndexTriple& t, EvalPoint p);

/// Absolute residual of the hypergeometric equation
///   -(1-x^2) J'' + 2x J' + ((2mqx + m^2 + q^2)/(1-x^2)) J - l(l+1) J.
double ode_residual(const IndexTriple& t, EvalPoint p);

struct CoeffPairResidual {
  std::string relation;
  double da = 0.0;  // derivative-coefficient mismatch
  double db = 0.0;  // multiplication-coefficient mismatch
};

/// Checks the reflection relations between families as identities between
/// closed-form coefficient functions at one point:
///   D+-(x, d, M, Q) =  C+-(-x, -d, M, -Q)
///   E+-(x, d, M, Q) =  C+-(-x, -d, -M, Q)
///   F+-(x, d, M, Q) = -C+-(x, d, -M, -Q)
///   B+-(x, d, M, Q) =  A+-(x, d, Q, M)
std::vector<CoeffPairResidual> weyl_relation_check(const IndexTriple& t, EvalPoint p);

/// Max over the grid of |apply_differential(g) - coefficient * target value|,
/// the pointwise agreement between the differential and algebraic actions.
double diff_vs_algebraic_check(GeneratorId g, const IndexTriple& t,
                               const std::vector<double>& grid);

namespace grids {
/// n Chebyshev-type points scaled into [-scale, scale].
std::vector<double> chebyshev_interior(int n, double scale = 0.95);
}  // namespace grids

}  // namespace ajf
