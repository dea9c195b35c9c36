#pragma once

#include "ajf/exact.hpp"
#include "ajf/indices.hpp"

namespace ajf {

/// Point in the open interval (-1, 1); construction rejects anything else.
struct EvalPoint {
  double x;
  explicit EvalPoint(double v);
};

/// Jacobi polynomial J_n^(alpha,beta)(x), normalized so that
/// J_n^(alpha,beta)(1) = binom(n+alpha, n).  Three-term recurrence in n.
/// Requires alpha, beta >= 0; reduce other labels symmetrically first.
double jacobi_poly(int n, int alpha, int beta, double x);

struct PolyEval {
  double value = 0.0;
  double growth = 1.0;  // running max |J_k| over the recurrence, k <= n
};

PolyEval jacobi_poly_tracked(int n, int alpha, int beta, double x);

/// Same polynomial through the terminating hypergeometric sum
///   ((alpha+1)_n / n!) 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)
/// in exact rational arithmetic.  Independent of jacobi_poly; serves as the
/// reference evaluation for tests.  Requires n >= 0 and alpha >= 0.
exact::Rat jacobi_poly_series(int n, int alpha, int beta, const exact::Rat& x);

/// Square-root-of-rational prefactor
///   sqrt(G(l+m+1) G(l-m+1) / (2^(2m) G(l+q+1) G(l-q+1)))
///   * (1-x)^((m+q)/2) * (1+x)^((m-q)/2)
/// with the Gamma values taken as exact integer factorials.
double ajf_prefactor(const IndexTriple& t, EvalPoint p);

struct CanonicalForm {
  IndexTriple triple;  // m >= |q|, so alpha = m+q >= 0 and beta = m-q >= 0
  double x;
  int sign;  // +1 or -1
};

/// Reduces (t, x) by the symmetry relations
///   J(l,m,q; x) = J(l,q,m; x)
///   J(l,m,q; x) = (-1)^(l-q) J(l,-m,q; -x)
/// so that the classical evaluator only ever sees alpha, beta >= 0.
CanonicalForm canonical_reduce(const IndexTriple& t, EvalPoint p);

struct AjfValue {
  double value = 0.0;
  double condition_hint = 1.0;  // recurrence growth, for tolerance scaling
};

/// Algebraic Jacobi function J_l^(m,q)(x) = prefactor * jacobi_poly.
AjfValue ajf_eval(const IndexTriple& t, EvalPoint p);

inline double ajf(const IndexTriple& t, double x) { return ajf_eval(t, EvalPoint(x)).value; }

/// Associated Legendre P_l^m(x), Condon-Shortley phase, 0 <= m <= l.
double assoc_legendre(int l, int m, double x);

/// Residual of J_n^(alpha,alpha)(x) against its associated Legendre form,
///   (-2)^alpha (G(n+alpha+1)/G(n+2alpha+1)) (1-x^2)^(-alpha/2) P^alpha_(n+alpha)(x).
double legendre_crosscheck(int n, int alpha, EvalPoint p);

}  // namespace ajf
