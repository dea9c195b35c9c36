#include "ajf/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace ajf {

EvalPoint::EvalPoint(double v) : x(v) {
  if (!(std::abs(v) < 1.0))
    throw std::domain_error("evaluation point must lie in the open interval (-1, 1)");
}

PolyEval jacobi_poly_tracked(int n, int alpha, int beta, double x) {
  if (n < 0) throw std::domain_error("jacobi_poly: degree must be nonnegative");
  if (alpha < 0 || beta < 0)
    throw std::domain_error(
        "jacobi_poly: alpha and beta must be nonnegative; apply canonical_reduce first");

  const long long a = alpha, b = beta;
  double p0 = 1.0;
  if (n == 0) return {p0, 1.0};
  double p1 = 0.5 * (a - b) + 0.5 * (a + b + 2) * x;
  double growth = std::max(1.0, std::abs(p1));
  for (long long k = 2; k <= n; ++k) {
    // 2k(k+a+b)(2k+a+b-2) P_k =
    //   (2k+a+b-1)[(2k+a+b)(2k+a+b-2) x + a^2-b^2] P_(k-1)
    //   - 2(k+a-1)(k+b-1)(2k+a+b) P_(k-2)
    const long long s = 2 * k + a + b;
    const double c1 = static_cast<double>(2 * k * (k + a + b) * (s - 2));
    const double cx = static_cast<double>((s - 1) * s * (s - 2));
    const double c0 = static_cast<double>((s - 1) * (a * a - b * b));
    const double c2 = static_cast<double>(2 * (k + a - 1) * (k + b - 1) * s);
    const double pk = ((cx * x + c0) * p1 - c2 * p0) / c1;
    p0 = p1;
    p1 = pk;
    growth = std::max(growth, std::abs(pk));
  }
  return {p1, growth};
}

double jacobi_poly(int n, int alpha, int beta, double x) {
  return jacobi_poly_tracked(n, alpha, beta, x).value;
}

exact::Rat jacobi_poly_series(int n, int alpha, int beta, const exact::Rat& x) {
  if (n < 0) throw std::domain_error("jacobi_poly_series: degree must be nonnegative");
  if (alpha < 0)
    throw std::domain_error("jacobi_poly_series: alpha+1 must avoid nonpositive integers");

  const exact::Rat z = (1 - x) / 2;
  exact::Rat term = 1, sum = 1;
  for (int k = 1; k <= n; ++k) {
    // ratio of consecutive terms of 2F1(-n, n+alpha+beta+1; alpha+1; z)
    term *= exact::Rat(-(n - k + 1)) * (n + alpha + beta + k);
    term /= exact::Rat(alpha + k) * k;
    term *= z;
    sum += term;
  }
  const exact::Rat front = exact::pochhammer(alpha + 1, n) / exact::Rat(exact::factorial(n));
  return front * sum;
}

double ajf_prefactor(const IndexTriple& t, EvalPoint p) {
  require_valid(t);
  const int lpm = (t.l + t.m).to_int();
  const int lmm = (t.l - t.m).to_int();
  const int lpq = (t.l + t.q).to_int();
  const int lmq = (t.l - t.q).to_int();

  exact::Rat radicand(exact::gamma_int(lpm + 1) * exact::gamma_int(lmm + 1),
                      exact::gamma_int(lpq + 1) * exact::gamma_int(lmq + 1));
  const int two_m = t.m.twice;  // exponent of 2^(2m)
  if (two_m >= 0)
    radicand /= exact::Int(1) << two_m;
  else
    radicand *= exact::Int(1) << (-two_m);

  const double root = std::sqrt(exact::to_double(radicand));
  const double em = 0.25 * (t.m.twice + t.q.twice);  // (m+q)/2
  const double eq = 0.25 * (t.m.twice - t.q.twice);  // (m-q)/2
  return root * std::pow(1.0 - p.x, em) * std::pow(1.0 + p.x, eq);
}

CanonicalForm canonical_reduce(const IndexTriple& t, EvalPoint p) {
  require_valid(t);
  HalfInt m = t.m, q = t.q;
  double x = p.x;
  int sign = 1;
  if (abs(q) > abs(m)) std::swap(m, q);  // J(l,m,q; x) = J(l,q,m; x)
  if (m.twice < 0) {
    // J(l,m,q; x) = (-1)^(l-q) J(l,-m,q; -x)
    if ((t.l - q).to_int() % 2 != 0) sign = -sign;
    m = -m;
    x = -x;
  }
  return CanonicalForm{IndexTriple{t.l, m, q}, x, sign};
}

AjfValue ajf_eval(const IndexTriple& t, EvalPoint p) {
  const CanonicalForm cf = canonical_reduce(t, p);
  const EvalPoint cp(cf.x);
  const ClassicalIndex ci = to_classical(cf.triple);
  const PolyEval pe = jacobi_poly_tracked(ci.n, ci.alpha, ci.beta, cf.x);
  const double pref = ajf_prefactor(cf.triple, cp);
  AjfValue v;
  v.value = cf.sign * pref * pe.value;
  v.condition_hint = std::max(1.0, std::abs(pref) * pe.growth);
  return v;
}

double assoc_legendre(int l, int m, double x) {
  if (m < 0 || m > l) throw std::domain_error("assoc_legendre requires 0 <= m <= l");
  if (!(std::abs(x) <= 1.0)) throw std::domain_error("assoc_legendre requires |x| <= 1");

  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^(m/2), then upward recurrence in degree.
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0) * s;
  if (l == m) return pmm;
  double pprev = pmm;
  double pcur = x * (2.0 * m + 1.0) * pmm;
  for (int k = m + 2; k <= l; ++k) {
    const double pnext = (x * (2.0 * k - 1.0) * pcur - (k + m - 1.0) * pprev) / (k - m);
    pprev = pcur;
    pcur = pnext;
  }
  return pcur;
}

double legendre_crosscheck(int n, int alpha, EvalPoint p) {
  if (n < 0 || alpha < 0) throw std::domain_error("legendre_crosscheck requires n, alpha >= 0");
  const double lhs = jacobi_poly(n, alpha, alpha, p.x);

  // Gamma(n+alpha+1)/Gamma(n+2 alpha+1) as an exact rational
  exact::Rat ratio(exact::gamma_int(n + alpha + 1), exact::gamma_int(n + 2 * alpha + 1));
  const double rhs = std::pow(-2.0, alpha) * exact::to_double(ratio) *
                     std::pow((1.0 - p.x) * (1.0 + p.x), -0.5 * alpha) *
                     assoc_legendre(n + alpha, alpha, p.x);
  return std::abs(lhs - rhs);
}

}  // namespace ajf
