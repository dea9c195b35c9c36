#include "ajf/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "ajf/operators.hpp"

namespace ajf {

namespace {

// Value of a same-l neighbor with the coefficient folded in; zero-coefficient
// neighbors are never evaluated (their triples may leave the unitary range).
double weighted_neighbor(GeneratorId g, const IndexTriple& t, double x) {
  const LadderAction act = ladder_coefficient(g, t);
  if (act.coefficient == 0.0) return 0.0;
  return act.coefficient * ajf(act.target, x);
}

}  // namespace

double ajf_derivative(const IndexTriple& t, EvalPoint p) {
  // 2 sqrt(1-x^2) d/dx = A+ - A- on the m index
  const double num = weighted_neighbor(GeneratorId::APlus, t, p.x) -
                     weighted_neighbor(GeneratorId::AMinus, t, p.x);
  return num / (2.0 * std::sqrt((1.0 - p.x) * (1.0 + p.x)));
}

double ajf_second_derivative(const IndexTriple& t, EvalPoint p) {
  // Differentiate (A+ - A-) / (2 sqrt(1-x^2)) once more; the numerator's
  // derivative reuses the single-ladder identity on each neighbor.
  const double s2 = (1.0 - p.x) * (1.0 + p.x);
  const LadderAction up = ladder_coefficient(GeneratorId::APlus, t);
  const LadderAction dn = ladder_coefficient(GeneratorId::AMinus, t);
  double dnum = 0.0;
  if (up.coefficient != 0.0) dnum += up.coefficient * ajf_derivative(up.target, p);
  if (dn.coefficient != 0.0) dnum -= dn.coefficient * ajf_derivative(dn.target, p);
  return dnum / (2.0 * std::sqrt(s2)) + p.x * ajf_derivative(t, p) / s2;
}

DiffOpCoeffs diff_op_coeffs(GeneratorId g, const IndexTriple& t, double x) {
  if (!is_ladder(g))
    throw std::invalid_argument("diff_op_coeffs: " + name(g) + " is diagonal");
  const double l = t.l.to_double();
  const double m = t.m.to_double();
  const double q = t.q.to_double();
  const double sq2 = std::sqrt(2.0);
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  const double rm = std::sqrt(2.0 * (1.0 - x));  // sqrt(2(1-x)), C and F families
  const double rp = std::sqrt(2.0 * (1.0 + x));  // sqrt(2(1+x)), D and E families
  const double am = (1.0 + x) * std::sqrt(1.0 - x) / sq2;
  const double ap = (1.0 - x) * std::sqrt(1.0 + x) / sq2;

  switch (g) {
    case GeneratorId::APlus: return {+s, (x * m + q) / s};
    case GeneratorId::AMinus: return {-s, (x * m + q) / s};
    case GeneratorId::BPlus: return {+s, (x * q + m) / s};
    case GeneratorId::BMinus: return {-s, (x * q + m) / s};
    case GeneratorId::CPlus: return {+am, -(x * (l + 1) - (l + 1 + m + q)) / rm};
    case GeneratorId::CMinus: return {-am, -(x * l - (l + m + q)) / rm};
    case GeneratorId::DPlus: return {-ap, (x * (l + 1) + (l + 1 + m - q)) / rp};
    case GeneratorId::DMinus: return {+ap, (x * l + (l + m - q)) / rp};
    case GeneratorId::EPlus: return {-ap, (x * (l + 1) + (l + 1 - m + q)) / rp};
    case GeneratorId::EMinus: return {+ap, (x * l + (l - m + q)) / rp};
    case GeneratorId::FPlus: return {-am, (x * (l + 1) - (l + 1 - m - q)) / rm};
    case GeneratorId::FMinus: return {+am, (x * l - (l - m - q)) / rm};
    default: throw std::logic_error("diff_op_coeffs: unreachable");
  }
}

double apply_differential(GeneratorId g, const IndexTriple& t, EvalPoint p) {
  require_valid(t);
  const DiffOpCoeffs c = diff_op_coeffs(g, t, p.x);
  return c.a * ajf_derivative(t, p) + c.b * ajf(t, p.x);
}

double ode_residual(const IndexTriple& t, EvalPoint p) {
  require_valid(t);
  const double x = p.x;
  const double s2 = (1.0 - x) * (1.0 + x);
  const double m = t.m.to_double();
  const double q = t.q.to_double();
  const double v = ajf(t, x);
  const double d1 = ajf_derivative(t, p);
  const double d2 = ajf_second_derivative(t, p);
  const double r = -s2 * d2 + 2.0 * x * d1 +
                   ((2.0 * m * q * x + m * m + q * q) / s2) * v -
                   su2_casimir_eigenvalue(t) * v;
  return std::abs(r);
}

std::vector<CoeffPairResidual> weyl_relation_check(const IndexTriple& t, EvalPoint p) {
  require_valid(t);
  const double x = p.x;
  std::vector<CoeffPairResidual> out;

  const IndexTriple flip_q{t.l, t.m, -t.q};
  const IndexTriple flip_m{t.l, -t.m, t.q};
  const IndexTriple flip_mq{t.l, -t.m, -t.q};
  const IndexTriple swap_mq{t.l, t.q, t.m};

  struct Rel {
    const char* label;
    GeneratorId lhs;
    GeneratorId rhs;
    const IndexTriple* rhs_t;
    double rhs_x;    // argument substitution for x
    double a_scale;  // from the D_x substitution and any overall sign
    double b_scale;  // overall sign only
  };
  // D(x,d,M,Q) = C(-x,-d,M,-Q); E = C(-x,-d,-M,Q); F = -C(x,d,-M,-Q);
  // B(x,d,M,Q) = A(x,d,Q,M).
  const Rel rels[] = {
      {"D+ ~ C+", GeneratorId::DPlus, GeneratorId::CPlus, &flip_q, -x, -1.0, +1.0},
      {"D- ~ C-", GeneratorId::DMinus, GeneratorId::CMinus, &flip_q, -x, -1.0, +1.0},
      {"E+ ~ C+", GeneratorId::EPlus, GeneratorId::CPlus, &flip_m, -x, -1.0, +1.0},
      {"E- ~ C-", GeneratorId::EMinus, GeneratorId::CMinus, &flip_m, -x, -1.0, +1.0},
      {"F+ ~ C+", GeneratorId::FPlus, GeneratorId::CPlus, &flip_mq, x, -1.0, -1.0},
      {"F- ~ C-", GeneratorId::FMinus, GeneratorId::CMinus, &flip_mq, x, -1.0, -1.0},
      {"B+ ~ A+", GeneratorId::BPlus, GeneratorId::APlus, &swap_mq, x, +1.0, +1.0},
      {"B- ~ A-", GeneratorId::BMinus, GeneratorId::AMinus, &swap_mq, x, +1.0, +1.0},
  };
  for (const Rel& r : rels) {
    const DiffOpCoeffs lhs = diff_op_coeffs(r.lhs, t, x);
    const DiffOpCoeffs rhs = diff_op_coeffs(r.rhs, *r.rhs_t, r.rhs_x);
    out.push_back(CoeffPairResidual{r.label,
                                    std::abs(lhs.a - r.a_scale * rhs.a),
                                    std::abs(lhs.b - r.b_scale * rhs.b)});
  }
  return out;
}

double diff_vs_algebraic_check(GeneratorId g, const IndexTriple& t,
                               const std::vector<double>& grid) {
  require_valid(t);
  const LadderAction act = ladder_coefficient(g, t);
  double worst = 0.0;
  for (double x : grid) {
    const EvalPoint p(x);
    const double lhs = apply_differential(g, t, p);
    const double rhs =
        act.coefficient == 0.0 ? 0.0 : act.coefficient * ajf(act.target, x);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

namespace grids {

std::vector<double> chebyshev_interior(int n, double scale) {
  if (n < 1) throw std::invalid_argument("chebyshev_interior: need at least one point");
  std::vector<double> xs(n);
  for (int k = 0; k < n; ++k)
    xs[k] = scale * std::cos(M_PI * (2.0 * k + 1.0) / (2.0 * n));
  return xs;
}

}  // namespace grids

}  // namespace ajf
