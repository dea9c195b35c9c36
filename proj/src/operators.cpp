#include "ajf/operators.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace ajf {

namespace {

// Integer value of l+m, l-m, l+q, l-q from the doubled representation.
inline std::int64_t int_of(HalfInt a, HalfInt b) {
  const int s = a.twice + b.twice;
  return s / 2;  // exact: both sums are even on the unitary range
}

}  // namespace

IndexTriple shift_target(GeneratorId g, const IndexTriple& t) {
  int dl = 0, dm = 0, dq = 0;  // doubled shifts
  switch (g) {
    case GeneratorId::APlus: dm = +2; break;
    case GeneratorId::AMinus: dm = -2; break;
    case GeneratorId::BPlus: dq = +2; break;
    case GeneratorId::BMinus: dq = -2; break;
    case GeneratorId::CPlus: dl = +1; dm = +1; dq = +1; break;
    case GeneratorId::CMinus: dl = -1; dm = -1; dq = -1; break;
    case GeneratorId::DPlus: dl = +1; dm = +1; dq = -1; break;
    case GeneratorId::DMinus: dl = -1; dm = -1; dq = +1; break;
    case GeneratorId::EPlus: dl = +1; dm = -1; dq = +1; break;
    case GeneratorId::EMinus: dl = -1; dm = +1; dq = -1; break;
    case GeneratorId::FPlus: dl = +1; dm = -1; dq = -1; break;
    case GeneratorId::FMinus: dl = -1; dm = +1; dq = +1; break;
    default: throw std::invalid_argument("shift_target: " + name(g) + " is diagonal");
  }
  return IndexTriple::from_twice(t.l.twice + dl, t.m.twice + dm, t.q.twice + dq);
}

std::int64_t ladder_radicand(GeneratorId g, const IndexTriple& t) {
  const std::int64_t lpm = int_of(t.l, t.m), lmm = int_of(t.l, -t.m);
  const std::int64_t lpq = int_of(t.l, t.q), lmq = int_of(t.l, -t.q);
  switch (g) {
    case GeneratorId::APlus: return lmm * (lpm + 1);
    case GeneratorId::AMinus: return lpm * (lmm + 1);
    case GeneratorId::BPlus: return lmq * (lpq + 1);
    case GeneratorId::BMinus: return lpq * (lmq + 1);
    case GeneratorId::CPlus: return (lpm + 1) * (lpq + 1);
    case GeneratorId::CMinus: return lpm * lpq;
    case GeneratorId::DPlus: return (lpm + 1) * (lmq + 1);
    case GeneratorId::DMinus: return lpm * lmq;
    case GeneratorId::EPlus: return (lmm + 1) * (lpq + 1);
    case GeneratorId::EMinus: return lmm * lpq;
    case GeneratorId::FPlus: return (lmm + 1) * (lmq + 1);
    case GeneratorId::FMinus: return lmm * lmq;
    default: throw std::invalid_argument("ladder_radicand: " + name(g) + " is diagonal");
  }
}

LadderAction ladder_coefficient(GeneratorId g, const IndexTriple& t) {
  require_valid(t);
  LadderAction act;
  act.target = shift_target(g, t);
  const std::int64_t r = ladder_radicand(g, t);
  if (r == 0 || !is_valid(act.target)) {
    act.coefficient = 0.0;
    return act;
  }
  act.coefficient = std::sqrt(static_cast<double>(r));
  return act;
}

StateVector apply(GeneratorId g, const StateVector& s) {
  StateVector out;
  if (is_diagonal(g)) {
    for (const auto& [t, c] : s) out.add(t, c * cartan_eigenvalue(g, t).to_double());
    return out;
  }
  for (const auto& [t, c] : s) {
    const LadderAction act = ladder_coefficient(g, t);
    if (act.coefficient != 0.0) out.add(act.target, c * act.coefficient);
  }
  return out;
}

StateVector apply(const OperatorCombo& combo, const StateVector& s) {
  StateVector out;
  for (const auto& [g, c] : combo.terms) out.axpy(c, apply(g, s));
  if (combo.identity != 0.0) out.axpy(combo.identity, s);
  return out;
}

StateVector commutator(GeneratorId a, GeneratorId b, const StateVector& s) {
  return apply(a, apply(b, s)) - apply(b, apply(a, s));
}

namespace {

OperatorCombo combo_zero() { return {}; }

OperatorCombo combo(GeneratorId g, double c) {
  OperatorCombo r;
  r.terms.emplace_back(g, c);
  return r;
}

OperatorCombo negate(OperatorCombo c) {
  for (auto& [g, v] : c.terms) v = -v;
  c.identity = -c.identity;
  return c;
}

// Weight of each ladder family under (L, M, Q), i.e. the shift it applies.
void family_weights(char fam, double& wl, double& wm, double& wq) {
  switch (fam) {
    case 'A': wl = 0.0;  wm = 1.0;  wq = 0.0;  return;
    case 'B': wl = 0.0;  wm = 0.0;  wq = 1.0;  return;
    case 'C': wl = 0.5;  wm = 0.5;  wq = 0.5;  return;
    case 'D': wl = 0.5;  wm = 0.5;  wq = -0.5; return;
    case 'E': wl = 0.5;  wm = -0.5; wq = 0.5;  return;
    case 'F': wl = 0.5;  wm = -0.5; wq = -0.5; return;
  }
  throw std::logic_error("family_weights: bad family");
}

// [X+, X-] for each family: 2 A3 and 2 B3 for the compact pairs, -2 X3 for
// the split pairs, expanded over L, M, Q and the identity.
OperatorCombo same_family_commutator(char fam) {
  OperatorCombo r;
  switch (fam) {
    case 'A': r.terms = {{GeneratorId::M, 2.0}}; return r;
    case 'B': r.terms = {{GeneratorId::Q, 2.0}}; return r;
    case 'C':
      r.terms = {{GeneratorId::L, -2.0}, {GeneratorId::M, -1.0}, {GeneratorId::Q, -1.0}};
      r.identity = -1.0;
      return r;
    case 'D':
      r.terms = {{GeneratorId::L, -2.0}, {GeneratorId::M, -1.0}, {GeneratorId::Q, 1.0}};
      r.identity = -1.0;
      return r;
    case 'E':
      r.terms = {{GeneratorId::L, -2.0}, {GeneratorId::M, 1.0}, {GeneratorId::Q, -1.0}};
      r.identity = -1.0;
      return r;
    case 'F':
      r.terms = {{GeneratorId::L, -2.0}, {GeneratorId::M, 1.0}, {GeneratorId::Q, 1.0}};
      r.identity = -1.0;
      return r;
  }
  throw std::logic_error("same_family_commutator: bad family");
}

GeneratorId ladder(char fam, int sign) {
  const int base = (fam - 'A') * 2;
  return static_cast<GeneratorId>(base + (sign > 0 ? 0 : 1));
}

// Cross-family entries of the reference table, keyed by family letters in
// alphabetical order and the two ladder signs.  Entries reproduce the table
// as printed, including its bare [A+-, F+-] = D+- line.
OperatorCombo cross_family_reference(char f1, int s1, char f2, int s2) {
  const auto L = [](char fam, int sg, double c) { return combo(ladder(fam, sg), c); };
  const int u = s1;  // sign of the first (alphabetically earlier) generator

  if (f1 == 'A') {
    switch (f2) {
      case 'B': return combo_zero();
      case 'C': return s1 == s2 ? combo_zero() : L('E', -u, u * 1.0);   // [A+-, C-+] = +-E-+
      case 'D': return s1 == s2 ? combo_zero() : L('F', -u, -u * 1.0);  // [A+-, D-+] = -+F-+
      case 'E': return s1 == s2 ? L('C', u, u * 1.0) : combo_zero();    // [A+-, E+-] = +-C+-
      case 'F': return s1 == s2 ? L('D', u, 1.0) : combo_zero();        // [A+-, F+-] = D+-
    }
  }
  if (f1 == 'B') {
    switch (f2) {
      case 'C': return s1 == s2 ? combo_zero() : L('D', -u, -u * 1.0);  // [B+-, C-+] = -+D-+
      case 'D': return s1 == s2 ? L('C', u, u * 1.0) : combo_zero();    // [B+-, D+-] = +-C+-
      case 'E': return s1 == s2 ? combo_zero() : L('F', -u, -u * 1.0);  // [B+-, E-+] = -+F-+
      case 'F': return s1 == s2 ? L('E', u, u * 1.0) : combo_zero();    // [B+-, F+-] = +-E+-
    }
  }
  if (f1 == 'C') {
    switch (f2) {
      case 'D': return s1 == s2 ? combo_zero() : L('B', u, -u * 1.0);   // [C+-, D-+] = -+B+-
      case 'E': return s1 == s2 ? combo_zero() : L('A', u, -u * 1.0);   // [C+-, E-+] = -+A+-
      case 'F': return combo_zero();
    }
  }
  if (f1 == 'D') {
    switch (f2) {
      case 'E': return combo_zero();
      case 'F': return s1 == s2 ? combo_zero() : L('A', u, -u * 1.0);   // [D+-, F-+] = -+A+-
    }
  }
  if (f1 == 'E' && f2 == 'F')
    return s1 == s2 ? combo_zero() : L('B', u, -u * 1.0);               // [E+-, F-+] = -+B+-
  throw std::logic_error("cross_family_reference: bad family pair");
}

}  // namespace

OperatorCombo reference_commutator(GeneratorId a, GeneratorId b) {
  if (a == b) return combo_zero();

  // Diagonal with diagonal.
  if (is_diagonal(a) && is_diagonal(b)) return combo_zero();

  // Diagonal with ladder: weight of the ladder under that diagonal.
  if (is_diagonal(a) || is_diagonal(b)) {
    const bool flip = is_diagonal(b);  // [ladder, diag] = -[diag, ladder]
    const GeneratorId d = flip ? b : a;
    const GeneratorId x = flip ? a : b;
    double wl, wm, wq;
    family_weights(family(x), wl, wm, wq);
    double w = 0.0;
    switch (d) {
      case GeneratorId::L: w = wl; break;
      case GeneratorId::M: w = wm; break;
      case GeneratorId::Q: w = wq; break;
      default:
        throw std::invalid_argument("reference_commutator covers the 15-generator basis only");
    }
    w *= ladder_sign(x);
    if (w == 0.0) return combo_zero();
    OperatorCombo r = combo(x, w);
    return flip ? negate(r) : r;
  }

  // Ladder with ladder.
  const char fa = family(a), fb = family(b);
  const int sa = ladder_sign(a), sb = ladder_sign(b);
  if (fa == fb) {
    if (sa == sb) return combo_zero();
    OperatorCombo r = same_family_commutator(fa);
    return sa > 0 ? r : negate(r);  // [X-, X+] = -[X+, X-]
  }
  if (fa < fb) return cross_family_reference(fa, sa, fb, sb);
  return negate(cross_family_reference(fb, sb, fa, sa));
}

std::string to_string(const OperatorCombo& c) {
  if (c.is_zero()) return "0";
  std::string s;
  auto fmt = [](double v) {
    // structure constants are small half-integers; render compactly
    if (v == static_cast<long long>(v)) return std::to_string(static_cast<long long>(v));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  for (const auto& [g, v] : c.terms) {
    if (!s.empty()) s += " ";
    if (v >= 0 && !s.empty()) s += "+ ";
    else if (v < 0) s += s.empty() ? "-" : "- ";
    const double av = std::abs(v);
    if (av != 1.0) s += fmt(av) + " ";
    s += name(g);
  }
  if (c.identity != 0.0) {
    if (!s.empty()) s += c.identity > 0 ? " + " : " - ";
    else if (c.identity < 0) s += "-";
    s += fmt(std::abs(c.identity));
  }
  return s;
}

StateVector casimir_su2(char fam, const StateVector& s) {
  GeneratorId plus, minus, diag;
  if (fam == 'A') {
    plus = GeneratorId::APlus; minus = GeneratorId::AMinus; diag = GeneratorId::A3;
  } else if (fam == 'B') {
    plus = GeneratorId::BPlus; minus = GeneratorId::BMinus; diag = GeneratorId::B3;
  } else {
    throw std::invalid_argument("casimir_su2: family must be A or B");
  }
  StateVector out = apply(diag, apply(diag, s));
  out.axpy(0.5, apply(plus, apply(minus, s)));
  out.axpy(0.5, apply(minus, apply(plus, s)));
  return out;
}

double su2_casimir_eigenvalue(const IndexTriple& t) {
  // l(l+1) = 2l(2l+2)/4, exact in double for the ranges used
  return 0.25 * t.l.twice * (t.l.twice + 2);
}

StateVector casimir_su11(char fam, const StateVector& s) {
  if (fam < 'C' || fam > 'F')
    throw std::invalid_argument("casimir_su11: family must be C, D, E or F");
  const GeneratorId plus = ladder(fam, +1);
  const GeneratorId minus = ladder(fam, -1);
  const GeneratorId diag =
      static_cast<GeneratorId>(static_cast<int>(GeneratorId::C3) + (fam - 'C'));
  StateVector out = apply(diag, apply(diag, s));
  out.axpy(-0.5, apply(plus, apply(minus, s)));
  out.axpy(-0.5, apply(minus, apply(plus, s)));
  return out;
}

double su11_reference_eigenvalue(char fam, const IndexTriple& t) {
  const double sum = 0.5 * (t.m.twice + t.q.twice);   // m+q
  const double diff = 0.5 * (t.m.twice - t.q.twice);  // m-q
  switch (fam) {
    case 'C': case 'F': return 0.25 * (sum * sum - 1.0);
    case 'D': case 'E': return 0.25 * (diff * diff - 1.0);
  }
  throw std::invalid_argument("su11_reference_eigenvalue: family must be C, D, E or F");
}

double su11_measured_eigenvalue(char fam, const IndexTriple& t) {
  const double sum = 0.5 * (t.m.twice + t.q.twice);
  const double diff = 0.5 * (t.m.twice - t.q.twice);
  switch (fam) {
    case 'C': case 'F': return 0.25 * (diff * diff - 1.0);
    case 'D': case 'E': return 0.25 * (sum * sum - 1.0);
  }
  throw std::invalid_argument("su11_measured_eigenvalue: family must be C, D, E or F");
}

StateVector casimir_su22(const StateVector& s) {
  StateVector out;
  const double sgn[6] = {+1.0, +1.0, -1.0, -1.0, -1.0, -1.0};
  for (int f = 0; f < 6; ++f) {
    const char fam = static_cast<char>('A' + f);
    const GeneratorId plus = ladder(fam, +1);
    const GeneratorId minus = ladder(fam, -1);
    out.axpy(0.5 * sgn[f], apply(plus, apply(minus, s)));
    out.axpy(0.5 * sgn[f], apply(minus, apply(plus, s)));
    const GeneratorId diag =
        static_cast<GeneratorId>(static_cast<int>(GeneratorId::A3) + f);
    out.axpy(0.5, apply(diag, apply(diag, s)));
  }
  return out;
}

std::int64_t factorization_product_plus_minus(char fam, const IndexTriple& t) {
  const std::int64_t lpm = int_of(t.l, t.m), lmm = int_of(t.l, -t.m);
  const std::int64_t lpq = int_of(t.l, t.q), lmq = int_of(t.l, -t.q);
  switch (fam) {
    case 'A': return lpm * (lmm + 1);
    case 'B': return lpq * (lmq + 1);
    case 'C': return lpm * lpq;
    case 'D': return lpm * lmq;
    case 'E': return lmm * lpq;
    case 'F': return lmm * lmq;
  }
  throw std::invalid_argument("factorization_product_plus_minus: bad family");
}

std::int64_t factorization_product_minus_plus(char fam, const IndexTriple& t) {
  const std::int64_t lpm = int_of(t.l, t.m), lmm = int_of(t.l, -t.m);
  const std::int64_t lpq = int_of(t.l, t.q), lmq = int_of(t.l, -t.q);
  switch (fam) {
    case 'A': return lmm * (lpm + 1);
    case 'B': return lmq * (lpq + 1);
    case 'C': return (lpm + 1) * (lpq + 1);
    case 'D': return (lpm + 1) * (lmq + 1);
    case 'E': return (lmm + 1) * (lpq + 1);
    case 'F': return (lmm + 1) * (lmq + 1);
  }
  throw std::invalid_argument("factorization_product_minus_plus: bad family");
}

FactorizationResidual factorization_check(char fam, const IndexTriple& t) {
  require_valid(t);
  const StateVector s = StateVector::basis(t);
  const GeneratorId plus = ladder(fam, +1);
  const GeneratorId minus = ladder(fam, -1);

  StateVector pm = apply(plus, apply(minus, s));
  pm.axpy(-static_cast<double>(factorization_product_plus_minus(fam, t)), s);
  StateVector mp = apply(minus, apply(plus, s));
  mp.axpy(-static_cast<double>(factorization_product_minus_plus(fam, t)), s);
  return {pm.max_abs(), mp.max_abs()};
}

double adjointness_check(char fam, HalfInt l_max) {
  const auto basis = enumerate_states(l_max);
  std::map<IndexTriple, int> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);

  const int n = static_cast<int>(basis.size());
  Eigen::MatrixXd up = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd down = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const auto up_act = ladder_coefficient(ladder(fam, +1), basis[j]);
    if (up_act.coefficient != 0.0) {
      auto it = idx.find(up_act.target);
      if (it != idx.end()) up(it->second, j) = up_act.coefficient;
    }
    const auto down_act = ladder_coefficient(ladder(fam, -1), basis[j]);
    if (down_act.coefficient != 0.0) {
      auto it = idx.find(down_act.target);
      if (it != idx.end()) down(it->second, j) = down_act.coefficient;
    }
  }
  return (up.transpose() - down).cwiseAbs().maxCoeff();
}

}  // namespace ajf
