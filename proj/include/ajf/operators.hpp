#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ajf/generators.hpp"
#include "ajf/state_vector.hpp"

namespace ajf {

struct LadderAction {
  IndexTriple target;
  double coefficient = 0.0;  // exactly 0.0 when the target leaves the unitary range
};

/// Index shift performed by a ladder generator (may leave the unitary range).
IndexTriple shift_target(GeneratorId g, const IndexTriple& t);

/// Exact integer radicand of the ladder coefficient:
///   A+-: (l-+m)(l+-m+1)        B+-: (l-+q)(l+-q+1)
///   C+:  (l+m+1)(l+q+1)        C-:  (l+m)(l+q)
///   D+:  (l+m+1)(l-q+1)        D-:  (l+m)(l-q)
///   E+:  (l-m+1)(l+q+1)        E-:  (l-m)(l+q)
///   F+:  (l-m+1)(l-q+1)        F-:  (l-m)(l-q)
/// Both factors are nonnegative integers on the unitary range.
std::int64_t ladder_radicand(GeneratorId g, const IndexTriple& t);

/// Target and coefficient of a ladder generator on a basis state.
/// The coefficient is sqrt(ladder_radicand), forced to exact 0 whenever the
/// radicand vanishes or the target is outside the unitary range.
LadderAction ladder_coefficient(GeneratorId g, const IndexTriple& t);

/// Linear action of any generator (ladder or diagonal) on a state.
StateVector apply(GeneratorId g, const StateVector& s);

/// Real combination of generators plus a multiple of the identity.
struct OperatorCombo {
  std::vector<std::pair<GeneratorId, double>> terms;
  double identity = 0.0;

  bool is_zero() const { return terms.empty() && identity == 0.0; }
};

StateVector apply(const OperatorCombo& c, const StateVector& s);

StateVector commutator(GeneratorId a, GeneratorId b, const StateVector& s);

/// The commutation table shipped as reference data, entry for [a, b].
/// The verification suite measures the actual closure and reports every
/// disagreement with this table; the table is never assumed correct.
OperatorCombo reference_commutator(GeneratorId a, GeneratorId b);

std::string to_string(const OperatorCombo& c);

/// X3^2 + (X+X- + X-X+)/2 for family 'A' or 'B'; eigenvalue l(l+1).
StateVector casimir_su2(char fam, const StateVector& s);

double su2_casimir_eigenvalue(const IndexTriple& t);

/// X3^2 - (X+X- + X-X+)/2 for family 'C', 'D', 'E' or 'F'.
StateVector casimir_su11(char fam, const StateVector& s);

/// Eigenvalue of casimir_su11 as published with the reference table:
///   C, F: ((m+q)^2 - 1)/4        D, E: ((m-q)^2 - 1)/4
double su11_reference_eigenvalue(char fam, const IndexTriple& t);

/// Eigenvalue derived from the ladder actions themselves (constant along
/// each family orbit):
///   C, F: ((m-q)^2 - 1)/4        D, E: ((m+q)^2 - 1)/4
double su11_measured_eigenvalue(char fam, const IndexTriple& t);

/// Quadratic invariant of the full fifteen-generator algebra,
///   ({A+,A-} + {B+,B-} - {C+,C-} - {D+,D-} - {E+,E-} - {F+,F-})/2
///   + (A3^2 + B3^2 + C3^2 + D3^2 + E3^2 + F3^2)/2,
/// identically -3/2 on every basis state.
StateVector casimir_su22(const StateVector& s);

struct FactorizationResidual {
  double plus_minus = 0.0;  // |X+X- s - <closed form> s| on the basis state
  double minus_plus = 0.0;
};

/// Compares X+X- and X-X+ on a basis state against the closed-form
/// eigenvalue products, e.g. A+A- = (l+m)(l-m+1), C-C+ = (l+1+m)(l+1+q).
FactorizationResidual factorization_check(char fam, const IndexTriple& t);

/// Closed-form products used by factorization_check.
std::int64_t factorization_product_plus_minus(char fam, const IndexTriple& t);
std::int64_t factorization_product_minus_plus(char fam, const IndexTriple& t);

/// Max |matrix(X+)^T - matrix(X-)| over the basis with l <= l_max.
double adjointness_check(char fam, HalfInt l_max);

}  // namespace ajf
