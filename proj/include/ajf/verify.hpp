#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ajf/half_int.hpp"

namespace ajf::verify {

enum class CheckStatus { Pass, Fail, Discrepancy };

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // compact context, e.g. worst state or pair
};

/// A place where the measured algebra disagrees with shipped reference data.
/// The measured result is authoritative; the disagreement is reported, never
/// silently patched.
struct Discrepancy {
  std::string subject;       // e.g. "[A-, F-]"
  std::string reference;     // what the shipped table claims
  std::string measured;      // what the operators actually satisfy
  double deviation = 0.0;    // |measured - reference| in operator norm terms
  double residual = 0.0;     // how well the measured form itself closes
};

struct SuiteReport {
  std::string suite;
  std::map<std::string, std::string> parameters;
  std::vector<CheckResult> checks;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;

  bool all_checks_pass() const;
  /// Pass and no discrepancies; the CLI maps this to its exit code.
  bool clean() const;
  double worst_deviation() const;
};

// Default tolerances; the acceptance runner pins its own copies.
inline constexpr double kAlgebraTol = 1e-11;
inline constexpr double kOdeTol = 1e-9;

/// Commutator closure of all 105 generator pairs on basis states with
/// l <= l_max.  Each pair must either match the reference table or, failing
/// that, close on a measured combination (reported as a discrepancy).
SuiteReport run_algebra(HalfInt l_max, double tol = kAlgebraTol);

/// Quadratic invariants: full-algebra Casimir -3/2 on every state and on a
/// seeded random combination, su(2) Casimirs l(l+1), one-parameter family
/// Casimirs diagonal and orbit-constant, with reference labels checked and
/// any disagreement reported.
SuiteReport run_casimir(HalfInt l_max, double tol = kAlgebraTol,
                        std::uint64_t seed = 20250814u);

/// Ladder coefficients against exact integer radicands, annihilation
/// exactly zero, and zero-coefficient / out-of-range coincidence.
SuiteReport run_ladder(HalfInt l_max);

/// Factorization identities X+X- and X-X+ for all six families.
SuiteReport run_factorization(HalfInt l_max, double tol = kAlgebraTol);

/// Adjointness: matrix(X+) transposed equals matrix(X-) on l <= l_max.
SuiteReport run_hermiticity(HalfInt l_max, double tol = 1e-12);

/// Gram matrices of every channel |m|, |q| <= mq_max against the identity,
/// including a node-doubling stability check.
SuiteReport run_ortho(HalfInt mq_max, int extra_levels = 6, double tol = kAlgebraTol,
                      int nodes = 64);

/// Same check restricted to one channel, levels up to l_max.
SuiteReport run_ortho_channel(HalfInt m, HalfInt q, HalfInt l_max,
                              double tol = kAlgebraTol, int nodes = 64);

/// Normalized residual of the hypergeometric equation on an interior grid.
SuiteReport run_ode(HalfInt l_max, double tol = kOdeTol, int grid_points = 20);

/// The four index symmetries, pointwise on an interior grid.
SuiteReport run_symmetry(HalfInt l_max, double tol = 1e-12, int grid_points = 20);

/// Reflection relations between ladder families as coefficient identities.
SuiteReport run_weyl(HalfInt l_max, double tol = 1e-12, int grid_points = 20);

/// Differential versus algebraic action of all twelve ladder generators.
SuiteReport run_equivalence(HalfInt l_max, double tol = 1e-10, int grid_points = 20);

/// Jacobi-to-associated-Legendre bridge at equal exponents.
SuiteReport run_legendre(int n_max, int alpha_max, double tol = 1e-11,
                         int grid_points = 10);

/// Expansion facility: member round-trips and the Parseval tail of exp.
SuiteReport run_expansion(double tol = 1e-12);

/// Every suite above at scales matching the CLI defaults.
std::vector<SuiteReport> run_all(HalfInt l_max, double tol = kAlgebraTol);

std::string render_text(const SuiteReport& report);
std::string render_json(const SuiteReport& report);
std::string render_json(const std::vector<SuiteReport>& reports,
                        const std::string& command_echo);

}  // namespace ajf::verify
