#pragma once

#include <string>
#include <vector>

#include "ajf/half_int.hpp"

namespace ajf {

/// Label (l, m, q) of an algebraic Jacobi function.
struct IndexTriple {
  HalfInt l, m, q;

  static constexpr IndexTriple from_twice(int l2, int m2, int q2) {
    return IndexTriple{HalfInt::from_twice(l2), HalfInt::from_twice(m2),
                       HalfInt::from_twice(q2)};
  }

  static constexpr IndexTriple of(int l, int m, int q) {
    return IndexTriple{HalfInt::of(l), HalfInt::of(m), HalfInt::of(q)};
  }

  constexpr auto operator<=>(const IndexTriple&) const = default;
};

/// Classical Jacobi polynomial label (degree n, exponents alpha, beta).
struct ClassicalIndex {
  int n = 0;
  int alpha = 0;
  int beta = 0;

  constexpr auto operator<=>(const ClassicalIndex&) const = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks the unitary range: 2l, l-m, l-q nonnegative integers, |m|,|q| <= l.
ValidationReport validate(const IndexTriple& t);

bool is_valid(const IndexTriple& t);

/// Throws std::domain_error naming every violated constraint.
void require_valid(const IndexTriple& t);

/// (l, m, q) -> (n, alpha, beta) = (l-m, m+q, m-q).
ClassicalIndex to_classical(const IndexTriple& t);

/// (n, alpha, beta) -> (n + (alpha+beta)/2, (alpha+beta)/2, (alpha-beta)/2).
IndexTriple from_classical(const ClassicalIndex& c);

/// All (2l+1)^2 members of the level-l multiplet, lexicographic in (m, q).
std::vector<IndexTriple> enumerate_multiplet(HalfInt l);

/// Every valid triple with l <= l_max, ordered by (l, m, q).
std::vector<IndexTriple> enumerate_states(HalfInt l_max);

std::string to_string(const IndexTriple& t);
std::string to_string(const ClassicalIndex& c);

}  // namespace ajf
