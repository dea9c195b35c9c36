#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ajf/indices.hpp"

namespace ajf {

struct QuadratureRule {
  std::vector<double> x;  // strictly increasing nodes in (-1, 1)
  std::vector<double> w;  // positive weights, sum 2
};

/// Gauss-Legendre rule by Newton iteration on the Legendre recurrence.
/// count in [1, 100000].
QuadratureRule gauss_legendre(int count);

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

/// Fixed (m, q) family of functions indexed by the level l.
struct Channel {
  HalfInt m, q;
};

/// A channel is realizable when m+q and m-q are integers.
bool channel_valid(const Channel& ch);

/// Lowest admissible level sup(|m|, |q|).
HalfInt channel_l_min(const Channel& ch);

/// Levels l_min, l_min+1, ..., <= l_max.
std::vector<HalfInt> channel_levels(const Channel& ch, HalfInt l_max);

struct GramResult {
  std::vector<HalfInt> levels;
  std::vector<std::vector<double>> matrix;  // symmetrized, expected identity
  double max_diag_dev = 0.0;                // max |G_ii - 1|
  double max_offdiag = 0.0;                 // max |G_ij|, i != j
  bool precision_warning = false;           // rule too short for the degrees involved
};

/// Pairwise inner products scaled by sqrt(l+1/2) sqrt(l'+1/2).
GramResult gram_matrix(const Channel& ch, HalfInt l_max, const QuadratureRule& rule);

/// Normalization of expansion coefficients.  Weighted is the convention the
/// rest of the library uses: c_l = (l+1/2) Int J_l f dx, which makes
/// reconstruct a projection.  Unweighted drops the (l+1/2) factor and is
/// exposed for comparison only.
enum class WeightConvention { Weighted, Unweighted };

struct Expansion {
  Channel channel;
  WeightConvention convention = WeightConvention::Weighted;
  std::vector<std::pair<HalfInt, double>> coeffs;  // (level, c_l)
};

Expansion expand(const std::function<double(double)>& f, const Channel& ch,
                 HalfInt l_max, const QuadratureRule& rule,
                 WeightConvention convention = WeightConvention::Weighted);

double reconstruct(const Expansion& e, double x);

struct ParsevalResult {
  double norm2 = 0.0;  // Int f^2 dx
  double sum = 0.0;    // sum of c_l^2 / (l+1/2)
  double tail = 0.0;   // norm2 - sum, nonnegative up to quadrature error
};

ParsevalResult parseval_check(const std::function<double(double)>& f, const Channel& ch,
                              HalfInt l_max, const QuadratureRule& rule);

}  // namespace ajf
