#include "ajf/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "ajf/jacobi.hpp"

namespace ajf {

QuadratureRule gauss_legendre(int count) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count must be positive");
  if (count > 100000) throw std::length_error("gauss_legendre: count capped at 100000");

  QuadratureRule rule;
  rule.x.resize(count);
  rule.w.resize(count);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev estimate of the i-th root, then Newton on the Legendre
    // recurrence (j+1) P_(j+1) = (2j+1) x P_j - j P_(j-1).
    double z = std::cos(M_PI * (i + 0.75) / (count + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= count; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = count * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.x[i] = -z;
    rule.x[count - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[i] = w;
    rule.w[count - 1 - i] = w;
  }
  return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * f(rule.x[i]);
  return s;
}

bool channel_valid(const Channel& ch) {
  return (ch.m + ch.q).is_integer() && (ch.m - ch.q).is_integer();
}

HalfInt channel_l_min(const Channel& ch) { return std::max(abs(ch.m), abs(ch.q)); }

std::vector<HalfInt> channel_levels(const Channel& ch, HalfInt l_max) {
  if (!channel_valid(ch))
    throw std::domain_error("channel (m, q) requires m+q and m-q to be integers");
  std::vector<HalfInt> levels;
  for (HalfInt l = channel_l_min(ch); l <= l_max; l += one()) levels.push_back(l);
  return levels;
}

namespace {

// Member values at the quadrature nodes, one row per level.
std::vector<std::vector<double>> tabulate_channel(const Channel& ch,
                                                  const std::vector<HalfInt>& levels,
                                                  const QuadratureRule& rule) {
  std::vector<std::vector<double>> vals(levels.size(),
                                        std::vector<double>(rule.x.size()));
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const IndexTriple t{levels[i], ch.m, ch.q};
    for (std::size_t k = 0; k < rule.x.size(); ++k) vals[i][k] = ajf(t, rule.x[k]);
  }
  return vals;
}

}  // namespace

GramResult gram_matrix(const Channel& ch, HalfInt l_max, const QuadratureRule& rule) {
  GramResult res;
  res.levels = channel_levels(ch, l_max);
  const std::size_t n = res.levels.size();
  res.matrix.assign(n, std::vector<double>(n, 0.0));
  if (n == 0) return res;

  // Same-channel products are polynomials of degree l + l'; warn when the
  // rule cannot integrate the largest one exactly.
  const double max_degree = 2.0 * res.levels.back().to_double();
  res.precision_warning = (2.0 * rule.x.size() - 1.0) < max_degree;

  const auto vals = tabulate_channel(ch, res.levels, rule);
  for (std::size_t i = 0; i < n; ++i) {
    const double si = std::sqrt(res.levels[i].to_double() + 0.5);
    for (std::size_t j = i; j < n; ++j) {
      const double sj = std::sqrt(res.levels[j].to_double() + 0.5);
      double acc = 0.0;
      for (std::size_t k = 0; k < rule.x.size(); ++k)
        acc += rule.w[k] * vals[i][k] * vals[j][k];
      const double g = si * sj * acc;
      res.matrix[i][j] = g;
      res.matrix[j][i] = g;
      if (i == j)
        res.max_diag_dev = std::max(res.max_diag_dev, std::abs(g - 1.0));
      else
        res.max_offdiag = std::max(res.max_offdiag, std::abs(g));
    }
  }
  return res;
}

Expansion expand(const std::function<double(double)>& f, const Channel& ch,
                 HalfInt l_max, const QuadratureRule& rule,
                 WeightConvention convention) {
  Expansion e;
  e.channel = ch;
  e.convention = convention;
  const auto levels = channel_levels(ch, l_max);
  const auto vals = tabulate_channel(ch, levels, rule);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.x.size(); ++k)
      acc += rule.w[k] * vals[i][k] * f(rule.x[k]);
    if (convention == WeightConvention::Weighted)
      acc *= levels[i].to_double() + 0.5;
    e.coeffs.emplace_back(levels[i], acc);
  }
  return e;
}

double reconstruct(const Expansion& e, double x) {
  double s = 0.0;
  for (const auto& [l, c] : e.coeffs) s += c * ajf(IndexTriple{l, e.channel.m, e.channel.q}, x);
  return s;
}

ParsevalResult parseval_check(const std::function<double(double)>& f, const Channel& ch,
                              HalfInt l_max, const QuadratureRule& rule) {
  ParsevalResult r;
  r.norm2 = integrate(rule, [&f](double x) { return f(x) * f(x); });
  const Expansion e = expand(f, ch, l_max, rule, WeightConvention::Weighted);
  for (const auto& [l, c] : e.coeffs) r.sum += c * c / (l.to_double() + 0.5);
  r.tail = r.norm2 - r.sum;
  return r;
}

}  // namespace ajf
