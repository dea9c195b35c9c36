#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace ajf::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Gamma at a positive integer argument, by ascending product from Gamma(1)=1.
inline Int gamma_int(int arg) {
  if (arg < 1) throw std::domain_error("gamma_int requires a positive integer argument");
  return factorial(arg - 1);
}

/// Rising factorial (a)_k = a (a+1) ... (a+k-1).
inline Rat pochhammer(const Rat& a, int k) {
  Rat r = 1;
  for (int j = 0; j < k; ++j) r *= a + j;
  return r;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace ajf::exact
