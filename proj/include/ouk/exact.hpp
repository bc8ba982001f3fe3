#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ouk {

// Exact arithmetic used by the combinatorial and symbolic layers.  Values like
// S(30, 15) and 20! overflow 64-bit words, so everything exact is kept in
// arbitrary precision and converted to double only at the numerical boundary.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // divides exactly: r is a binomial prefix
  }
  return r;
}

inline Int int_pow(Int base, int exp) {
  Int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

}  // namespace ouk
