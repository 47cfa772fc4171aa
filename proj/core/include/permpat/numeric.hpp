#ifndef PERMPAT_NUMERIC_HPP
#define PERMPAT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace permpat {

// Exact arbitrary-precision integers and rationals. Every enumerative
// result in the library is computed in these types; floating point only
// appears in the stochastic and asymptotics modules.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt big_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is a binomial coefficient
  }
  return r;
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

// True iff q is an integer (reduced denominator is 1).
inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline BigInt to_integer(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

}  // namespace permpat

#endif  // PERMPAT_NUMERIC_HPP
