#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sortnet {

/// Exact nonnegative counts (tableau dimensions, reduced-word counts).
using BigCount = boost::multiprecision::cpp_int;

/// Exact probabilities. Always kept in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

inline BigCount factorial(unsigned long m) {
  BigCount r = 1;
  for (unsigned long i = 2; i <= m; ++i) r *= i;
  return r;
}

inline BigCount binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_string(const BigCount& v) { return v.str(); }

/// Natural log of a positive big integer, accurate to double precision.
double log_big(const BigCount& v);

/// Natural log of a positive rational.
double log_rational(const ExactRational& q);

/// Nearest double (may underflow to 0 for tiny values).
double to_double(const ExactRational& q);

}  // namespace sortnet
