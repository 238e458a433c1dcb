#include "sortnet/bigint.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sortnet {

namespace {

/// Writes |v| = m * 2^e with m holding at most 62 significant bits.
double top_bits(const BigCount& v, long& exponent) {
  const auto bits = static_cast<long>(boost::multiprecision::msb(v)) + 1;
  exponent = bits > 62 ? bits - 62 : 0;
  const BigCount m = v >> exponent;
  return m.convert_to<double>();
}

}  // namespace

double log_big(const BigCount& v) {
  if (v <= 0) throw std::domain_error("log of a nonpositive integer");
  long e = 0;
  const double m = top_bits(v, e);
  return std::log(m) + static_cast<double>(e) * std::numbers::ln2;
}

double log_rational(const ExactRational& q) {
  if (q <= 0) throw std::domain_error("log of a nonpositive rational");
  return log_big(boost::multiprecision::numerator(q)) - log_big(boost::multiprecision::denominator(q));
}

double to_double(const ExactRational& q) {
  if (q == 0) return 0.0;
  const BigCount num = abs(boost::multiprecision::numerator(q));
  const BigCount den = boost::multiprecision::denominator(q);
  const auto shift = static_cast<long>(boost::multiprecision::msb(den)) -
                     static_cast<long>(boost::multiprecision::msb(num)) + 64;
  const BigCount scaled = shift >= 0 ? BigCount((num << shift) / den) : BigCount((num >> -shift) / den);
  const double r = std::ldexp(scaled.convert_to<double>(), static_cast<int>(-shift));
  return q < 0 ? -r : r;
}

}  // namespace sortnet
