#include "sortnet/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sortnet::stats {

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance needs samples");
  std::sort(samples.begin(), samples.end());
  const auto m = static_cast<double>(samples.size());
  double worst = 0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double f = cdf(samples[i]);
    worst = std::max({worst, std::abs(static_cast<double>(i) / m - f), std::abs(static_cast<double>(j) / m - f)});
    i = j;
  }
  return worst;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample needs two nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double worst = 0;
  while (i < a.size() || j < b.size()) {
    double x;
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      x = a[i];
    } else {
      x = b[j];
    }
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    worst = std::max(worst, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return worst;
}

ChiSquare chi_square(const std::vector<std::int64_t>& observed, const std::vector<double>& probabilities) {
  if (observed.size() != probabilities.size() || observed.size() < 2) {
    throw std::invalid_argument("chi_square needs matching vectors with at least two cells");
  }
  const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::int64_t{0}));
  ChiSquare out;
  for (std::size_t c = 0; c < observed.size(); ++c) {
    const double expected = total * probabilities[c];
    if (expected <= 0) {
      if (observed[c] != 0) out.statistic = std::numeric_limits<double>::infinity();
      continue;
    }
    const double d = static_cast<double>(observed[c]) - expected;
    out.statistic += d * d / expected;
    ++out.dof;
  }
  --out.dof;
  if (out.dof <= 0) {
    out.p_value = out.statistic == 0 ? 1.0 : 0.0;
  } else if (std::isinf(out.statistic)) {
    out.p_value = 0;
  } else {
    out.p_value = boost::math::gamma_q(0.5 * out.dof, 0.5 * out.statistic);
  }
  return out;
}

double binomial_z(std::int64_t k, std::int64_t m, double p) {
  const double mean = static_cast<double>(m) * p;
  const double var = mean * (1 - p);
  const double d = static_cast<double>(k) - mean;
  if (var <= 0) return d == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), d);
  return d / std::sqrt(var);
}

}  // namespace sortnet::stats
