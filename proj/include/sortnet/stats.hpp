#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sortnet::stats {

/// sup_x |F_n(x) - F(x)| for the empirical CDF of `samples`, taking both the
/// value and the left limit of F_n at every atom. F must be continuous.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

/// sup_x |F_a(x) - F_b(x)| for two empirical CDFs (ties handled exactly).
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct ChiSquare {
  double statistic = 0;
  int dof = 0;
  double p_value = 1;
};

/// Pearson goodness of fit for counts against cell probabilities (which must
/// sum to 1). The p-value is the upper regularized gamma Q(dof/2, X^2/2).
ChiSquare chi_square(const std::vector<std::int64_t>& observed, const std::vector<double>& probabilities);

/// (k - m p) / sqrt(m p (1 - p)); 0 when p is 0 or 1 and k matches.
double binomial_z(std::int64_t k, std::int64_t m, double p);

}  // namespace sortnet::stats
