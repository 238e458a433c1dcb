#pragma once

#include "sortnet/core_perm.hpp"

#include <cstdint>
#include <vector>

namespace sortnet {

/// The point sigma^{-1} = (sigma^{-1}(1), ..., sigma^{-1}(n)).
std::vector<int> embed(const Permutation& p);

/// Sum z_i = n(n+1)/2 and sum z_i^2 = n(n+1)(2n+1)/6, in 64-bit integers.
bool on_sphere(const std::vector<int>& z);

struct SphereParams {
  double centre = 0;  ///< every coordinate of c equals (n+1)/2
  double radius = 0;  ///< sqrt((n^3 - n) / 12)
};

SphereParams sphere_params(int n);

/// c(theta) = c + u cos(theta) + v sin(theta).
struct GreatCircle {
  int n = 0;
  double centre = 0;
  double radius = 0;
  std::vector<double> u;
  std::vector<double> v;

  std::vector<double> point(double theta) const;
};

struct CircleInvariants {
  double sum_u = 0;
  double sum_v = 0;
  double norm_u = 0;  ///< | |u| - R | / R
  double norm_v = 0;
  double dot = 0;     ///< |u.v| / R^2
  double worst() const;
};

CircleInvariants circle_invariants(const GreatCircle& c);

/// Builds a circle from arbitrary u, v (no orthogonalisation); throws
/// std::invalid_argument on length mismatch.
GreatCircle make_circle(std::vector<double> u, std::vector<double> v);

/// u = sigma_0^{-1} - c, v = the part of sigma_{floor(N/2)}^{-1} - c
/// orthogonal to u, rescaled to length R. Throws std::domain_error for n < 3
/// or when the two points are parallel.
GreatCircle circle_through(const SortingNetwork& w);

/// max_k |sigma_k^{-1} - c(pi k / N)|_inf.
double constant_speed_distance(const SortingNetwork& w, const GreatCircle& c);

struct FitOptions {
  int grid = 8192;
  int refinements = 30;
};

struct CircleFit {
  /// theta_0..theta_N, unwrapped so consecutive values differ by less than pi.
  std::vector<double> theta;
  /// distance[k] = min over theta of |sigma_k^{-1} - c(theta)|_inf (grid + refinement).
  std::vector<double> distance;
  double inf_distance = 0;
  /// max_k |theta_k - pi k / N|.
  double max_linear_deviation = 0;
  /// max_k |theta_{k+1} - theta_k|.
  double max_step = 0;
  /// Grid spacing 2 pi / grid; the minimiser is located to within it before refinement.
  double grid_spacing = 0;
  FitOptions options;
};

/// Per-k L-inf distance to the circle. The grid values are kept current with
/// two coordinate updates per swap; a grid point is recomputed in full only
/// when its maximising coordinate shrinks.
CircleFit fit_circle(const SortingNetwork& w, const GreatCircle& c, FitOptions opt = {});

/// The same sweep over an arbitrary sequence of points in R^n (coordinates,
/// not centred). Only coordinates that change between consecutive points are
/// updated. Throws std::invalid_argument on an empty path or a dimension mismatch.
CircleFit fit_path(const std::vector<std::vector<double>>& path, const GreatCircle& c, FitOptions opt = {});

double inf_distance(const SortingNetwork& w, const GreatCircle& c, FitOptions opt = {});
std::vector<double> theta_sequence(const SortingNetwork& w, const GreatCircle& c, FitOptions opt = {});

/// nu_n: points ((2/n) u_i, (2/n) v_i).
ScaledPointMeasure empirical_nu(const GreatCircle& c);

struct SineFit {
  std::vector<double> amplitude;
  std::vector<double> phase;
  /// max over particles and grid times of |T_i(t) - A_i sin(pi t + Theta_i)|.
  double max_residual = 0;
  int worst_particle = 0;
  int points = 0;
};

/// Least squares of y on {sin(pi t), cos(pi t)}; returns (A, Theta, max residual).
struct SineCurve {
  double amplitude = 0;
  double phase = 0;
  double residual = 0;
};
SineCurve fit_sine_curve(const std::vector<double>& t, const std::vector<double>& y);

/// Fits every trajectory on the grid t_j = j / (points - 1). Throws
/// std::invalid_argument for points < 3.
SineFit sine_fit(const SortingNetwork& w, int points = 512);

}  // namespace sortnet
