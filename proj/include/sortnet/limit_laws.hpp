#pragma once

#include "sortnet/core_perm.hpp"
#include "sortnet/random_stream.hpp"
#include "sortnet/tableaux.hpp"

#include <cstddef>
#include <vector>

namespace sortnet {

// Semicircle law on (-1, 1).
double semicircle_pdf(double y);
double semicircle_cdf(double y);

/// Largest |u| on the contour h_alpha: sqrt(alpha (2 - alpha)).
double contour_half_width(double alpha);

/// h_alpha(u) = (2/pi) [u atan(u/R) + atan(R)], R = sqrt(alpha(2-alpha) - u^2) / (1 - alpha),
/// for alpha in [0,1]; h_{2-alpha} = 2 - h_alpha. Throws std::domain_error
/// for alpha outside [0,2] or |u| beyond the half-width (up to 1e-12).
double h_alpha(double alpha, double u);

/// The alpha in [0,2] with h_alpha(x - y) = x + y, by bisection to 1e-10.
/// Throws std::domain_error when (u, v) = (x - y, x + y) has v < |u| or
/// v > 2 - |u| (beyond a 1e-12 clamp).
double profile_L(double x, double y);

/// d_k = n sqrt((k/N)(2 - k/N)).
double octagon_d(int n, std::size_t k);

struct OctagonReport {
  bool pass = true;
  /// min over (i,k) and the four one-sided bounds of (bound - |deviation|).
  double worst_margin = 0;
  /// Where the worst margin occurs (or the first violation, if any).
  std::size_t time = 0;
  int particle = 0;
  bool first_violation_found = false;
  std::size_t violation_time = 0;
  int violation_particle = 0;
};

/// |sigma_k(i) - i| < d_k + eps n and |sigma_k(i) - (n - i)| < d_{N-k} + eps n for all i, k.
OctagonReport check_octagon(const SortingNetwork& w, double eps);

struct HolderReport {
  bool pass = true;
  /// min over particles and grid pairs s < t of sqrt(8)|t-s|^{1/2} + eps - |T_i(t) - T_i(s)|.
  double worst_margin = 0;
  int particle = 0;
  double s = 0;
  double t = 0;
  int grid = 0;
};

/// Evaluates |T_i(t) - T_i(s)| <= constant |t-s|^{1/2} + eps over the grid
/// {0, 1/grid, ..., 1} for every particle. The default constant is sqrt(8).
HolderReport check_holder(const SortingNetwork& w, double eps, int grid, double constant = 2.8284271247461903);

/// Density of Arch_t at (x, y).
double arch_density(double t, double x, double y);

/// Uniform point on the unit 2-sphere, projected to the plane and sheared by
/// (x, y) -> (x, x cos(pi t) + y sin(pi t)).
Point2 arch_sample(double t, RandomStream& rng);

/// P(|X| <= r) under Arch_{1/2}: 1 - sqrt(1 - r^2).
double arch_radial_cdf(double r);

/// Largest KS distance, over `directions` equally spaced angles in [0, pi),
/// between the projections of the points and those of Arch_t (uniform on
/// [-l, l] with l the length of the sheared direction).
double arch_projection_ks(const std::vector<Point2>& points, double t, int directions = 8);

/// KS distance between the radii of the points and arch_radial_cdf.
double arch_radial_ks(const std::vector<Point2>& points);

/// max over cells of |2 t_{i,j} / n^2 - L(i/n, j/n)|. Throws std::invalid_argument
/// unless the tableau has staircase shape.
double staircase_profile_deviation(const StandardYoungTableau& t);

/// max_k |R_k(T) - d_k| over k = 0..N.
double first_row_deviation(const StandardYoungTableau& t);

/// Total variation distance between the histogram of eta on a bins_t x bins_y
/// grid of [0,1] x [-1,1] and the Leb x semicircle cell masses. Time k/N falls in
/// bin ceil(k bins_t / N) - 1; location s falls in bin floor(s bins_y / n).
double lln_distance(const SortingNetwork& w, int bins_t, int bins_y);

}  // namespace sortnet
