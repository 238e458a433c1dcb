#include "sortnet/limit_laws.hpp"

#include "sortnet/eg_bijection.hpp"
#include "sortnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sortnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClamp = 1e-12;

}  // namespace

double semicircle_pdf(double y) {
  if (y <= -1 || y >= 1) return 0;
  return 2 / kPi * std::sqrt(1 - y * y);
}

double semicircle_cdf(double y) {
  if (y <= -1) return 0;
  if (y >= 1) return 1;
  return 0.5 + (y * std::sqrt(1 - y * y) + std::asin(y)) / kPi;
}

double contour_half_width(double alpha) { return std::sqrt(std::max(0.0, alpha * (2 - alpha))); }

double h_alpha(double alpha, double u) {
  if (!(alpha >= -kClamp && alpha <= 2 + kClamp)) throw std::domain_error("h_alpha: alpha outside [0,2]");
  alpha = std::clamp(alpha, 0.0, 2.0);
  if (std::abs(1 - alpha) < 1e-9) {
    if (std::abs(u) > 1 + kClamp) throw std::domain_error("h_alpha: u outside the contour domain");
    return 1;
  }
  if (alpha > 1) return 2 - h_alpha(2 - alpha, u);
  const double w2 = alpha * (2 - alpha);
  if (std::abs(u) > std::sqrt(w2) + kClamp) throw std::domain_error("h_alpha: u outside the contour domain");
  const double q = std::max(0.0, w2 - u * u);
  if (q == 0) return std::abs(u);
  const double r = std::sqrt(q) / (1 - alpha);
  return 2 / kPi * (u * std::atan(u / r) + std::atan(r));
}

double profile_L(double x, double y) {
  const double u = x - y;
  double v = x + y;
  const double au = std::abs(u);
  if (v < au - kClamp || v > 2 - au + kClamp || au > 1 + kClamp) {
    throw std::domain_error("profile_L: point outside the profile region");
  }
  v = std::clamp(v, au, 2 - au);
  const bool upper = v > 1;
  const double target = upper ? 2 - v : v;
  const double uc = std::min(au, 1.0);
  // alpha -> h_alpha(u) increases from |u| (at the smallest admissible alpha) to 1.
  double lo = 1 - std::sqrt(std::max(0.0, 1 - uc * uc));
  double hi = 1;
  if (target <= uc) {
    hi = lo;
  } else if (target < 1) {
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (h_alpha(mid, uc) < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  } else {
    lo = 1;
  }
  const double alpha = 0.5 * (lo + hi);
  return upper ? 2 - alpha : alpha;
}

double octagon_d(int n, std::size_t k) {
  const std::size_t big_n = network_length(n);
  if (big_n == 0) return 0;
  if (k > big_n) throw std::out_of_range("octagon_d: k beyond N");
  const double q = static_cast<double>(k) / static_cast<double>(big_n);
  return n * std::sqrt(std::max(0.0, q * (2 - q)));
}

OctagonReport check_octagon(const SortingNetwork& w, double eps) {
  const int n = w.n();
  const std::size_t big_n = w.length();
  OctagonReport rep;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  ConfigurationCursor cur(w);
  for (std::size_t k = 0;; ++k) {
    const double near = octagon_d(n, k) + eps * n;
    const double far = octagon_d(n, big_n - k) + eps * n;
    for (int i = 1; i <= n; ++i) {
      const int p = cur.particle_at(i);
      const double margin = std::min(near - std::abs(p - i), far - std::abs(p - (n - i)));
      if (margin < rep.worst_margin) {
        rep.worst_margin = margin;
        rep.time = k;
        rep.particle = i;
      }
      if (margin <= 0 && !rep.first_violation_found) {
        rep.first_violation_found = true;
        rep.violation_time = k;
        rep.violation_particle = i;
      }
    }
    if (k == big_n) break;
    cur.advance();
  }
  rep.pass = !rep.first_violation_found;
  return rep;
}

HolderReport check_holder(const SortingNetwork& w, double eps, int grid, double constant) {
  if (grid < 1) throw std::invalid_argument("check_holder: grid must be positive");
  const int n = w.n();
  const auto points = static_cast<std::size_t>(grid) + 1;
  const std::vector<double> traj = trajectory_grid(w, grid);
  std::vector<double> allowance(points);
  for (std::size_t d = 0; d < points; ++d) allowance[d] = constant * std::sqrt(static_cast<double>(d) / grid) + eps;

  HolderReport rep;
  rep.grid = grid;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < points; ++a) {
      const double ta = traj[a * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
      for (std::size_t b = a + 1; b < points; ++b) {
        const double tb = traj[b * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
        const double margin = allowance[b - a] - std::abs(tb - ta);
        if (margin < rep.worst_margin) {
          rep.worst_margin = margin;
          rep.particle = i + 1;
          rep.s = static_cast<double>(a) / grid;
          rep.t = static_cast<double>(b) / grid;
        }
      }
    }
  }
  rep.pass = rep.worst_margin >= 0;
  return rep;
}

double arch_density(double t, double x, double y) {
  const double s = std::sin(kPi * t);
  const double q = s * s + 2 * x * y * std::cos(kPi * t) - x * x - y * y;
  if (q <= 0) return 0;
  return 1 / (2 * kPi * std::sqrt(q));
}

Point2 arch_sample(double t, RandomStream& rng) {
  const double z = 2 * rng.uniform01() - 1;
  const double phi = 2 * kPi * rng.uniform01();
  const double rho = std::sqrt(std::max(0.0, 1 - z * z));
  const double x = rho * std::cos(phi);
  const double y = rho * std::sin(phi);
  return {x, x * std::cos(kPi * t) + y * std::sin(kPi * t)};
}

double arch_radial_cdf(double r) {
  if (r <= 0) return 0;
  if (r >= 1) return 1;
  return 1 - std::sqrt(1 - r * r);
}

double arch_projection_ks(const std::vector<Point2>& points, double t, int directions) {
  const double c = std::cos(kPi * t);
  const double s = std::sin(kPi * t);
  double worst = 0;
  std::vector<double> proj(points.size());
  for (int j = 0; j < directions; ++j) {
    const double theta = kPi * j / directions;
    const double dx = std::cos(theta);
    const double dy = std::sin(theta);
    // d . (x, c x + s y) = (dx + c dy) x + (s dy) y.
    const double ax = dx + c * dy;
    const double ay = s * dy;
    const double len = std::hypot(ax, ay);
    for (std::size_t k = 0; k < points.size(); ++k) proj[k] = dx * points[k].x + dy * points[k].y;
    worst = std::max(worst, stats::ks_distance(proj, [len](double p) { return std::clamp((p + len) / (2 * len), 0.0, 1.0); }));
  }
  return worst;
}

double arch_radial_ks(const std::vector<Point2>& points) {
  std::vector<double> radii(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) radii[k] = std::hypot(points[k].x, points[k].y);
  return stats::ks_distance(radii, arch_radial_cdf);
}

double staircase_profile_deviation(const StandardYoungTableau& t) {
  const int n = t.shape().rows() + 1;
  if (t.shape() != staircase(n)) throw std::invalid_argument("staircase_profile_deviation needs a staircase tableau");
  const double nn = static_cast<double>(n) * n;
  double worst = 0;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - i; ++j) {
      const double target = profile_L(static_cast<double>(i) / n, static_cast<double>(j) / n);
      worst = std::max(worst, std::abs(2.0 * t.at({i, j}) / nn - target));
    }
  }
  return worst;
}

double first_row_deviation(const StandardYoungTableau& t) {
  const int n = t.shape().rows() + 1;
  const auto counts = first_row_counts(t);
  double worst = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) worst = std::max(worst, std::abs(counts[k] - octagon_d(n, k)));
  return worst;
}

double lln_distance(const SortingNetwork& w, int bins_t, int bins_y) {
  if (bins_t < 1 || bins_y < 1) throw std::invalid_argument("lln_distance: bin counts must be positive");
  const auto big_n = static_cast<std::int64_t>(w.length());
  const std::int64_t n = w.n();
  std::vector<double> hist(static_cast<std::size_t>(bins_t) * static_cast<std::size_t>(bins_y), 0.0);
  for (std::int64_t k = 1; k <= big_n; ++k) {
    const std::int64_t bt = (k * bins_t + big_n - 1) / big_n - 1;
    const std::int64_t by = std::min<std::int64_t>(w.swap(static_cast<std::size_t>(k)) * bins_y / n, bins_y - 1);
    hist[static_cast<std::size_t>(bt * bins_y + by)] += 1.0 / static_cast<double>(big_n);
  }
  double tv = 0;
  for (int a = 0; a < bins_t; ++a) {
    for (int b = 0; b < bins_y; ++b) {
      const double mass = (semicircle_cdf(-1 + 2.0 * (b + 1) / bins_y) - semicircle_cdf(-1 + 2.0 * b / bins_y)) / bins_t;
      tv += std::abs(hist[static_cast<std::size_t>(a * bins_y + b)] - mass);
    }
  }
  return tv / 2;
}

}  // namespace sortnet
