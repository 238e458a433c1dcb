#include "sortnet/hookwalk.hpp"
#include "sortnet/limit_laws.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sortnet;

namespace {

constexpr double kPi = std::numbers::pi;

double integrate(double (*f)(double), double a, double b) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate(f, a, b);
}

}  // namespace

TEST_CASE("semicircle law") {
  CHECK(semicircle_cdf(0) == doctest::Approx(0.5));
  CHECK(semicircle_pdf(0) == doctest::Approx(2 / kPi));
  CHECK(semicircle_cdf(1) == 1);
  CHECK(semicircle_cdf(-1) == 0);
  CHECK(semicircle_pdf(1.5) == 0);
  for (double y : {-0.9, -0.4, 0.1, 0.7, 0.99}) {
    CHECK(std::abs(integrate(semicircle_pdf, -1, y) - semicircle_cdf(y)) < 1e-8);
  }
}

TEST_CASE("contour function") {
  for (double u : {-1.0, -0.3, 0.0, 0.8}) CHECK(h_alpha(1, u) == 1);
  CHECK(h_alpha(0.5, 0) == doctest::Approx(2.0 / 3).epsilon(1e-14));
  for (double a : {0.1, 0.4, 0.75, 0.99}) {
    const double w = contour_half_width(a);
    CHECK(h_alpha(a, w) == doctest::Approx(w));
    CHECK(h_alpha(a, -w) == doctest::Approx(w));
    for (double f : {0.0, 0.3, 0.9}) {
      CHECK(h_alpha(a, f * w) == h_alpha(a, -f * w));
      CHECK(h_alpha(2 - a, f * w) == doctest::Approx(2 - h_alpha(a, f * w)).epsilon(1e-15));
      CHECK(h_alpha(a, f * w) >= f * w - 1e-15);
      CHECK(h_alpha(a, f * w) <= 1);
    }
  }
  CHECK_THROWS_AS(h_alpha(0.5, 0.9), std::domain_error);
  CHECK_THROWS_AS(h_alpha(2.5, 0), std::domain_error);
  // Continuity through alpha = 1.
  CHECK(h_alpha(1 - 1e-8, 0.3) == doctest::Approx(1).epsilon(1e-7));
  CHECK(h_alpha(1 + 1e-8, 0.3) == doctest::Approx(1).epsilon(1e-7));
}

TEST_CASE("first-order contour expansion") {
  // |h_{1-d}(u) - (1 - (2/pi) sqrt(1-u^2) d)| / d^3 stays bounded as d shrinks.
  double c_fit = 0;
  for (double d : {0.1, 0.05, 0.025, 0.0125}) {
    double worst = 0;
    for (int k = 0; k <= 180; ++k) {
      const double u = -0.9 + 0.01 * k;
      const double err = std::abs(h_alpha(1 - d, u) - (1 - 2 / kPi * std::sqrt(1 - u * u) * d));
      worst = std::max(worst, err / (d * d * d));
    }
    if (d == 0.1) {
      c_fit = worst;
    } else {
      CHECK(worst <= 1.05 * c_fit);
    }
  }
  CHECK(c_fit < 10);
}

TEST_CASE("profile L") {
  CHECK(profile_L(0.5, 0.5) == doctest::Approx(1));
  CHECK(profile_L(1.0 / 3, 1.0 / 3) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(profile_L(0, 0) == doctest::Approx(0));
  for (double y : {0.2, 0.6, 0.95}) CHECK(profile_L(0, y) == doctest::Approx(1 - std::sqrt(1 - y * y)).epsilon(1e-9));
  for (double x : {0.1, 0.4, 0.9}) CHECK(profile_L(x, 1 - x) == doctest::Approx(1));
  CHECK_THROWS_AS(profile_L(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(profile_L(1.2, 0.1), std::domain_error);
  RandomStream rng(4, 0);
  for (int k = 0; k < 2000; ++k) {
    const double x = rng.uniform01();
    const double y = rng.uniform01();
    const double u = x - y;
    const double v = x + y;
    if (v < std::abs(u) || v > 2 - std::abs(u)) continue;
    const double a = profile_L(x, y);
    CHECK(h_alpha(a, u) == doctest::Approx(v).epsilon(1e-8));
  }
}

TEST_CASE("octagon bounds") {
  CHECK(octagon_d(10, 0) == 0);
  CHECK(octagon_d(10, 45) == doctest::Approx(10));
  CHECK(octagon_d(9, 18) == doctest::Approx(9 * std::sqrt(3.0) / 2));
  RandomStream rng(21, 0);
  const auto w = sample_usn(60, rng);
  CHECK(check_octagon(w, 1.0).pass);
  CHECK_FALSE(check_octagon(bubble_sort_network(500), 0.01).pass);
  for (int rep = 0; rep < 3; ++rep) {
    const auto r = check_octagon(sample_usn(300, rng), 0.15);
    CHECK(r.pass);
    CHECK(r.worst_margin > 0);
  }
}

TEST_CASE("Hoelder check") {
  RandomStream rng(22, 0);
  const auto w = sample_usn(300, rng);
  const auto r = check_holder(w, 0.2, 100);
  CHECK(r.pass);
  CHECK(r.s < r.t);
  // No pair can leave more room than an adjacent pair of a constant trajectory.
  CHECK(r.worst_margin <= 0.2 + std::sqrt(8.0 / 100) + 1e-12);
  CHECK(r.grid == 100);
  CHECK_FALSE(check_holder(w, 0.0, 100, 1.0).pass);
  // The bubble-sort trajectories move at speed ~2 for a short time and then stop.
  CHECK(check_holder(bubble_sort_network(40), 0.5, 50).worst_margin < 0.5);
}

TEST_CASE("Archimedes measures") {
  CHECK(arch_density(0.5, 0, 0) == doctest::Approx(1 / (2 * kPi)));
  CHECK(arch_density(0.5, 0.8, 0.6) == 0);
  CHECK(arch_density(0.5, 0.9, 0.7) == 0);
  // Density of the sheared measure matches the change of variables.
  for (double t : {0.2, 0.5, 0.8}) {
    const double c = std::cos(kPi * t);
    const double s = std::sin(kPi * t);
    for (double x : {-0.5, 0.1, 0.6}) {
      for (double y : {-0.3, 0.2}) {
        CHECK(arch_density(t, x, x * c + y * s) == doctest::Approx(arch_density(0.5, x, y) / s));
      }
    }
  }
  RandomStream rng(23, 0);
  for (double t : {0.5, 0.3}) {
    std::vector<Point2> pts(100000);
    for (auto& p : pts) p = arch_sample(t, rng);
    CHECK(arch_projection_ks(pts, t) < 0.01);
    if (t == 0.5) CHECK(arch_radial_ks(pts) < 0.01);
  }
  CHECK(arch_radial_cdf(0) == 0);
  CHECK(arch_radial_cdf(1) == 1);
}

TEST_CASE("staircase profile") {
  CHECK(staircase_profile_deviation(StandardYoungTableau(std::vector<std::vector<int>>{{1}})) == doctest::Approx(0.5));
  RandomStream rng(24, 0);
  const auto t = sample_staircase_tableau(200, rng);
  CHECK(staircase_profile_deviation(t) < 0.1);
  CHECK(first_row_deviation(t) < 0.1 * 200);
  CHECK_THROWS_AS(staircase_profile_deviation(StandardYoungTableau(std::vector<std::vector<int>>{{1, 2}})),
                  std::invalid_argument);
}

TEST_CASE("law of large numbers distance") {
  RandomStream rng(25, 0);
  CHECK(lln_distance(sample_usn(500, rng), 10, 10) < 0.1);
  CHECK(lln_distance(bubble_sort_network(1000), 10, 10) > 0.3);
  // The Fig. 3 network: every swap in one bin on a 1 x 1 grid.
  CHECK(lln_distance(SortingNetwork(6, {1, 2, 1, 3, 4, 5, 2, 1, 3, 2, 1, 4, 3, 2, 1}), 1, 1) == doctest::Approx(0));
}
