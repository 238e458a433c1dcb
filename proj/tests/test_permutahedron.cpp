#include "oracles.hpp"
#include "sortnet/counting.hpp"
#include "sortnet/hookwalk.hpp"
#include "sortnet/permutahedron.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

using namespace sortnet;

namespace {

constexpr double kPi = std::numbers::pi;

const SortingNetwork kFig3(6, {1, 2, 1, 3, 4, 5, 2, 1, 3, 2, 1, 4, 3, 2, 1});

double brute_distance(const std::vector<int>& z, const GreatCircle& c, double theta) {
  const auto p = c.point(theta);
  double m = 0;
  for (std::size_t i = 0; i < z.size(); ++i) m = std::max(m, std::abs(z[i] - p[i]));
  return m;
}

}  // namespace

TEST_CASE("embedding and sphere identities") {
  CHECK(embed(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(embed(Permutation::reverse(4)) == std::vector<int>{4, 3, 2, 1});
  CHECK(embed(Permutation({2, 3, 1})) == std::vector<int>{3, 1, 2});
  CHECK(on_sphere({1, 2, 3, 4}));
  CHECK_FALSE(on_sphere({1, 1, 4, 4}));  // right sum, wrong sum of squares

  CHECK(sphere_params(4).radius == doctest::Approx(std::sqrt(5.0)));
  CHECK(sphere_params(2).radius == doctest::Approx(std::sqrt(0.5)));
  CHECK(sphere_params(4).centre == 2.5);

  for (int n = 1; n <= 6; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    const auto sp = sphere_params(n);
    do {
      const auto z = embed(Permutation(v));
      CHECK(on_sphere(z));
      double r2 = 0;
      for (int x : z) r2 += (x - sp.centre) * (x - sp.centre);
      CHECK(std::sqrt(r2) == doctest::Approx(sp.radius));
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST_CASE("consecutive configurations are sqrt(2) apart") {
  ConfigurationCursor cur(kFig3);
  std::vector<int> prev(cur.locations().begin(), cur.locations().end());
  while (!cur.at_end()) {
    cur.advance();
    std::vector<int> next(cur.locations().begin(), cur.locations().end());
    int d2 = 0;
    for (std::size_t i = 0; i < next.size(); ++i) d2 += (next[i] - prev[i]) * (next[i] - prev[i]);
    CHECK(d2 == 2);
    prev = next;
  }
}

TEST_CASE("two-point great circle") {
  for (const auto& w : enumerate_networks(4)) {
    const GreatCircle c = circle_through(w);
    CHECK(circle_invariants(c).worst() < 1e-12);
    CHECK(brute_distance(embed(configuration(w, 0)), c, 0) == 0);
    const auto mid = embed(configuration(w, w.length() / 2));
    double du = 0, dv = 0;
    for (std::size_t i = 0; i < mid.size(); ++i) {
      du += (mid[i] - c.centre) * c.u[i];
      dv += (mid[i] - c.centre) * c.v[i];
    }
    const double star = std::atan2(dv, du);
    CHECK(star > 0);
    CHECK(star < kPi);
    CHECK(brute_distance(mid, c, star) < 1e-9);
  }
  CHECK_THROWS_AS(circle_through(SortingNetwork(2, {1})), std::domain_error);

  RandomStream rng(3, 0);
  const auto w = sample_usn(80, rng);
  CHECK(circle_invariants(circle_through(w)).worst() < 1e-9);
}

TEST_CASE("empirical nu") {
  const GreatCircle c = circle_through(kFig3);
  const auto nu = empirical_nu(c);
  REQUIRE(nu.points.size() == 6);
  for (int i = 1; i <= 6; ++i) CHECK(nu.points[static_cast<std::size_t>(i - 1)].x == doctest::Approx(2.0 * i / 6 - 1 - 1.0 / 6));
}

TEST_CASE("circle fit agrees with a direct search") {
  RandomStream rng(11, 2);
  const auto w = sample_usn(8, rng);
  const GreatCircle c = circle_through(w);
  const CircleFit fit = fit_circle(w, c);
  REQUIRE(fit.theta.size() == w.length() + 1);
  CHECK(fit.theta[0] == 0);
  CHECK(fit.distance[0] == 0);
  double worst = 0;
  const int fine = 200000;
  for (std::size_t k = 0; k <= w.length(); ++k) {
    const auto z = embed(configuration(w, k));
    double best = 1e300;
    for (int g = 0; g < fine; ++g) best = std::min(best, brute_distance(z, c, 2 * kPi * g / fine));
    CHECK(fit.distance[k] <= best + 1e-12);
    CHECK(fit.distance[k] >= best - 1e-3);
    CHECK(brute_distance(z, c, fit.theta[k]) == doctest::Approx(fit.distance[k]).epsilon(1e-12));
    worst = std::max(worst, best);
  }
  CHECK(fit.inf_distance == doctest::Approx(worst).epsilon(1e-3));
  for (std::size_t k = 1; k < fit.theta.size(); ++k) CHECK(std::abs(fit.theta[k] - fit.theta[k - 1]) < kPi);
}

TEST_CASE("synthetic path on the circle") {
  const GreatCircle c = circle_through(kFig3);
  const std::size_t steps = 37;
  std::vector<std::vector<double>> path;
  for (std::size_t k = 0; k <= steps; ++k) path.push_back(c.point(kPi * static_cast<double>(k) / steps));
  const CircleFit fit = fit_path(path, c);
  CHECK(fit.inf_distance < 1e-6);
  CHECK(fit.max_linear_deviation < 1e-6);
  CHECK(fit.theta.back() == doctest::Approx(kPi).epsilon(1e-9));
}

TEST_CASE("inf distance never exceeds the constant-speed distance") {
  for (const auto& w : enumerate_networks(5)) {
    const GreatCircle c = circle_through(w);
    CHECK(inf_distance(w, c) <= constant_speed_distance(w, c) + 1e-12);
  }
  RandomStream rng(5, 1);
  const auto w = sample_usn(100, rng);
  const GreatCircle c = circle_through(w);
  const CircleFit fit = fit_circle(w, c);
  const double cs = constant_speed_distance(w, c);
  CHECK(fit.inf_distance <= cs);
  CHECK(cs / 100 < 0.3);
  CHECK(std::abs(fit.theta.back() - kPi) < 0.2);
}

TEST_CASE("bubble sort is far from its great circle") {
  const auto w = bubble_sort_network(100);
  CHECK(constant_speed_distance(w, circle_through(w)) / 100 > 0.8);
}

TEST_CASE("sine fits") {
  std::vector<double> t, y;
  for (int j = 0; j < 512; ++j) {
    t.push_back(j / 511.0);
    y.push_back(0.5 * std::sin(kPi * t.back() + 0.3));
  }
  const SineCurve f = fit_sine_curve(t, y);
  CHECK(f.residual < 1e-9);
  CHECK(f.amplitude == doctest::Approx(0.5));
  CHECK(f.phase == doctest::Approx(0.3));

  RandomStream rng(9, 0);
  const auto w = sample_usn(60, rng);
  const SineFit fit = sine_fit(w);
  REQUIRE(fit.amplitude.size() == 60);
  CHECK(fit.points == 512);
  CHECK(fit.max_residual > 0);
  CHECK(fit.max_residual < 1);
  const double t1 = scaled_trajectory(w, 1, 0);
  CHECK(std::abs(fit.amplitude[0] * std::sin(fit.phase[0]) - t1) <= fit.max_residual + 1e-12);
  CHECK_THROWS_AS(sine_fit(w, 2), std::invalid_argument);
}
