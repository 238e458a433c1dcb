#include "oracles.hpp"
#include "sortnet/core_perm.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace sortnet;

namespace {

const std::vector<int> kFig3 = {1, 2, 1, 3, 4, 5, 2, 1, 3, 2, 1, 4, 3, 2, 1};

SortingNetwork fig3() { return SortingNetwork(6, kFig3); }

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation p({3, 4, 2, 5, 6, 1});
  CHECK(p(1) == 3);
  CHECK(p.inverse()(3) == 1);
  CHECK(p * p.inverse() == Permutation::identity(6));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  const Permutation a({2, 3, 1});
  const Permutation b({1, 3, 2});
  CHECK((a * b)(2) == a(b(2)));
}

TEST_CASE("inversion number") {
  CHECK(inversion_number(Permutation::identity(7)) == 0);
  CHECK(inversion_number(Permutation({3, 4, 2, 5, 6, 1})) == 7);
  CHECK(inversion_number(Permutation::reverse(4)) == 6);
  std::vector<int> v = {1, 2, 3, 4, 5};
  do {
    CHECK(inversion_number(Permutation(v)) == oracle::inversions(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("sorting network validity") {
  CHECK(is_sorting_network(6, kFig3));
  CHECK(is_sorting_network(5, std::vector<int>{1, 3, 4, 2, 1, 3, 4, 2, 1, 3}));
  CHECK_FALSE(is_sorting_network(3, std::vector<int>{1, 1, 2}));
  CHECK_FALSE(is_sorting_network(3, std::vector<int>{1, 2}));
  CHECK_FALSE(is_sorting_network(3, std::vector<int>{1, 2, 3}));
  CHECK(is_sorting_network(1, std::vector<int>{}));
  CHECK(is_sorting_network(2, std::vector<int>{1}));
  CHECK_THROWS_AS(SortingNetwork(3, {1, 1, 2}), std::invalid_argument);
  // Agreement with literal composition on every word for n = 4.
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d)
          for (int e = 1; e <= 3; ++e)
            for (int f = 1; f <= 3; ++f) {
              const std::vector<int> w = {a, b, c, d, e, f};
              CHECK(is_sorting_network(4, w) == oracle::is_reverse(oracle::compose_word(4, w)));
            }
}

TEST_CASE("configurations") {
  const auto w = fig3();
  CHECK(configuration(w, 7) == Permutation({3, 4, 2, 5, 6, 1}));
  CHECK(configuration(w, 0) == Permutation::identity(6));
  CHECK(configuration(w, 15) == Permutation::reverse(6));
  CHECK_THROWS_AS(configuration(w, 16), std::out_of_range);
  for (std::size_t k = 0; k <= w.length(); ++k) {
    CHECK(inversion_number(configuration(w, k)) == static_cast<std::int64_t>(k));
    const std::vector<int> prefix(kFig3.begin(), kFig3.begin() + static_cast<std::ptrdiff_t>(k));
    const auto cfg = oracle::compose_word(6, prefix);
    CHECK(configuration(w, k) == Permutation(cfg));
  }
}

TEST_CASE("cursor sweep") {
  const auto w = fig3();
  ConfigurationCursor cur(w);
  std::vector<int> prev(cur.locations().begin(), cur.locations().end());
  while (!cur.at_end()) {
    cur.advance();
    CHECK(cur.configuration() == configuration(w, cur.time()));
    int changed = 0;
    for (int i = 1; i <= 6; ++i) {
      const int d = cur.location_of(i) - prev[static_cast<std::size_t>(i - 1)];
      CHECK(std::abs(d) <= 1);
      changed += d != 0;
      CHECK(cur.particle_at(cur.location_of(i)) == i);
    }
    CHECK(changed == 2);
    prev.assign(cur.locations().begin(), cur.locations().end());
  }
  cur.seek(7);
  CHECK(cur.configuration() == Permutation({3, 4, 2, 5, 6, 1}));
}

TEST_CASE("scaled trajectory") {
  const auto w = fig3();
  for (int i = 1; i <= 6; ++i) {
    CHECK(scaled_trajectory(w, i, 0.0) == doctest::Approx(2.0 * i / 6 - 1));
    CHECK(scaled_trajectory(w, i, 1.0) == doctest::Approx(2.0 * (7 - i) / 6 - 1));
  }
  CHECK(scaled_trajectory(w, 3, 7.0 / 15) == doctest::Approx(-2.0 / 3));
  const double mid = 0.5 * (scaled_trajectory(w, 3, 7.0 / 15) + scaled_trajectory(w, 3, 8.0 / 15));
  CHECK(scaled_trajectory(w, 3, 7.5 / 15) == doctest::Approx(mid));
  CHECK_THROWS_AS(scaled_trajectory(w, 0, 0.5), std::out_of_range);
  CHECK_THROWS_AS(scaled_trajectory(w, 1, 1.5), std::out_of_range);
}

TEST_CASE("symmetries") {
  const SortingNetwork a(3, {1, 2, 1});
  const SortingNetwork b(3, {2, 1, 2});
  CHECK(rotate_shift(a) == b);
  CHECK(rotate_shift(b) == a);
  CHECK(reverse_symmetry(a) == a);
  CHECK(reflect_symmetry(a) == b);

  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> rot, rev, ref;
    const auto all = oracle::all_networks_by_scan(n);
    for (const auto& s : all) {
      const SortingNetwork w(n, s);
      for (const auto& image : {rotate_shift(w), reverse_symmetry(w), reflect_symmetry(w)}) {
        CHECK(is_sorting_network(n, image.swaps()));
      }
      const auto a = rotate_shift(w);
      const auto b = reverse_symmetry(w);
      const auto c = reflect_symmetry(w);
      rot.emplace(a.swaps().begin(), a.swaps().end());
      rev.emplace(b.swaps().begin(), b.swaps().end());
      ref.emplace(c.swaps().begin(), c.swaps().end());
      CHECK(reflect_symmetry(reflect_symmetry(w)) == w);
      CHECK(reverse_symmetry(reverse_symmetry(w)) == w);
    }
    CHECK(rot.size() == all.size());
    CHECK(rev.size() == all.size());
    CHECK(ref.size() == all.size());
  }

  for (const auto& s : oracle::all_networks_by_scan(4)) {
    const SortingNetwork w(4, s);
    SortingNetwork cur = w;
    for (int k = 0; k < 4 * 3; ++k) cur = rotate_shift(cur);
    CHECK(cur == w);
  }
}

TEST_CASE("bubble sort network") {
  for (int n = 1; n <= 8; ++n) {
    const auto w = bubble_sort_network(n);
    CHECK(w.length() == network_length(n));
    CHECK(is_sorting_network(n, w.swaps()));
  }
  CHECK(bubble_sort_network(4).swaps()[0] == 1);
}

TEST_CASE("scaled measures") {
  const auto w = fig3();
  const auto eta = scaled_swap_measure(w);
  CHECK(eta.points.size() == 15);
  CHECK(eta.weight() * 15 == doctest::Approx(1.0));
  CHECK(eta.points[0].x == doctest::Approx(1.0 / 15));
  CHECK(eta.points[0].y == doctest::Approx(2.0 / 6 - 1));
  for (const auto& p : scaled_configuration(w, 0.0).points) CHECK(p.y == doctest::Approx(p.x));
  // sigma_N(i) = n + 1 - i puts mu_1 on the line x + y = 2/n.
  for (const auto& p : scaled_configuration(w, 1.0).points) CHECK(p.x + p.y == doctest::Approx(2.0 / 6));
  // mu_t uses floor(tN): t = 7.9/15 still shows sigma_7.
  const auto mu = scaled_configuration(w, 7.9 / 15);
  CHECK(mu.points[0].y == doctest::Approx(2.0 * 3 / 6 - 1));
  std::multiset<double> xs, ys;
  for (const auto& p : mu.points) {
    xs.insert(p.x);
    ys.insert(p.y);
  }
  CHECK(xs == ys);
}

TEST_CASE("windowed swap count") {
  const auto w = fig3();
  CHECK(windowed_swap_count(w, 0, 1, -1, 1) == 15);
  CHECK(windowed_swap_count(w, 0.4, 0.4, -1, 1) == 0);
  const int low = static_cast<int>(std::count_if(kFig3.begin(), kFig3.end(), [](int s) { return s <= 2; }));
  CHECK(low == 9);
  CHECK(windowed_swap_count(w, 0, 1, -1, -1.0 / 3) == 9);
  // First five slots only.
  CHECK(windowed_swap_count(w, 0, 5.0 / 15, -1, 1) == 5);
}

TEST_CASE("n = 1 and n = 2") {
  const SortingNetwork e(1, {});
  CHECK(e.length() == 0);
  CHECK(configuration(e, 0) == Permutation::identity(1));
  CHECK(scaled_swap_measure(e).points.empty());
  CHECK(rotate_shift(e) == e);
  CHECK(scaled_configuration(e, 0.5).points.size() == 1);
  const SortingNetwork two(2, {1});
  CHECK(rotate_shift(two) == two);
}
