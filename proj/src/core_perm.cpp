#include "sortnet/core_perm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sortnet {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reverse(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::adjacent_swap(int n, int s) {
  if (s < 1 || s >= n) throw std::invalid_argument("swap location out of range");
  auto v = identity(n).values_;
  std::swap(v[static_cast<std::size_t>(s - 1)], v[static_cast<std::size_t>(s)]);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> v(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) v[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(v));
}

std::int64_t inversion_number(const Permutation& p) {
  // Fenwick tree over values, scanning right to left.
  const int n = p.size();
  std::vector<int> tree(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t inv = 0;
  for (int i = n; i >= 1; --i) {
    int v = p(i);
    for (int x = v - 1; x > 0; x -= x & -x) inv += tree[static_cast<std::size_t>(x)];
    for (int x = v; x <= n; x += x & -x) ++tree[static_cast<std::size_t>(x)];
  }
  return inv;
}

bool is_sorting_network(int n, std::span<const int> swaps) {
  if (n < 1 || swaps.size() != network_length(n)) return false;
  std::vector<int> config(static_cast<std::size_t>(n));
  std::iota(config.begin(), config.end(), 1);
  for (int s : swaps) {
    if (s < 1 || s > n - 1) return false;
    auto& a = config[static_cast<std::size_t>(s - 1)];
    auto& b = config[static_cast<std::size_t>(s)];
    // A length-N word reaches the reverse permutation iff every letter
    // creates an inversion.
    if (a > b) return false;
    std::swap(a, b);
  }
  return true;
}

SortingNetwork::SortingNetwork(int n, std::vector<int> swaps) : n_(n), swaps_(std::move(swaps)) {
  if (!is_sorting_network(n_, swaps_)) {
    throw std::invalid_argument("sequence is not an " + std::to_string(n) + "-element sorting network");
  }
}

SortingNetwork make_network_unchecked(int n, std::vector<int> swaps) {
  return SortingNetwork(SortingNetwork::Unchecked{}, n, std::move(swaps));
}

ConfigurationCursor::ConfigurationCursor(const SortingNetwork& w)
    : network_(&w), config_(static_cast<std::size_t>(w.n())), where_(static_cast<std::size_t>(w.n())) {
  std::iota(config_.begin(), config_.end(), 1);
  std::iota(where_.begin(), where_.end(), 1);
}

void ConfigurationCursor::advance() {
  const int s = network_->swap(time_ + 1);
  auto& a = config_[static_cast<std::size_t>(s - 1)];
  auto& b = config_[static_cast<std::size_t>(s)];
  std::swap(a, b);
  where_[static_cast<std::size_t>(a - 1)] = s;
  where_[static_cast<std::size_t>(b - 1)] = s + 1;
  ++time_;
}

void ConfigurationCursor::seek(std::size_t k) {
  if (k > network_->length()) throw std::out_of_range("time beyond network length");
  if (k < time_) {
    std::iota(config_.begin(), config_.end(), 1);
    std::iota(where_.begin(), where_.end(), 1);
    time_ = 0;
  }
  while (time_ < k) advance();
}

Permutation configuration(const SortingNetwork& w, std::size_t k) {
  if (k > w.length()) throw std::out_of_range("configuration time out of range");
  ConfigurationCursor cur(w);
  cur.seek(k);
  return cur.configuration();
}

double scaled_trajectory(const SortingNetwork& w, int i, double t) {
  if (i < 1 || i > w.n()) throw std::out_of_range("particle index out of range");
  if (!(t >= 0.0 && t <= 1.0)) throw std::out_of_range("time outside [0,1]");
  const double n = w.n();
  const std::size_t big_n = w.length();
  const double x = t * static_cast<double>(big_n);
  auto k = static_cast<std::size_t>(std::floor(x));
  if (k > big_n) k = big_n;
  const double frac = x - static_cast<double>(k);
  ConfigurationCursor cur(w);
  cur.seek(k);
  const double here = 2.0 * cur.location_of(i) / n - 1.0;
  if (frac == 0.0 || k == big_n) return here;
  cur.advance();
  const double next = 2.0 * cur.location_of(i) / n - 1.0;
  return here + frac * (next - here);
}

std::vector<double> trajectory_grid(const SortingNetwork& w, int grid) {
  if (grid < 1) throw std::invalid_argument("trajectory grid must be positive");
  const int n = w.n();
  const auto un = static_cast<std::size_t>(n);
  const std::size_t big_n = w.length();
  const auto points = static_cast<std::size_t>(grid) + 1;
  std::vector<double> traj(points * un);
  ConfigurationCursor cur(w);
  std::vector<int> below(un);
  for (std::size_t g = 0; g < points; ++g) {
    const double x = static_cast<double>(g) / grid * static_cast<double>(big_n);
    auto k = static_cast<std::size_t>(std::floor(x));
    if (k > big_n) k = big_n;
    const double frac = x - static_cast<double>(k);
    if (cur.time() > k) cur.seek(k);
    while (cur.time() < k) cur.advance();
    std::copy(cur.locations().begin(), cur.locations().end(), below.begin());
    const bool step = frac > 0 && k < big_n;
    if (step) cur.advance();
    for (std::size_t i = 0; i < un; ++i) {
      const double lo = below[i];
      const double loc = step ? lo + frac * (cur.locations()[i] - lo) : lo;
      traj[g * un + i] = 2 * loc / n - 1;
    }
  }
  return traj;
}

SortingNetwork rotate_shift(const SortingNetwork& w) {
  if (w.length() == 0) return w;
  std::vector<int> s(w.swaps().begin() + 1, w.swaps().end());
  s.push_back(w.n() - w.swap(1));
  return make_network_unchecked(w.n(), std::move(s));
}

SortingNetwork reverse_symmetry(const SortingNetwork& w) {
  std::vector<int> s(w.swaps().rbegin(), w.swaps().rend());
  return make_network_unchecked(w.n(), std::move(s));
}

SortingNetwork reflect_symmetry(const SortingNetwork& w) {
  std::vector<int> s(w.swaps().begin(), w.swaps().end());
  for (int& x : s) x = w.n() - x;
  return make_network_unchecked(w.n(), std::move(s));
}

SortingNetwork bubble_sort_network(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> s;
  s.reserve(network_length(n));
  for (int pass = n - 1; pass >= 1; --pass) {
    for (int j = 1; j <= pass; ++j) s.push_back(j);
  }
  return SortingNetwork(n, std::move(s));
}

ScaledPointMeasure scaled_swap_measure(const SortingNetwork& w) {
  ScaledPointMeasure m;
  const double big_n = static_cast<double>(w.length());
  const double n = w.n();
  m.points.reserve(w.length());
  for (std::size_t k = 1; k <= w.length(); ++k) {
    m.points.push_back({static_cast<double>(k) / big_n, 2.0 * w.swap(k) / n - 1.0});
  }
  return m;
}

ScaledPointMeasure scaled_configuration(const SortingNetwork& w, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::out_of_range("time outside [0,1]");
  auto k = static_cast<std::size_t>(std::floor(t * static_cast<double>(w.length())));
  k = std::min(k, w.length());
  ConfigurationCursor cur(w);
  cur.seek(k);
  ScaledPointMeasure m;
  const double n = w.n();
  for (int i = 1; i <= w.n(); ++i) {
    m.points.push_back({2.0 * i / n - 1.0, 2.0 * cur.particle_at(i) / n - 1.0});
  }
  return m;
}

std::size_t windowed_swap_count(const SortingNetwork& w, double s, double t, double a, double b) {
  const double big_n = static_cast<double>(w.length());
  const double n = w.n();
  std::size_t count = 0;
  for (std::size_t k = 1; k <= w.length(); ++k) {
    const double slot = static_cast<double>(k - 1);
    if (slot < s * big_n || slot >= t * big_n) continue;
    const double y = 2.0 * w.swap(k) / n - 1.0;
    if (y >= a - 1e-12 && y <= b + 1e-12) ++count;
  }
  return count;
}

}  // namespace sortnet
