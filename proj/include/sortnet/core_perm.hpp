#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sortnet {

/// A permutation of {1..n} stored in one-line notation. All indices and
/// values visible through the API are one-based.
class Permutation {
 public:
  Permutation() = default;

  /// Takes one-line notation (sigma(1), ..., sigma(n)). Throws
  /// std::invalid_argument unless the values form a bijection of {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation reverse(int n);
  /// The adjacent transposition (s s+1), 1 <= s <= n-1.
  static Permutation adjacent_swap(int n, int s);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> one_line() const { return values_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Composition (a*b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// #{i<j : p(i) > p(j)}, computed in O(n log n).
std::int64_t inversion_number(const Permutation& p);

/// N = n(n-1)/2.
constexpr std::size_t network_length(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// True iff `swaps` has length N, every entry lies in {1..n-1} and the
/// composition of the adjacent transpositions is the reverse permutation.
bool is_sorting_network(int n, std::span<const int> swaps);

/// A validated n-element sorting network (s_1, ..., s_N).
class SortingNetwork {
 public:
  /// Throws std::invalid_argument if the sequence is not a sorting network.
  SortingNetwork(int n, std::vector<int> swaps);

  int n() const { return n_; }
  std::size_t length() const { return swaps_.size(); }
  /// s_k for 1 <= k <= N.
  int swap(std::size_t k) const { return swaps_[k - 1]; }
  std::span<const int> swaps() const { return swaps_; }

  friend bool operator==(const SortingNetwork&, const SortingNetwork&) = default;
  friend auto operator<=>(const SortingNetwork&, const SortingNetwork&) = default;

 private:
  struct Unchecked {};
  SortingNetwork(Unchecked, int n, std::vector<int> swaps) : n_(n), swaps_(std::move(swaps)) {}

  int n_ = 1;
  std::vector<int> swaps_;

  friend SortingNetwork make_network_unchecked(int n, std::vector<int> swaps);
};

/// For producers that construct networks by a route known to be valid (the
/// EG map, the symmetries). Skips the O(N) composition check.
SortingNetwork make_network_unchecked(int n, std::vector<int> swaps);

/// Incremental sweep over sigma_0, sigma_1, ..., sigma_N. Each step costs O(1);
/// both the configuration and its inverse (particle locations) are current.
class ConfigurationCursor {
 public:
  explicit ConfigurationCursor(const SortingNetwork& w);

  std::size_t time() const { return time_; }
  bool at_end() const { return time_ == network_->length(); }

  /// sigma_k -> sigma_{k+1}. Precondition: !at_end().
  void advance();
  /// Moves to time k (rewinds to 0 first if k is in the past).
  void seek(std::size_t k);

  /// sigma_k(position): the particle occupying `position`.
  int particle_at(int position) const { return config_[static_cast<std::size_t>(position - 1)]; }
  /// sigma_k^{-1}(particle): the location of `particle`.
  int location_of(int particle) const { return where_[static_cast<std::size_t>(particle - 1)]; }

  /// Zero-indexed views: config()[p-1] = sigma_k(p), locations()[i-1] = sigma_k^{-1}(i).
  std::span<const int> config() const { return config_; }
  std::span<const int> locations() const { return where_; }

  Permutation configuration() const { return Permutation(config_); }

 private:
  const SortingNetwork* network_;
  std::size_t time_ = 0;
  std::vector<int> config_;
  std::vector<int> where_;
};

/// sigma_k = tau_{s_1} ... tau_{s_k}; throws std::out_of_range unless 0 <= k <= N.
Permutation configuration(const SortingNetwork& w, std::size_t k);

/// T_i(t) = 2 sigma_{tN}^{-1}(i)/n - 1 at integer tN, linearly interpolated
/// otherwise. Throws std::out_of_range for i outside [1,n] or t outside [0,1].
double scaled_trajectory(const SortingNetwork& w, int i, double t);

/// Row-major (grid + 1) x n matrix with entry [g n + i - 1] = T_i(g / grid).
/// Throws std::invalid_argument unless grid >= 1.
std::vector<double> trajectory_grid(const SortingNetwork& w, int grid);

/// (s_2, ..., s_N, n - s_1).
SortingNetwork rotate_shift(const SortingNetwork& w);
/// (s_N, ..., s_1).
SortingNetwork reverse_symmetry(const SortingNetwork& w);
/// (n - s_1, ..., n - s_N).
SortingNetwork reflect_symmetry(const SortingNetwork& w);

/// The bubble-sort network (1..n-1)(1..n-2)...(1).
SortingNetwork bubble_sort_network(int n);

struct Point2 {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Equal-weight point measure (each point carries 1/points.size()).
struct ScaledPointMeasure {
  std::vector<Point2> points;
  double weight() const { return points.empty() ? 0.0 : 1.0 / static_cast<double>(points.size()); }
};

/// eta: points (k/N, 2 s_k/n - 1) for k = 1..N.
ScaledPointMeasure scaled_swap_measure(const SortingNetwork& w);

/// mu_t: points (2i/n - 1, 2 sigma_{floor(tN)}(i)/n - 1) for i = 1..n.
ScaledPointMeasure scaled_configuration(const SortingNetwork& w, double t);

/// Number of swaps s_k whose time slot [k-1, k) starts inside [sN, tN) and
/// whose scaled location 2 s_k/n - 1 lies in [a, b].
std::size_t windowed_swap_count(const SortingNetwork& w, double s, double t, double a, double b);

}  // namespace sortnet
