#include "sortnet/counting.hpp"

#include "sortnet/tableaux.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sortnet {

BigCount stanley_count(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  BigCount denom = 1;
  for (int m = 1; m <= n - 1; ++m) {
    BigCount odd = 2 * m - 1;
    denom *= boost::multiprecision::pow(odd, static_cast<unsigned>(n - m));
  }
  return factorial(network_length(n)) / denom;
}

namespace {

std::uint64_t pack(const std::vector<int>& v) {
  std::uint64_t key = v.size();
  for (int x : v) key = (key << 4) | static_cast<std::uint64_t>(x - 1);
  return key;
}

bool is_identity(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

}  // namespace

BigCount ReducedWordCounter::count(const Permutation& p) {
  if (p.size() > kMaxReducedWordSize) {
    throw std::length_error("reduced-word counting is limited to n <= " + std::to_string(kMaxReducedWordSize));
  }
  std::vector<int> v(p.one_line().begin(), p.one_line().end());
  std::lock_guard lock(mutex_);
  return count_packed(v);
}

std::size_t ReducedWordCounter::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

BigCount ReducedWordCounter::count_packed(std::vector<int>& v) {
  if (is_identity(v)) return 1;
  const std::uint64_t key = pack(v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  BigCount total = 0;
  // The last letter of a reduced word of v must be a descent s of v.
  for (std::size_t s = 0; s + 1 < v.size(); ++s) {
    if (v[s] > v[s + 1]) {
      std::swap(v[s], v[s + 1]);
      total += count_packed(v);
      std::swap(v[s], v[s + 1]);
    }
  }
  memo_.emplace(key, total);
  return total;
}

BigCount count_reduced_words(const Permutation& p) {
  static ReducedWordCounter counter;
  return counter.count(p);
}

void for_each_network(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kMaxEnumerationSize) {
    throw std::length_error("exhaustive enumeration is refused for n > " + std::to_string(kMaxEnumerationSize) +
                            " (n = 7 already has about 1.1e9 networks)");
  }
  const std::size_t big_n = network_length(n);
  std::vector<int> config(static_cast<std::size_t>(n));
  std::iota(config.begin(), config.end(), 1);
  std::vector<int> word(big_n, 0);
  // Depth-first over letters that create an inversion; every such word of
  // length N is a sorting network and there are no dead ends.
  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == big_n) {
      visit(word);
      return;
    }
    for (int s = 1; s <= n - 1; ++s) {
      auto& a = config[static_cast<std::size_t>(s - 1)];
      auto& b = config[static_cast<std::size_t>(s)];
      if (a > b) continue;
      std::swap(a, b);
      word[depth] = s;
      extend(depth + 1);
      std::swap(a, b);
    }
  };
  extend(0);
}

std::vector<SortingNetwork> enumerate_networks(int n) {
  std::vector<SortingNetwork> out;
  for_each_network(n, [&](std::span<const int> s) {
    out.push_back(make_network_unchecked(n, std::vector<int>(s.begin(), s.end())));
  });
  return out;
}

ExactRational pass_through_probability(const Permutation& v) {
  const int n = v.size();
  const Permutation rho = Permutation::reverse(n);
  const BigCount before = count_reduced_words(v);
  const BigCount after = count_reduced_words(v.inverse() * rho);
  return ExactRational(before * after, count_reduced_words(rho));
}

std::vector<ExactRational> first_swap_distribution(int n) {
  if (n < 2) throw std::invalid_argument("first swap distribution needs n >= 2");
  // odd[m] = 3*5*...*(2m-1), even[m] = 2*4*...*(2m-2).
  std::vector<BigCount> odd(static_cast<std::size_t>(n), 1);
  std::vector<BigCount> even(static_cast<std::size_t>(n), 1);
  for (int m = 2; m <= n - 1; ++m) {
    odd[static_cast<std::size_t>(m)] = odd[static_cast<std::size_t>(m - 1)] * (2 * m - 1);
    even[static_cast<std::size_t>(m)] = even[static_cast<std::size_t>(m - 1)] * (2 * m - 2);
  }
  const BigCount big_n = network_length(n);
  std::vector<ExactRational> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int r = 1; r <= n - 1; ++r) {
    const auto a = static_cast<std::size_t>(r);
    const auto b = static_cast<std::size_t>(n - r);
    out.emplace_back(odd[a] * odd[b], big_n * even[a] * even[b]);
  }
  return out;
}

double log_first_swap_probability(int n, int r) {
  if (n < 2 || r < 1 || r > n - 1) throw std::invalid_argument("first swap location out of range");
  double acc = -std::log(static_cast<double>(network_length(n)));
  for (int side : {r, n - r}) {
    for (int m = 2; m <= side; ++m) acc += std::log(2.0 * m - 1.0) - std::log(2.0 * m - 2.0);
  }
  return acc;
}

std::vector<BigCount> first_swap_census(int n) {
  std::vector<BigCount> counts(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
  for_each_network(n, [&](std::span<const int> s) {
    if (!s.empty()) ++counts[static_cast<std::size_t>(s.front() - 1)];
  });
  return counts;
}

Permutation double_flip_permutation(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("double flip needs an even n");
  std::vector<int> v;
  for (int i = n / 2; i >= 1; --i) v.push_back(i);
  for (int i = n; i > n / 2; --i) v.push_back(i);
  return Permutation(std::move(v));
}

DoubleFlip double_flip(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("double flip needs an even n, got " + std::to_string(n));
  const std::int64_t h = static_cast<std::int64_t>(n) * (n - 2) / 4;
  DoubleFlip out;
  out.n = n;
  out.h = h;
  const BigCount half = dimension(staircase(n / 2));
  out.words_to_psi = binomial(static_cast<unsigned long>(h), static_cast<unsigned long>(h / 2)) * half * half;
  out.words_from_psi = dimension(square(n / 2));
  out.all_networks = dimension(staircase(n));
  out.probability = ExactRational(out.words_to_psi * out.words_from_psi, out.all_networks);
  return out;
}

ExactRational double_flip_probability(int n) { return double_flip(n).probability; }

}  // namespace sortnet
