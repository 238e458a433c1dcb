#pragma once

#include "sortnet/bigint.hpp"
#include "sortnet/core_perm.hpp"

#include <cstdint>
#include <functional>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace sortnet {

/// #Omega_n = N! / (1^{n-1} 3^{n-2} ... (2n-3)^1), from the product formula.
BigCount stanley_count(int n);

/// Largest n accepted by the reduced-word counter (memo over S_n).
inline constexpr int kMaxReducedWordSize = 9;
/// Largest n accepted by exhaustive network enumeration.
inline constexpr int kMaxEnumerationSize = 6;

/// R(v): number of reduced words of v, by the descent recursion
/// R(v) = sum over s with v(s) > v(s+1) of R(v tau_s), R(id) = 1.
/// The memo table is keyed by the packed permutation and guarded by a mutex,
/// so one counter can be shared between threads.
class ReducedWordCounter {
 public:
  /// Throws std::length_error if p.size() > kMaxReducedWordSize.
  BigCount count(const Permutation& p);

  std::size_t memo_size() const;

 private:
  BigCount count_packed(std::vector<int>& v);

  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, BigCount> memo_;
};

/// Uses a process-wide ReducedWordCounter.
BigCount count_reduced_words(const Permutation& p);

/// Calls visit(swaps) for every n-element sorting network, in lexicographic
/// order of the swap sequence. Throws std::length_error for n > 6.
void for_each_network(int n, const std::function<void(std::span<const int>)>& visit);

std::vector<SortingNetwork> enumerate_networks(int n);

/// P(sigma_k = v) for k = inv(v), as R(v) R(v^{-1} rho) / R(rho).
ExactRational pass_through_probability(const Permutation& v);

/// a_{n,r} = P(s_1 = r) for r = 1..n-1 (index r-1), exact.
std::vector<ExactRational> first_swap_distribution(int n);

/// ln a_{n,r} evaluated as a sum of logarithms (no big numbers).
double log_first_swap_probability(int n, int r);

/// For each r, the number of networks with s_1 = r, by enumeration (n <= 6).
std::vector<BigCount> first_swap_census(int n);

/// psi = (n/2, ..., 1, n, ..., n/2+1).
Permutation double_flip_permutation(int n);

struct DoubleFlip {
  int n = 0;
  std::int64_t h = 0;            ///< inv(psi) = N/2 - n/4
  BigCount words_to_psi;         ///< R(psi) = C(h, h/2) d(staircase_{n/2})^2
  BigCount words_from_psi;       ///< R(psi^{-1} rho) = d(square_{n/2})
  BigCount all_networks;         ///< R(rho) = d(staircase_n)
  ExactRational probability;
};

/// Throws std::invalid_argument unless n is even. h = n(n-2)/4 = m(m-1) for
/// n = 2m, so C(h, h/2) is always defined.
DoubleFlip double_flip(int n);

ExactRational double_flip_probability(int n);

}  // namespace sortnet
