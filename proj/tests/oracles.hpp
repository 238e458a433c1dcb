#pragma once

// Brute-force reference implementations used only by the tests. They are
// deliberately naive and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

/// Applies the word literally: positions s and s+1 of the configuration are exchanged.
inline std::vector<int> compose_word(int n, const std::vector<int>& word) {
  std::vector<int> cfg(static_cast<std::size_t>(n));
  std::iota(cfg.begin(), cfg.end(), 1);
  for (int s : word) std::swap(cfg[static_cast<std::size_t>(s - 1)], cfg[static_cast<std::size_t>(s)]);
  return cfg;
}

inline bool is_reverse(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != static_cast<int>(v.size() - i)) return false;
  }
  return true;
}

/// Every word of length N over {1..n-1} that composes to the reverse permutation,
/// found by scanning all (n-1)^N words. Lexicographic.
inline std::vector<std::vector<int>> all_networks_by_scan(int n) {
  const int len = n * (n - 1) / 2;
  std::vector<std::vector<int>> out;
  if (n == 1) {
    out.push_back({});
    return out;
  }
  std::vector<int> word(static_cast<std::size_t>(len), 1);
  for (;;) {
    if (is_reverse(compose_word(n, word))) out.push_back(word);
    int pos = len - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == n - 1) word[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return out;
}

inline int inversions(const std::vector<int>& v) {
  int c = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j];
  }
  return c;
}

/// Number of fillings of the shape by 1..N (tried as all N! arrangements)
/// with increasing rows and columns.
inline std::int64_t count_syt_by_permutations(const std::vector<int>& parts) {
  const int total = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> fill(static_cast<std::size_t>(total));
  std::iota(fill.begin(), fill.end(), 1);
  std::int64_t count = 0;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t at = 0;
    for (int p : parts) {
      rows.emplace_back(fill.begin() + static_cast<std::ptrdiff_t>(at), fill.begin() + static_cast<std::ptrdiff_t>(at + p));
      at += static_cast<std::size_t>(p);
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r) {
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) ok = false;
        if (r > 0 && rows[r - 1][c] > rows[r][c]) ok = false;
      }
    }
    count += ok;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}

}  // namespace oracle
