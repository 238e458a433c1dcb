#pragma once

#include "sortnet/random_stream.hpp"

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace sortnet::harness {

/// SORTNET_THREADS if set to a positive integer, else the hardware concurrency.
int default_threads();

/// Runs f(rng, r) for r = 0..samples-1 with rng = RandomStream(seed, stream_base + r)
/// and returns the results in replica order, so the output does not depend on
/// `threads`. The exception of the lowest failing replica is rethrown.
template <class F>
auto parallel_monte_carlo(std::size_t samples, std::uint64_t seed, int threads, F&& f, std::uint64_t stream_base = 0) {
  using R = decltype(f(std::declval<RandomStream&>(), std::size_t{0}));
  std::vector<std::optional<R>> slots(samples);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_at = samples;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= samples) return;
      try {
        RandomStream rng(seed, stream_base + r);
        slots[r].emplace(f(rng, r));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (r < error_at) {
          error_at = r;
          error = std::current_exception();
        }
      }
    }
  };
  const auto count = static_cast<std::size_t>(threads < 1 ? 1 : threads);
  if (count == 1 || samples <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (std::size_t t = 0; t < count && t < samples; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<R> results;
  results.reserve(samples);
  for (auto& s : slots) results.push_back(std::move(*s));
  return results;
}

}  // namespace sortnet::harness
