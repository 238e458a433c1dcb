#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sortnet {

/// Deterministic 64-bit random stream. The engine is std::mt19937_64 (its
/// output sequence is fixed by the standard); the seed word is derived from
/// (seed, stream_id) with SplitMix64 mixing, and bounded integers and reals
/// are produced by fixed mappings, so draws are identical across platforms
/// and standard libraries. Bump kGeneratorName if any of this changes.
class RandomStream {
 public:
  static constexpr std::string_view kGeneratorName = "mt19937_64/splitmix64-stream/v1";

  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sortnet
