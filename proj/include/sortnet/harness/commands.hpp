#pragma once

#include "sortnet/harness/io.hpp"
#include "sortnet/harness/parallel.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sortnet::harness {

/// Bad arguments or refused requests (exit code 2 at the command line).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Each command returns a JSON summary and writes its files; an empty `out`
/// means "do not write".

struct SampleConfig {
  int n = 10;
  std::size_t samples = 1;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;
};
/// Replica r is drawn from stream r. One sample gives {"metadata", "n", "swaps"};
/// more give {"metadata", "networks": [...]}. No wall time is embedded, so a
/// rerun reproduces the file byte for byte.
json cmd_sample(const SampleConfig& cfg);

struct EnumerateConfig {
  int n = 4;
  bool count_only = false;
  std::string out;
};
json cmd_enumerate(const EnumerateConfig& cfg);

struct StatsConfig {
  std::string in;
  std::size_t index = 0;  ///< which network of a multi-network file
  std::string out_dir = ".";
  int bins_t = 10;
  int bins_y = 10;
  std::vector<double> times = {0, 0.25, 0.5, 0.75, 1};
  std::vector<int> particles;  ///< empty: up to 8 evenly spaced particles
  int frames = 16;
};
/// Writes eta.csv, eta_hist.csv, mu_<t>.csv, trajectories.csv and sliding.csv.
json cmd_stats(const StatsConfig& cfg);

struct FirstSwapConfig {
  int n = 6;
  std::string out;
};
json cmd_first_swap(const FirstSwapConfig& cfg);

struct DoubleFlipConfig {
  int n = 8;
};
json cmd_double_flip(const DoubleFlipConfig& cfg);

struct LimitProfileConfig {
  int grid = 50;
  int n = 0;  ///< if positive, also sample a staircase tableau of order n
  std::uint64_t seed = 1;
  std::string out;         ///< CSV of L on the grid
  std::string tableau_out; ///< CSV of the sampled tableau against L
};
json cmd_limit_profile(const LimitProfileConfig& cfg);

struct ArchConfig {
  double t = 0.5;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::string out;
};
json cmd_arch_sample(const ArchConfig& cfg);

struct CheckConfig {
  std::string in;
  double eps = 0.1;         ///< octagon
  double holder_eps = 0.2;
  int grid = 200;
  int threads = 1;
};
/// "pass" is false if any network fails any check.
json cmd_check(const CheckConfig& cfg);

struct GreatCircleConfig {
  std::string in;
  std::size_t index = 0;
  std::string out_dir = ".";
  int grid = 8192;
  int refinements = 30;
  int sine_points = 512;
};
/// Writes theta.csv and nu.csv; returns
/// {distances, theta: path, nu: path, sine_residual, ...}.
json cmd_great_circle(const GreatCircleConfig& cfg);

}  // namespace sortnet::harness
