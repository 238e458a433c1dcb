#pragma once

#include "sortnet/harness/io.hpp"
#include "sortnet/tableaux.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace sortnet::harness {

/// Thresholds of the acceptance criteria. Sample sizes are fixed; only the
/// pass/fail thresholds can be overridden.
struct Tolerances {
  double semicircle_ks = 0.05;
  double stationarity_ks = 0.05;
  double lln_tv = 0.1;
  double octagon_eps = 0.1;
  double holder_eps = 0.2;
  int holder_grid = 200;
  double profile = 0.1;
  double first_row = 0.1;  ///< relative to n
  double coupling_p = 1e-3;
  double hook_sigma = 3;
  double circle_speed = 0.15;
  double theta_deviation = 0.2;
  double bubble_speed = 0.9;
  double arch_ks = 0.01;
  double double_flip_lo = 0.10;
  double double_flip_hi = 0.25;
  double sample_1000_s = 120;
  double sample_2000_s = 900;
};

struct Measurement {
  std::string name;
  double value = 0;
  std::string relation;  ///< "<", "<=", ">", ">=", "==", or "" for report-only values
  double threshold = 0;
  bool gating = true;
  bool pass = true;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool gating = true;
  bool pass = true;
  std::vector<Measurement> measurements;
  std::string detail;
  double seconds = 0;
  std::string error;  ///< set if the criterion threw

  /// "PASS|FAIL|INFO  <id> <title>: name=value rel threshold; ... (t s)"
  std::string line() const;
  json to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  int threads = 1;
  /// Criterion ids to run (1..18); empty runs all of them.
  std::set<int> only;
  Tolerances tol;
  /// Replaces the promotion operator in the promotion fixture check; used to
  /// confirm that the harness can fail.
  std::function<StandardYoungTableau(const StandardYoungTableau&)> promote_override;
  /// Output files to check for artifact/schema versions (criterion 0, run
  /// only when non-empty).
  std::vector<std::string> artifacts;
};

struct VerifyReport {
  std::vector<CriterionResult> results;
  bool pass() const;
  json to_json() const;
};

inline constexpr int kCriteria = 18;

/// Runs the selected criteria in id order, calling on_result after each one.
VerifyReport run_verify(const VerifyOptions& opt, const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace sortnet::harness
