#include "sortnet/harness/commands.hpp"
#include "sortnet/harness/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace sortnet::harness;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// Commands whose whole result is the written file report just the path.
void emit(const json& j, const std::string& out) {
  if (out.empty()) print(j);
  else print(json{{"written", out}});
}

int pass_code(const json& j) { return j.value("pass", true) ? kOk : kFailed; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniformly random sorting networks: sampling, exact counts and limit-law checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kArtifactVersion));

  SampleConfig sample;
  sample.threads = default_threads();
  auto* sub_sample = app.add_subcommand("sample", "sample uniform sorting networks");
  sub_sample->add_option("--n", sample.n, "number of particles")->required()->check(CLI::PositiveNumber);
  sub_sample->add_option("--samples", sample.samples, "number of networks")->check(CLI::PositiveNumber);
  sub_sample->add_option("--seed", sample.seed, "random seed");
  sub_sample->add_option("--threads", sample.threads, "worker threads")->check(CLI::PositiveNumber);
  sub_sample->add_option("--out", sample.out, "output JSON file");

  EnumerateConfig enumerate;
  auto* sub_enum = app.add_subcommand("enumerate", "list every sorting network of size n <= 6");
  sub_enum->add_option("--n", enumerate.n, "number of particles")->required();
  sub_enum->add_flag("--count-only", enumerate.count_only, "print only the count");
  sub_enum->add_option("--out", enumerate.out, "output JSON file");

  StatsConfig stats;
  auto* sub_stats = app.add_subcommand("stats", "write swap-process, trajectory and configuration CSVs");
  sub_stats->add_option("--in", stats.in, "network JSON file")->required();
  sub_stats->add_option("--index", stats.index, "network index within the file");
  sub_stats->add_option("--out", stats.out_dir, "output directory");
  sub_stats->add_option("--bins-t", stats.bins_t, "time bins of the histogram")->check(CLI::PositiveNumber);
  sub_stats->add_option("--bins-y", stats.bins_y, "location bins of the histogram")->check(CLI::PositiveNumber);
  sub_stats->add_option("--t", stats.times, "scaled times for configuration snapshots");
  sub_stats->add_option("--particles", stats.particles, "particles to trace");
  sub_stats->add_option("--frames", stats.frames, "frames of the sliding configuration")->check(CLI::PositiveNumber);

  FirstSwapConfig first_swap;
  auto* sub_first = app.add_subcommand("first-swap-dist", "exact law of the first swap location");
  sub_first->add_option("--n", first_swap.n, "number of particles")->required();
  sub_first->add_option("--out", first_swap.out, "output CSV file");

  DoubleFlipConfig flip;
  auto* sub_flip = app.add_subcommand("double-flip", "probability of passing through the double flip");
  sub_flip->add_option("--n", flip.n, "number of particles (even, with n(n-2)/4 even)")->required();

  LimitProfileConfig profile;
  auto* sub_profile = app.add_subcommand("limit-profile", "tabulate the staircase limit profile L");
  sub_profile->add_option("--grid", profile.grid, "grid points per axis")->check(CLI::PositiveNumber);
  sub_profile->add_option("--n", profile.n, "also sample a staircase tableau of this order");
  sub_profile->add_option("--seed", profile.seed, "random seed");
  sub_profile->add_option("--out", profile.out, "output CSV of L");
  sub_profile->add_option("--tableau-out", profile.tableau_out, "output CSV of the sampled tableau");

  ArchConfig arch;
  auto* sub_arch = app.add_subcommand("arch-sample", "sample the Archimedes measure Arch_t");
  sub_arch->add_option("--t", arch.t, "time in [0, 1]")->check(CLI::Range(0.0, 1.0));
  sub_arch->add_option("--samples", arch.samples, "number of points")->check(CLI::PositiveNumber);
  sub_arch->add_option("--seed", arch.seed, "random seed");
  sub_arch->add_option("--out", arch.out, "output CSV file");

  CheckConfig check;
  check.threads = default_threads();
  auto* sub_check = app.add_subcommand("check", "octagon, Hoelder, first-row and LLN checks");
  sub_check->add_option("--in", check.in, "network JSON file")->required();
  sub_check->add_option("--eps", check.eps, "octagon tolerance");
  sub_check->add_option("--holder-eps", check.holder_eps, "Hoelder tolerance");
  sub_check->add_option("--grid", check.grid, "Hoelder time grid")->check(CLI::PositiveNumber);
  sub_check->add_option("--threads", check.threads, "worker threads")->check(CLI::PositiveNumber);

  GreatCircleConfig circle;
  auto* sub_circle = app.add_subcommand("great-circle", "fit a network to its two-point great circle");
  sub_circle->add_option("--in", circle.in, "network JSON file")->required();
  sub_circle->add_option("--index", circle.index, "network index within the file");
  sub_circle->add_option("--out", circle.out_dir, "output directory");
  sub_circle->add_option("--grid", circle.grid, "angle grid size")->check(CLI::PositiveNumber);
  sub_circle->add_option("--refinements", circle.refinements, "golden-section steps");
  sub_circle->add_option("--sine-points", circle.sine_points, "time samples of the sine fit")->check(CLI::PositiveNumber);

  VerifyOptions verify;
  verify.threads = default_threads();
  std::vector<int> only;
  std::string report_path;
  auto* sub_verify = app.add_subcommand("verify", "run the acceptance criteria");
  sub_verify->add_option("--seed", verify.seed, "random seed");
  sub_verify->add_option("--threads", verify.threads, "worker threads")->check(CLI::PositiveNumber);
  sub_verify->add_option("--only", only, "criterion ids to run")->delimiter(',')->check(CLI::Range(1, kCriteria));
  sub_verify->add_option("--artifacts", verify.artifacts, "output files whose versions are checked");
  sub_verify->add_option("--out", report_path, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sub_sample) emit(cmd_sample(sample), sample.out);
    else if (*sub_enum) emit(cmd_enumerate(enumerate), enumerate.out);
    else if (*sub_stats) print(cmd_stats(stats));
    else if (*sub_first) print(cmd_first_swap(first_swap));
    else if (*sub_flip) print(cmd_double_flip(flip));
    else if (*sub_profile) print(cmd_limit_profile(profile));
    else if (*sub_arch) print(cmd_arch_sample(arch));
    else if (*sub_check) {
      const json j = cmd_check(check);
      print(j);
      return pass_code(j);
    } else if (*sub_circle) print(cmd_great_circle(circle));
    else if (*sub_verify) {
      verify.only.insert(only.begin(), only.end());
      const auto rep = run_verify(verify, [](const CriterionResult& r) { std::cout << r.line() << std::endl; });
      if (!report_path.empty()) write_json(report_path, rep.to_json());
      std::cout << (rep.pass() ? "ALL PASS" : "SOME CRITERIA FAILED") << "\n";
      return rep.pass() ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "sortnet: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sortnet: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "sortnet: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
