#include "sortnet/harness/commands.hpp"

#include "sortnet/counting.hpp"
#include "sortnet/eg_bijection.hpp"
#include "sortnet/hookwalk.hpp"
#include "sortnet/limit_laws.hpp"
#include "sortnet/permutahedron.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <numbers>

namespace sortnet::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + dir + ": " + ec.message());
}

SortingNetwork pick(const std::string& path, std::size_t index) {
  if (path.empty()) throw UsageError("an input network file (--in) is required");
  auto all = read_networks(path);
  if (index >= all.size()) throw UsageError("network index out of range for " + path);
  return std::move(all[index]);
}

std::string time_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

}  // namespace

json cmd_sample(const SampleConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
  const int n = cfg.n;
  auto nets = parallel_monte_carlo(cfg.samples, cfg.seed, cfg.threads, [n](RandomStream& rng, std::size_t) {
    return sample_usn(n, rng);
  });
  RunMetadata meta{"sample", cfg.seed, {{"n", n}, {"samples", cfg.samples}}, std::nullopt};
  json doc;
  doc["metadata"] = meta.to_json();
  if (nets.size() == 1) {
    doc.update(network_to_json(nets.front()));
  } else {
    json arr = json::array();
    for (const auto& w : nets) arr.push_back(network_to_json(w));
    doc["networks"] = std::move(arr);
  }
  if (!cfg.out.empty()) write_json(cfg.out, doc);
  return doc;
}

json cmd_enumerate(const EnumerateConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.n > kMaxEnumerationSize) {
    throw UsageError("enumeration is refused for n = " + std::to_string(cfg.n) + ": n = 7 already has " +
                     to_string(stanley_count(7)) + " networks; use the exact count (stanley_count) instead");
  }
  const auto t0 = Clock::now();
  json nets = json::array();
  std::size_t count = 0;
  for_each_network(cfg.n, [&](std::span<const int> s) {
    ++count;
    if (!cfg.count_only) nets.push_back(std::vector<int>(s.begin(), s.end()));
  });
  RunMetadata meta{"enumerate", 0, {{"n", cfg.n}, {"count_only", cfg.count_only}}, seconds_since(t0)};
  json doc;
  doc["metadata"] = meta.to_json();
  doc["n"] = cfg.n;
  doc["count"] = count;
  doc["stanley_count"] = big_to_json(stanley_count(cfg.n));
  if (!cfg.count_only) doc["networks"] = std::move(nets);
  if (!cfg.out.empty()) write_json(cfg.out, doc);
  return doc;
}

json cmd_stats(const StatsConfig& cfg) {
  if (cfg.bins_t < 1 || cfg.bins_y < 1) throw UsageError("histogram bins must be positive");
  if (cfg.frames < 1) throw UsageError("--frames must be positive");
  const auto t0 = Clock::now();
  const SortingNetwork w = pick(cfg.in, cfg.index);
  const int n = w.n();
  const std::size_t big_n = w.length();
  ensure_dir(cfg.out_dir);
  RunMetadata meta{"stats", 0, {{"in", cfg.in}, {"index", cfg.index}, {"n", n}}, std::nullopt};
  json files = json::object();

  {
    const std::string path = join(cfg.out_dir, "eta.csv");
    CsvWriter csv(path, meta, {"k", "t", "location", "y"});
    for (std::size_t k = 1; k <= big_n; ++k) {
      const int s = w.swap(k);
      csv << k << static_cast<double>(k) / static_cast<double>(big_n) << s << 2.0 * s / n - 1;
      csv.end_row();
    }
    files["eta"] = path;
  }
  {
    const std::string path = join(cfg.out_dir, "eta_hist.csv");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(cfg.bins_t * cfg.bins_y), 0);
    const auto bt = static_cast<std::int64_t>(cfg.bins_t);
    const auto by = static_cast<std::int64_t>(cfg.bins_y);
    for (std::size_t k = 1; k <= big_n; ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      const std::int64_t tb = (kk * bt + static_cast<std::int64_t>(big_n) - 1) / static_cast<std::int64_t>(big_n) - 1;
      const std::int64_t yb = std::min<std::int64_t>(w.swap(k) * by / n, by - 1);
      ++counts[static_cast<std::size_t>(tb * by + yb)];
    }
    CsvWriter csv(path, meta, {"time_bin", "space_bin", "t_lo", "t_hi", "y_lo", "y_hi", "count", "empirical", "expected"});
    for (int a = 0; a < cfg.bins_t; ++a) {
      for (int b = 0; b < cfg.bins_y; ++b) {
        const double ylo = -1 + 2.0 * b / cfg.bins_y;
        const double yhi = -1 + 2.0 * (b + 1) / cfg.bins_y;
        const std::int64_t c = counts[static_cast<std::size_t>(a * cfg.bins_y + b)];
        const double expected = (semicircle_cdf(yhi) - semicircle_cdf(ylo)) / cfg.bins_t;
        csv << a << b << static_cast<double>(a) / cfg.bins_t << static_cast<double>(a + 1) / cfg.bins_t << ylo << yhi << c
            << (big_n ? static_cast<double>(c) / static_cast<double>(big_n) : 0.0) << expected;
        csv.end_row();
      }
    }
    files["eta_hist"] = path;
    files["lln_distance"] = big_n ? lln_distance(w, cfg.bins_t, cfg.bins_y) : 0.0;
  }
  json mu = json::array();
  for (double t : cfg.times) {
    if (!(t >= 0 && t <= 1)) throw UsageError("stats times must lie in [0,1]");
    const std::string path = join(cfg.out_dir, "mu_" + time_label(t) + ".csv");
    CsvWriter csv(path, meta, {"i", "x", "y"});
    const auto m = scaled_configuration(w, t);
    for (std::size_t i = 0; i < m.points.size(); ++i) {
      csv << i + 1 << m.points[i].x << m.points[i].y;
      csv.end_row();
    }
    mu.push_back({{"t", t}, {"path", path}});
  }
  files["mu"] = std::move(mu);
  {
    std::vector<int> parts = cfg.particles;
    if (parts.empty()) {
      const int count = std::min(n, 8);
      for (int j = 0; j < count; ++j) parts.push_back(count == 1 ? 1 : 1 + j * (n - 1) / (count - 1));
    }
    for (int p : parts) {
      if (p < 1 || p > n) throw UsageError("trajectory particle out of range");
    }
    std::vector<std::string> cols = {"k", "t"};
    for (int p : parts) cols.push_back("T_" + std::to_string(p));
    const std::string path = join(cfg.out_dir, "trajectories.csv");
    CsvWriter csv(path, meta, cols);
    ConfigurationCursor cur(w);
    for (std::size_t k = 0;; ++k) {
      csv << k << (big_n ? static_cast<double>(k) / static_cast<double>(big_n) : 0.0);
      for (int p : parts) csv << 2.0 * cur.location_of(p) / n - 1;
      csv.end_row();
      if (cur.at_end()) break;
      cur.advance();
    }
    files["trajectories"] = path;
  }
  {
    // Graph of sigma_k^{-1} sigma_{k+M}, M = floor(N/2), rotated by -pi k / N.
    const std::size_t half = big_n / 2;
    const std::string path = join(cfg.out_dir, "sliding.csv");
    CsvWriter csv(path, meta, {"frame", "k", "i", "x", "y"});
    std::vector<std::size_t> ks;
    for (int f = 0; f < cfg.frames; ++f) {
      const std::size_t k = cfg.frames == 1 ? 0 : static_cast<std::size_t>(std::llround(static_cast<double>(f) * half / (cfg.frames - 1)));
      if (ks.empty() || ks.back() != k) ks.push_back(k);
    }
    for (std::size_t f = 0; f < ks.size(); ++f) {
      const std::size_t k = ks[f];
      const Permutation pi = configuration(w, k).inverse() * configuration(w, k + half);
      const double a = big_n ? -std::numbers::pi * static_cast<double>(k) / static_cast<double>(big_n) : 0.0;
      for (int i = 1; i <= n; ++i) {
        const double x = 2.0 * i / n - 1;
        const double y = 2.0 * pi(i) / n - 1;
        csv << f << k << i << x * std::cos(a) - y * std::sin(a) << x * std::sin(a) + y * std::cos(a);
        csv.end_row();
      }
    }
    files["sliding"] = path;
  }
  json doc;
  meta.wall_time_s = seconds_since(t0);
  doc["metadata"] = meta.to_json();
  doc["files"] = std::move(files);
  return doc;
}

json cmd_first_swap(const FirstSwapConfig& cfg) {
  if (cfg.n < 2) throw UsageError("first-swap-dist needs n >= 2");
  const auto t0 = Clock::now();
  const auto dist = first_swap_distribution(cfg.n);
  std::vector<BigCount> census;
  if (cfg.n <= kMaxEnumerationSize) census = first_swap_census(cfg.n);
  ExactRational total = 0;
  bool matches = true;
  const BigCount all = stanley_count(cfg.n);
  json probs = json::array();
  for (std::size_t r = 0; r < dist.size(); ++r) {
    total += dist[r];
    json e = rational_to_json(dist[r]);
    e["r"] = r + 1;
    if (!census.empty()) {
      e["census"] = big_to_json(census[r]);
      matches = matches && ExactRational(census[r], all) == dist[r];
    }
    probs.push_back(std::move(e));
  }
  RunMetadata meta{"first-swap-dist", 0, {{"n", cfg.n}}, seconds_since(t0)};
  if (!cfg.out.empty()) {
    CsvWriter csv(cfg.out, meta, {"r", "num", "den", "value", "log_value"});
    for (std::size_t r = 0; r < dist.size(); ++r) {
      csv << r + 1 << to_string(BigCount(boost::multiprecision::numerator(dist[r])))
          << to_string(BigCount(boost::multiprecision::denominator(dist[r]))) << to_double(dist[r])
          << log_first_swap_probability(cfg.n, static_cast<int>(r + 1));
      csv.end_row();
    }
  }
  json doc;
  doc["metadata"] = meta.to_json();
  doc["n"] = cfg.n;
  doc["sum_is_one"] = total == 1;
  if (!census.empty()) doc["matches_census"] = matches;
  doc["probabilities"] = std::move(probs);
  return doc;
}

json cmd_double_flip(const DoubleFlipConfig& cfg) {
  if (cfg.n < 2 || cfg.n % 2 != 0) throw UsageError("double-flip needs an even n >= 2");
  const auto t0 = Clock::now();
  const DoubleFlip d = double_flip(cfg.n);
  RunMetadata meta{"double-flip", 0, {{"n", cfg.n}}, std::nullopt};
  json doc;
  doc["n"] = d.n;
  doc["h"] = d.h;
  doc["words_to_psi"] = big_to_json(d.words_to_psi);
  doc["words_from_psi"] = big_to_json(d.words_from_psi);
  doc["all_networks"] = big_to_json(d.all_networks);
  doc["probability"] = rational_to_json(d.probability);
  const double nlp = -log_rational(d.probability);
  doc["neg_log_probability"] = nlp;
  doc["neg_log_probability_over_n2"] = nlp / (static_cast<double>(cfg.n) * cfg.n);
  doc["limit"] = std::log(2.0) / 4;
  meta.wall_time_s = seconds_since(t0);
  doc["metadata"] = meta.to_json();
  return doc;
}

json cmd_limit_profile(const LimitProfileConfig& cfg) {
  if (cfg.grid < 1) throw UsageError("--grid must be positive");
  const auto t0 = Clock::now();
  RunMetadata meta{"limit-profile", cfg.seed, {{"grid", cfg.grid}, {"n", cfg.n}}, std::nullopt};
  json doc;
  if (!cfg.out.empty()) {
    CsvWriter csv(cfg.out, meta, {"x", "y", "L"});
    for (int a = 0; a <= cfg.grid; ++a) {
      for (int b = 0; b <= cfg.grid; ++b) {
        const double x = static_cast<double>(a) / cfg.grid;
        const double y = static_cast<double>(b) / cfg.grid;
        csv << x << y << profile_L(x, y);
        csv.end_row();
      }
    }
    doc["profile"] = cfg.out;
  }
  if (cfg.n > 0) {
    if (cfg.n < 2) throw UsageError("a sampled staircase needs n >= 2");
    RandomStream rng(cfg.seed, 0);
    const auto t = sample_staircase_tableau(cfg.n, rng);
    doc["n"] = cfg.n;
    doc["profile_deviation"] = staircase_profile_deviation(t);
    doc["first_row_deviation_over_n"] = first_row_deviation(t) / cfg.n;
    if (!cfg.tableau_out.empty()) {
      CsvWriter csv(cfg.tableau_out, meta, {"i", "j", "x", "y", "scaled_entry", "L"});
      const double n2 = static_cast<double>(cfg.n) * cfg.n;
      for (int i = 1; i <= t.shape().rows(); ++i) {
        for (int j = 1; j <= t.shape().row_length(i); ++j) {
          const double x = static_cast<double>(i) / cfg.n;
          const double y = static_cast<double>(j) / cfg.n;
          csv << i << j << x << y << 2.0 * t.at({i, j}) / n2 << profile_L(x, y);
          csv.end_row();
        }
      }
      doc["tableau"] = cfg.tableau_out;
    }
  }
  meta.wall_time_s = seconds_since(t0);
  doc["metadata"] = meta.to_json();
  return doc;
}

json cmd_arch_sample(const ArchConfig& cfg) {
  if (!(cfg.t >= 0 && cfg.t <= 1)) throw UsageError("--t must lie in [0,1]");
  if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
  const auto t0 = Clock::now();
  RandomStream rng(cfg.seed, 0);
  std::vector<Point2> pts;
  pts.reserve(cfg.samples);
  for (std::size_t k = 0; k < cfg.samples; ++k) pts.push_back(arch_sample(cfg.t, rng));
  RunMetadata meta{"arch-sample", cfg.seed, {{"t", cfg.t}, {"samples", cfg.samples}}, std::nullopt};
  if (!cfg.out.empty()) {
    CsvWriter csv(cfg.out, meta, {"x", "y"});
    for (const auto& p : pts) {
      csv << p.x << p.y;
      csv.end_row();
    }
  }
  json doc;
  doc["t"] = cfg.t;
  doc["samples"] = cfg.samples;
  doc["projection_ks"] = arch_projection_ks(pts, cfg.t);
  if (cfg.t == 0.5) doc["radial_ks"] = arch_radial_ks(pts);
  meta.wall_time_s = seconds_since(t0);
  doc["metadata"] = meta.to_json();
  return doc;
}

json cmd_check(const CheckConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("check needs --in");
  if (!(cfg.eps > 0) || !(cfg.holder_eps > 0) || cfg.grid < 1) throw UsageError("tolerances must be positive");
  const auto t0 = Clock::now();
  const auto nets = read_networks(cfg.in);
  auto reports = parallel_monte_carlo(nets.size(), 0, cfg.threads, [&](RandomStream&, std::size_t r) {
    const SortingNetwork& w = nets[r];
    const auto oct = check_octagon(w, cfg.eps);
    const auto hol = check_holder(w, cfg.holder_eps, cfg.grid);
    const bool first_row = check_first_row_bound(w);
    json j;
    j["index"] = r;
    j["n"] = w.n();
    j["octagon"] = {{"pass", oct.pass}, {"worst_margin", oct.worst_margin}, {"time", oct.time}, {"particle", oct.particle}};
    j["holder"] = {{"pass", hol.pass}, {"worst_margin", hol.worst_margin}, {"particle", hol.particle}, {"s", hol.s}, {"t", hol.t}};
    j["first_row_bound"] = first_row;
    if (w.length() > 0) j["lln_distance"] = lln_distance(w, 10, 10);
    j["pass"] = oct.pass && hol.pass && first_row;
    return j;
  });
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.at("pass").get<bool>();
  RunMetadata meta{"check", 0, {{"in", cfg.in}, {"eps", cfg.eps}, {"holder_eps", cfg.holder_eps}, {"grid", cfg.grid}},
                   seconds_since(t0)};
  json doc;
  doc["metadata"] = meta.to_json();
  doc["pass"] = pass;
  doc["networks"] = std::move(reports);
  return doc;
}

json cmd_great_circle(const GreatCircleConfig& cfg) {
  const auto t0 = Clock::now();
  const SortingNetwork w = pick(cfg.in, cfg.index);
  if (w.n() < 3) throw UsageError("great-circle needs n >= 3");
  if (cfg.sine_points < 3) throw UsageError("sine fit needs at least 3 points");
  ensure_dir(cfg.out_dir);
  const int n = w.n();
  const GreatCircle c = circle_through(w);
  const double cs = constant_speed_distance(w, c);
  FitOptions opt;
  opt.grid = cfg.grid;
  opt.refinements = cfg.refinements;
  if (opt.grid < 4 || opt.refinements < 0) throw UsageError("bad grid or refinement count");
  const CircleFit fit = fit_circle(w, c, opt);
  const SineFit sine = sine_fit(w, cfg.sine_points);
  const auto nu = empirical_nu(c);

  RunMetadata meta{"great-circle", 0, {{"in", cfg.in}, {"index", cfg.index}, {"grid", cfg.grid}, {"refinements", cfg.refinements}},
                   std::nullopt};
  const std::string theta_path = join(cfg.out_dir, "theta.csv");
  {
    CsvWriter csv(theta_path, meta, {"k", "theta", "linear", "distance"});
    const double big_n = static_cast<double>(w.length());
    for (std::size_t k = 0; k < fit.theta.size(); ++k) {
      csv << k << fit.theta[k] << std::numbers::pi * static_cast<double>(k) / big_n << fit.distance[k];
      csv.end_row();
    }
  }
  const std::string nu_path = join(cfg.out_dir, "nu.csv");
  {
    CsvWriter csv(nu_path, meta, {"i", "x", "y"});
    for (std::size_t i = 0; i < nu.points.size(); ++i) {
      csv << i + 1 << nu.points[i].x << nu.points[i].y;
      csv.end_row();
    }
  }
  json doc;
  doc["n"] = n;
  doc["distances"] = {{"constant_speed", cs},
                      {"constant_speed_over_n", cs / n},
                      {"inf", fit.inf_distance},
                      {"inf_over_n", fit.inf_distance / n}};
  doc["theta"] = theta_path;
  doc["nu"] = nu_path;
  doc["sine_residual"] = sine.max_residual;
  doc["sine_points"] = sine.points;
  doc["max_theta_deviation"] = fit.max_linear_deviation;
  doc["max_theta_step"] = fit.max_step;
  doc["theta_final"] = fit.theta.back();
  doc["grid"] = fit.options.grid;
  doc["grid_spacing"] = fit.grid_spacing;
  doc["refinements"] = fit.options.refinements;
  doc["nu_radial_ks"] = arch_radial_ks(nu.points);
  doc["mu_half_arch_ks"] = arch_projection_ks(scaled_configuration(w, 0.5).points, 0.5);
  meta.wall_time_s = seconds_since(t0);
  doc["metadata"] = meta.to_json();
  return doc;
}

}  // namespace sortnet::harness
