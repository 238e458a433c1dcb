#include "sortnet/harness/verify.hpp"

#include "sortnet/counting.hpp"
#include "sortnet/eg_bijection.hpp"
#include "sortnet/harness/parallel.hpp"
#include "sortnet/hookwalk.hpp"
#include "sortnet/limit_laws.hpp"
#include "sortnet/permutahedron.hpp"
#include "sortnet/stats.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace sortnet::harness {

namespace {

using Clock = std::chrono::steady_clock;
using Rows = std::vector<std::vector<int>>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool holds(double value, const std::string& rel, double threshold) {
  if (rel == "<") return value < threshold;
  if (rel == "<=") return value <= threshold;
  if (rel == ">") return value > threshold;
  if (rel == ">=") return value >= threshold;
  if (rel == "==") return value == threshold;
  return true;
}

// Random stream bases, one block per criterion.
constexpr std::uint64_t kStream = 1'000'000;
constexpr std::uint64_t kBigNetworkStream = 100 * kStream;

class Suite {
 public:
  explicit Suite(const VerifyOptions& opt) : opt_(opt) {}

  CriterionResult run(int id) {
    CriterionResult r;
    r.id = id;
    cur_ = &r;
    const auto t0 = Clock::now();
    try {
      dispatch(id);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    r.seconds = seconds_since(t0);
    bool ok = r.error.empty();
    for (const auto& m : r.measurements) {
      if (m.gating) ok = ok && m.pass;
    }
    r.pass = r.gating ? ok : r.error.empty();
    cur_ = nullptr;
    return r;
  }

 private:
  void title(std::string t, bool gating = true) {
    cur_->title = std::move(t);
    cur_->gating = gating;
  }
  void measure(std::string name, double value, std::string rel, double threshold, bool gating = true) {
    Measurement m{std::move(name), value, std::move(rel), threshold, gating, true};
    m.pass = holds(m.value, m.relation, m.threshold);
    cur_->measurements.push_back(std::move(m));
  }
  void exact(std::string name, bool ok) { measure(std::move(name), ok ? 1 : 0, "==", 1); }
  void report(std::string name, double value) { measure(std::move(name), value, "", 0, false); }
  void note(const std::string& s) { cur_->detail += (cur_->detail.empty() ? "" : "; ") + s; }

  std::uint64_t seed() const { return opt_.seed; }

  const SortingNetwork& network_1000() {
    if (!big_) {
      RandomStream rng(seed(), kBigNetworkStream);
      const auto t0 = Clock::now();
      big_ = sample_usn(1000, rng);
      big_seconds_ = seconds_since(t0);
    }
    return *big_;
  }

  const GreatCircle& circle_1000() {
    if (!circle_) circle_ = circle_through(network_1000());
    return *circle_;
  }

  const std::vector<SortingNetwork>& networks_500() {
    if (mid_.empty()) {
      mid_ = parallel_monte_carlo(20, seed(), opt_.threads, [](RandomStream& rng, std::size_t) { return sample_usn(500, rng); },
                                  8 * kStream);
    }
    return mid_;
  }

  void dispatch(int id) {
    switch (id) {
      case 0: return artifacts();
      case 1: return counting();
      case 2: return bijection();
      case 3: return fixtures();
      case 4: return first_swap();
      case 5: return semicircle();
      case 6: return stationarity();
      case 7: return lln();
      case 8: return octagon();
      case 9: return holder();
      case 10: return profile();
      case 11: return coupling();
      case 12: return hook_walks();
      case 13: return double_flip_check();
      case 14: return great_circle();
      case 15: return archimedes();
      case 16: return permutahedron();
      case 17: return conjectures();
      case 18: return performance();
      default: throw std::invalid_argument("no criterion " + std::to_string(id));
    }
  }

  void artifacts() {
    title("artifact and schema versions of supplied files");
    std::size_t bad = 0;
    for (const auto& path : opt_.artifacts) {
      try {
        const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
        const json meta = csv ? read_csv_metadata(path) : read_json(path).at("metadata");
        check_metadata(meta);
      } catch (const std::exception& e) {
        ++bad;
        note(path + ": " + e.what());
      }
    }
    report("files", static_cast<double>(opt_.artifacts.size()));
    measure("mismatched", static_cast<double>(bad), "==", 0);
  }

  void counting() {
    title("#Omega_n = hook-formula count = enumeration, n = 2..6");
    const std::vector<std::uint64_t> expected = {1, 2, 16, 768, 292864};
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
      std::uint64_t enumerated = 0;
      for_each_network(n, [&](std::span<const int>) { ++enumerated; });
      const BigCount s = stanley_count(n);
      const BigCount d = dimension(staircase(n));
      const BigCount want = expected[static_cast<std::size_t>(n - 2)];
      ok = ok && s == d && d == BigCount(enumerated) && s == want;
      note("n=" + std::to_string(n) + ": " + std::to_string(enumerated));
    }
    exact("all_equal", ok);
  }

  void bijection() {
    title("EG and its inverse are mutually inverse on Omega_4, Omega_5");
    std::size_t failures = 0, checked = 0;
    for (int n : {4, 5}) {
      for (const auto& w : enumerate_networks(n)) {
        ++checked;
        failures += eg_forward(eg_inverse(w).recording) != w;
      }
      for (const auto& t : enumerate_syt(staircase(n))) {
        ++checked;
        failures += eg_inverse(eg_forward(t)).recording != t;
      }
    }
    report("round_trips", static_cast<double>(checked));
    measure("failures", static_cast<double>(failures), "==", 0);
  }

  void fixtures() {
    title("insertion and promotion worked examples");
    const SortingNetwork w(6, {1, 2, 1, 3, 4, 5, 2, 1, 3, 2, 1, 4, 3, 2, 1});
    const Rows recording = {{1, 2, 4, 5, 6}, {3, 7, 9, 12}, {8, 10, 13}, {11, 14}, {15}};
    exact("recording_tableau", eg_inverse(w).recording.rows() == recording);
    const StandardYoungTableau t(Rows{{1, 2, 3, 9}, {4, 5, 10}, {6, 11, 12}, {7, 13, 15}, {8, 14}});
    const Rows promoted = {{1, 3, 4, 10}, {2, 6, 11}, {5, 7, 13}, {8, 12, 14}, {9, 15}};
    const auto phi = opt_.promote_override ? opt_.promote_override(t) : promote(t);
    exact("promotion", phi.rows() == promoted);
  }

  void first_swap() {
    title("exact first-swap law: census for n = 3..6, total mass 1 for n <= 200");
    bool census_ok = true;
    for (int n = 3; n <= 6; ++n) {
      const auto dist = first_swap_distribution(n);
      const auto census = first_swap_census(n);
      const BigCount all = stanley_count(n);
      for (std::size_t r = 0; r < dist.size(); ++r) census_ok = census_ok && ExactRational(census[r], all) == dist[r];
    }
    exact("census_matches", census_ok);
    int worst = 0;
    for (int n = 2; n <= 200; ++n) {
      ExactRational total = 0;
      for (const auto& q : first_swap_distribution(n)) total += q;
      if (total != 1 && worst == 0) worst = n;
    }
    exact("sums_to_one", worst == 0);
    if (worst) note("first failing n = " + std::to_string(worst));
  }

  void semicircle() {
    title("first swap location follows the semicircle law (n = 500, 2e4 samples)");
    // s_N is the column of the maximal entry of the tableau, i.e. the end of
    // the first hook walk; (s_N, ..., s_1) is again uniform, so s_N has the law of s_1.
    const int n = 500;
    const Partition shape = staircase(n);
    const auto cols = parallel_monte_carlo(20000, seed(), opt_.threads,
                                           [&](RandomStream& rng, std::size_t) { return hook_walk(shape, rng).col; }, 5 * kStream);
    std::vector<double> y;
    y.reserve(cols.size());
    for (int c : cols) y.push_back(2.0 * c / n - 1);
    measure("ks", stats::ks_distance(y, semicircle_cdf), "<", opt_.tol.semicircle_ks);
    note("s_1 sampled as s_N of the reversed network (one hook walk per sample)");
  }

  void stationarity() {
    title("rotation bijection on Omega_5; law of s_1 vs s_floor(N/2) at n = 200");
    std::set<SortingNetwork> images;
    bool valid = true;
    const auto all = enumerate_networks(5);
    for (const auto& w : all) {
      const auto r = rotate_shift(w);
      valid = valid && is_sorting_network(5, r.swaps());
      images.insert(r);
    }
    exact("rotate_shift_injective", valid && images.size() == all.size());
    const int n = 200;
    const std::size_t half = network_length(n) / 2;
    const auto pairs = parallel_monte_carlo(10000, seed(), opt_.threads, [&](RandomStream& rng, std::size_t) {
      const auto w = sample_usn(n, rng);
      return std::pair<double, double>(w.swap(1), w.swap(half));
    }, 6 * kStream);
    std::vector<double> first, middle;
    for (const auto& [a, b] : pairs) {
      first.push_back(a);
      middle.push_back(b);
    }
    measure("ks", stats::ks_two_sample(first, middle), "<", opt_.tol.stationarity_ks);
  }

  void lln() {
    title("swap process is close to Lebesgue x semicircle (n = 1000, 10x10 grid)");
    measure("tv", lln_distance(network_1000(), 10, 10), "<", opt_.tol.lln_tv);
  }

  void octagon() {
    title("octagon bound for 20 networks at n = 500, eps = 0.1");
    double worst = 1e300;
    std::size_t passed = 0;
    for (const auto& w : networks_500()) {
      const auto rep = check_octagon(w, opt_.tol.octagon_eps);
      passed += rep.pass;
      worst = std::min(worst, rep.worst_margin);
    }
    measure("passed", static_cast<double>(passed), "==", 20);
    report("worst_margin", worst);
  }

  void holder() {
    title("Hoelder bound for 20 networks at n = 500, eps = 0.2, grid 200");
    double worst = 1e300;
    std::size_t passed = 0;
    for (const auto& w : networks_500()) {
      const auto rep = check_holder(w, opt_.tol.holder_eps, opt_.tol.holder_grid);
      passed += rep.pass;
      worst = std::min(worst, rep.worst_margin);
    }
    measure("passed", static_cast<double>(passed), "==", 20);
    report("worst_margin", worst);
  }

  void profile() {
    title("staircase tableau limit profile and first row (n = 200)");
    RandomStream rng(seed(), 10 * kStream);
    const int n = 200;
    const auto t = sample_staircase_tableau(n, rng);
    measure("profile_deviation", staircase_profile_deviation(t), "<", opt_.tol.profile);
    measure("first_row_deviation_over_n", first_row_deviation(t) / n, "<", opt_.tol.first_row);
  }

  struct Pair {
    Partition inner;
    Partition outer;
  };

  std::vector<Pair> coupling_pairs() {
    std::vector<Pair> pairs = {{Partition({2, 1}), Partition({3, 2})}};
    RandomStream rng(seed(), 11 * kStream);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    seen.insert({{2, 1}, {3, 2}});
    while (pairs.size() < 6) {
      const int m = 4 + static_cast<int>(rng.uniform_below(9));
      const auto all = partitions_of(m);
      const Partition mu = all[rng.uniform_below(all.size())];
      if (dimension(mu) > 1000) continue;
      Partition lam = mu;
      const int drop = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(std::min(3, m - 1))));
      for (int k = 0; k < drop; ++k) {
        const auto corners = lam.corners();
        lam = lam.without(corners[rng.uniform_below(corners.size())]);
      }
      std::pair<std::vector<int>, std::vector<int>> key{{lam.parts().begin(), lam.parts().end()},
                                                        {mu.parts().begin(), mu.parts().end()}};
      if (!seen.insert(key).second) continue;
      pairs.push_back({lam, mu});
    }
    return pairs;
  }

  static std::string shape_text(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
    return s + ")";
  }

  void coupling() {
    title("coupled tableaux: domination bound and uniform marginals");
    std::size_t violations = 0;
    double min_p = 1;
    RandomStream rng(seed(), 11 * kStream + 1);
    for (const auto& pr : coupling_pairs()) {
      const int slack = static_cast<int>(pr.outer.size() - pr.inner.size());
      const auto inner_all = enumerate_syt(pr.inner);
      const auto outer_all = enumerate_syt(pr.outer);
      std::map<StandardYoungTableau, std::int64_t> fi, fo;
      for (int k = 0; k < 10000; ++k) {
        const auto c = coupled_sample(pr.inner, pr.outer, rng);
        for (Cell cell : pr.inner.cells()) violations += c.outer.at(cell) > c.inner.at(cell) + slack;
        ++fi[c.inner];
        ++fo[c.outer];
      }
      for (const auto* side : {&inner_all, &outer_all}) {
        const auto& freq = side == &inner_all ? fi : fo;
        std::vector<std::int64_t> counts;
        for (const auto& t : *side) counts.push_back(freq.count(t) ? freq.at(t) : 0);
        if (counts.size() < 2) continue;
        const auto cs = stats::chi_square(counts, std::vector<double>(counts.size(), 1.0 / static_cast<double>(counts.size())));
        min_p = std::min(min_p, cs.p_value);
      }
      note(shape_text(pr.inner) + " in " + shape_text(pr.outer));
    }
    measure("violations", static_cast<double>(violations), "==", 0);
    measure("min_chi_square_p", min_p, ">", opt_.tol.coupling_p);
  }

  void hook_walks() {
    title("hook walk corner frequencies (1e5 walks per shape)");
    RandomStream rng(seed(), 12 * kStream);
    double worst = 0;
    for (const auto& shape : {Partition({2, 1}), Partition({3, 2}), staircase(4)}) {
      const auto exact_dist = exact_corner_distribution(shape);
      std::map<Cell, std::int64_t> counts;
      const std::int64_t walks = 100000;
      for (std::int64_t k = 0; k < walks; ++k) ++counts[hook_walk(shape, rng)];
      for (const auto& [cell, p] : exact_dist) {
        const std::int64_t c = counts.count(cell) ? counts.at(cell) : 0;
        worst = std::max(worst, std::abs(stats::binomial_z(c, walks, to_double(p))));
      }
    }
    measure("max_abs_z", worst, "<=", opt_.tol.hook_sigma);
  }

  void double_flip_check() {
    title("double flip: exact values and the -ln P / n^2 trend");
    exact("P4_is_quarter", double_flip_probability(4) == ExactRational(1, 4));
    const Permutation psi4 = double_flip_permutation(4);
    std::size_t through = 0;
    const auto h4 = static_cast<std::size_t>(inversion_number(psi4));
    for (const auto& w : enumerate_networks(4)) through += configuration(w, h4) == psi4;
    exact("census_4_of_16", through == 4);
    const DoubleFlip d8 = double_flip(8);
    const Permutation psi8 = double_flip_permutation(8);
    const Permutation rho8 = Permutation::reverse(8);
    const bool counts_ok = d8.words_to_psi == count_reduced_words(psi8) &&
                           d8.words_from_psi == count_reduced_words(psi8.inverse() * rho8) &&
                           d8.all_networks == count_reduced_words(rho8) &&
                           d8.probability == pass_through_probability(psi8);
    exact("n8_reduced_word_counts", counts_ok);
    const double limit = std::log(2.0) / 4;
    std::vector<double> trend;
    for (int n : {8, 16, 24, 32}) {
      trend.push_back(-log_rational(double_flip_probability(n)) / (static_cast<double>(n) * n));
      report("n" + std::to_string(n), trend.back());
    }
    bool toward = true;
    for (std::size_t k = 1; k < trend.size(); ++k) {
      toward = toward && std::abs(trend[k] - limit) < std::abs(trend[k - 1] - limit) &&
               (trend[k] - trend[k - 1]) * (trend[1] - trend[0]) > 0;
    }
    measure("monotone_toward_ln2_over_4", toward ? 1 : 0, "==", 1, false);
    measure("n32_at_least", trend.back(), ">=", opt_.tol.double_flip_lo, false);
    measure("n32_at_most", trend.back(), "<=", opt_.tol.double_flip_hi, false);
  }

  void great_circle() {
    title("two-point great circle at n = 1000; bubble sort far from its circle");
    const auto& w = network_1000();
    const auto& c = circle_1000();
    const double n = w.n();
    measure("constant_speed_over_n", constant_speed_distance(w, c) / n, "<", opt_.tol.circle_speed);
    const CircleFit fit = fit_circle(w, c);
    measure("max_theta_deviation", fit.max_linear_deviation, "<", opt_.tol.theta_deviation);
    report("inf_distance_over_n", fit.inf_distance / n);
    report("theta_final", fit.theta.back());
    report("max_theta_step", fit.max_step);
    const auto bubble = bubble_sort_network(1000);
    measure("bubble_constant_speed_over_n", constant_speed_distance(bubble, circle_through(bubble)) / n, ">",
            opt_.tol.bubble_speed);
  }

  void archimedes() {
    title("Archimedes sampler: 8 projections of 1e5 draws vs uniform[-1,1]");
    RandomStream rng(seed(), 15 * kStream);
    std::vector<Point2> pts;
    pts.reserve(100000);
    for (int k = 0; k < 100000; ++k) pts.push_back(arch_sample(0.5, rng));
    measure("max_ks", arch_projection_ks(pts, 0.5, 8), "<", opt_.tol.arch_ks);
  }

  void permutahedron() {
    title("permutahedron: sphere identities and edges of length sqrt(2) for 5 networks at n = 100");
    bool sphere = true, edges = true;
    for (std::uint64_t r = 0; r < 5; ++r) {
      RandomStream rng(seed(), 16 * kStream + r);
      const auto w = sample_usn(100, rng);
      ConfigurationCursor cur(w);
      std::vector<int> prev = embed(cur.configuration());
      sphere = sphere && on_sphere(prev);
      while (!cur.at_end()) {
        cur.advance();
        std::vector<int> z = embed(cur.configuration());
        sphere = sphere && on_sphere(z);
        std::int64_t d2 = 0;
        for (std::size_t i = 0; i < z.size(); ++i) d2 += static_cast<std::int64_t>(z[i] - prev[i]) * (z[i] - prev[i]);
        edges = edges && d2 == 2;
        prev = std::move(z);
      }
    }
    exact("sphere_identities", sphere);
    exact("squared_edge_length_2", edges);
  }

  void conjectures() {
    title("diagnostics at n = 1000: sine fit, nu_n and mu_1/2 vs Arch_1/2", false);
    const auto& w = network_1000();
    report("sine_fit_max_residual", sine_fit(w).max_residual);
    report("nu_radial_ks", arch_radial_ks(empirical_nu(circle_1000()).points));
    report("mu_half_projection_ks", arch_projection_ks(scaled_configuration(w, 0.5).points, 0.5));
  }

  void performance() {
    title("sampling time at n = 1000 and n = 2000");
    network_1000();
    measure("seconds_n1000", big_seconds_, "<", opt_.tol.sample_1000_s);
    RandomStream rng(seed(), 18 * kStream);
    const auto t0 = Clock::now();
    const auto w = sample_usn(2000, rng);
    measure("seconds_n2000", seconds_since(t0), "<", opt_.tol.sample_2000_s);
    exact("n2000_valid", is_sorting_network(2000, w.swaps()));
  }

  const VerifyOptions& opt_;
  CriterionResult* cur_ = nullptr;
  std::optional<SortingNetwork> big_;
  double big_seconds_ = 0;
  std::optional<GreatCircle> circle_;
  std::vector<SortingNetwork> mid_;
};

std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string CriterionResult::line() const {
  std::ostringstream os;
  os << (!gating ? (pass ? "INFO" : "FAIL") : (pass ? "PASS" : "FAIL")) << "  " << (id < 10 ? " " : "") << id << "  " << title << ":";
  const char* sep = " ";
  for (const auto& m : measurements) {
    os << sep << m.name << "=" << short_double(m.value);
    if (!m.relation.empty()) os << " " << m.relation << " " << short_double(m.threshold) << (m.gating ? "" : " (diagnostic)");
    if (m.gating && !m.pass) os << " [violated]";
    sep = "; ";
  }
  if (!error.empty()) os << sep << "error: " << error;
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.1f s)", seconds);
  os << buf;
  return os.str();
}

json CriterionResult::to_json() const {
  json j;
  j["id"] = id;
  j["title"] = title;
  j["gating"] = gating;
  j["pass"] = pass;
  json ms = json::array();
  for (const auto& m : measurements) {
    ms.push_back({{"name", m.name},
                  {"value", m.value},
                  {"relation", m.relation},
                  {"threshold", m.threshold},
                  {"gating", m.gating},
                  {"pass", m.pass}});
  }
  j["measurements"] = std::move(ms);
  if (!detail.empty()) j["detail"] = detail;
  if (!error.empty()) j["error"] = error;
  j["seconds"] = seconds;
  return j;
}

bool VerifyReport::pass() const {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

json VerifyReport::to_json() const {
  json j;
  j["pass"] = pass();
  json arr = json::array();
  for (const auto& r : results) arr.push_back(r.to_json());
  j["criteria"] = std::move(arr);
  return j;
}

VerifyReport run_verify(const VerifyOptions& opt, const std::function<void(const CriterionResult&)>& on_result) {
  for (int id : opt.only) {
    if (id < 0 || id > kCriteria) throw std::invalid_argument("unknown criterion " + std::to_string(id));
  }
  Suite suite(opt);
  VerifyReport rep;
  std::vector<int> ids;
  if (!opt.artifacts.empty()) ids.push_back(0);
  for (int id = 1; id <= kCriteria; ++id) {
    if (opt.only.empty() || opt.only.count(id)) ids.push_back(id);
  }
  for (int id : ids) {
    rep.results.push_back(suite.run(id));
    if (on_result) on_result(rep.results.back());
  }
  return rep;
}

}  // namespace sortnet::harness
