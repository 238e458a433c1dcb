#include "sortnet/permutahedron.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace sortnet {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

using v4d = double __attribute__((vector_size(32)));
using v4m = long long __attribute__((vector_size(32)));

inline v4d load4(const double* p) {
  v4d r;
  std::memcpy(&r, p, sizeof r);
  return r;
}
inline void store4(double* p, v4d x) { std::memcpy(p, &x, sizeof x); }
inline v4d splat(double x) { return v4d{x, x, x, x}; }
inline v4d vabs(v4d x) { return (v4d)((v4m)x & 0x7fffffffffffffffLL); }
inline bool any(v4m m) { return (m[0] | m[1] | m[2] | m[3]) != 0; }

struct Coord {
  double index;
  double a;
  double u;
  double v;
};

// Grid arrays are padded to a multiple of 4 lanes; padding holds M = +inf and
// arg-max -1, so it is never selected or marked stale.
__attribute__((target_clones("avx2", "default"))) void update_two(std::size_t lanes, const double* cs, const double* sn,
                                                                  double* mx, double* arg, Coord p, Coord q,
                                                                  std::vector<std::size_t>& stale) {
  const v4d ip = splat(p.index), iq = splat(q.index);
  const v4d ap = splat(p.a), up = splat(p.u), vp = splat(p.v);
  const v4d aq = splat(q.a), uq = splat(q.u), vq = splat(q.v);
  // Four vectors per round so the rare stale check is paid once per 16 lanes.
  for (std::size_t g0 = 0; g0 < lanes; g0 += 16) {
    v4m lost[4];
    v4m seen = {0, 0, 0, 0};
    const std::size_t rounds = std::min<std::size_t>(4, (lanes - g0) / 4);
    for (std::size_t r = 0; r < rounds; ++r) {
      const std::size_t g = g0 + 4 * r;
      const v4d c = load4(cs + g);
      const v4d s = load4(sn + g);
      const v4d m = load4(mx + g);
      const v4d a = load4(arg + g);
      const v4d ep = vabs(ap - up * c - vp * s);
      const v4d eq = vabs(aq - uq * c - vq * s);
      const v4m pfirst = ep >= eq;
      const v4d cand = pfirst ? ep : eq;
      const v4d who = pfirst ? ip : iq;
      const v4m hit = (a == ip) | (a == iq);
      const v4m take = (cand > m) | (hit & (cand == m));
      store4(mx + g, take ? cand : m);
      store4(arg + g, take ? who : a);
      lost[r] = hit & ~take;
      seen |= lost[r];
    }
    if (any(seen)) {
      for (std::size_t r = 0; r < rounds; ++r) {
        for (int l = 0; l < 4; ++l) {
          if (lost[r][l]) stale.push_back(g0 + 4 * r + static_cast<std::size_t>(l));
        }
      }
    }
  }
}

/// max_i |a_i - u_i c - v_i s| and the first index attaining it.
__attribute__((target_clones("avx2", "default"))) double column_max(std::size_t n, const double* a, const double* u,
                                                                    const double* v, double c, double s, int* where) {
  const v4d vc = splat(c), vs = splat(s);
  v4d acc = splat(-1);
  v4d at = splat(0);
  v4d idx = {0, 1, 2, 3};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4, idx += 4) {
    const v4d e = vabs(load4(a + i) - load4(u + i) * vc - load4(v + i) * vs);
    const v4m gt = e > acc;
    acc = gt ? e : acc;
    at = gt ? idx : at;
  }
  double m = -1;
  double best = 0;
  for (int l = 0; l < 4; ++l) {
    if (acc[l] > m || (acc[l] == m && at[l] < best)) {
      m = acc[l];
      best = at[l];
    }
  }
  for (; i < n; ++i) {
    const double e = std::abs(a[i] - u[i] * c - v[i] * s);
    if (e > m) {
      m = e;
      best = static_cast<double>(i);
    }
  }
  *where = static_cast<int>(best);
  return m;
}

__attribute__((target_clones("avx2", "default"))) std::size_t first_min(std::size_t lanes, const double* mx) {
  v4d acc = load4(mx);
  for (std::size_t g = 4; g < lanes; g += 4) {
    const v4d x = load4(mx + g);
    acc = x < acc ? x : acc;
  }
  const double m = std::min(std::min(acc[0], acc[1]), std::min(acc[2], acc[3]));
  const v4d vm = splat(m);
  std::size_t g = 0;
  while (!any(load4(mx + g) == vm)) g += 4;
  while (mx[g] != m) ++g;
  return g;
}

/// Tracks M[g] = |a - u cos(theta_g) - v sin(theta_g)|_inf on a fixed grid
/// while coordinates of a change.
class GridSweep {
 public:
  GridSweep(const GreatCircle& c, std::vector<double> a, int grid)
      : c_(c), a_(std::move(a)), grid_(grid), lanes_((static_cast<std::size_t>(grid) + 3) / 4 * 4),
        cos_(lanes_, 0.0), sin_(lanes_, 0.0), max_(lanes_, std::numeric_limits<double>::infinity()), arg_(lanes_, -1.0),
        speed_(a_.size()) {
    for (int g = 0; g < grid; ++g) {
      const double th = 2 * kPi * g / grid;
      cos_[static_cast<std::size_t>(g)] = std::cos(th);
      sin_[static_cast<std::size_t>(g)] = std::sin(th);
    }
    for (std::size_t g = 0; g < static_cast<std::size_t>(grid); ++g) recompute(g);
    for (std::size_t i = 0; i < a_.size(); ++i) speed_[i] = std::hypot(c.u[i], c.v[i]);
    stale_.reserve(lanes_);
  }

  double spacing() const { return 2 * kPi / grid_; }
  const std::vector<double>& point() const { return a_; }

  /// Applies a_i = values[j] for i = index[j] and refreshes the grid.
  void update(const int* index, const double* values, int count) {
    for (int j = 0; j < count; ++j) a_[static_cast<std::size_t>(index[j])] = values[j];
    stale_.clear();
    if (count == 2) {
      update_two(lanes_, cos_.data(), sin_.data(), max_.data(), arg_.data(), coord(index[0]), coord(index[1]), stale_);
    } else if (count > 0) {
      update_general(index, values, count);
    }
    for (std::size_t g : stale_) recompute(g);
  }

  /// First grid index of the smallest value.
  std::size_t argmin() const { return first_min(lanes_, max_.data()); }
  double value(std::size_t g) const { return max_[g]; }
  double angle(std::size_t g) const { return static_cast<double>(g) * spacing(); }

  /// Indices that can attain the maximum anywhere within h of grid point g:
  /// each coordinate error moves at speed at most hypot(u_i, v_i).
  void active_near(std::size_t g, double h, std::vector<int>& out) const {
    out.clear();
    const double cg = cos_[g];
    const double sg = sin_[g];
    double floor = 0;
    err_.resize(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) {
      err_[i] = std::abs(a_[i] - c_.u[i] * cg - c_.v[i] * sg);
      floor = std::max(floor, err_[i] - speed_[i] * h);
    }
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (err_[i] + speed_[i] * h * (1 + 1e-12) + 1e-9 >= floor) out.push_back(static_cast<int>(i));
    }
  }

  double evaluate(double theta, const std::vector<int>& active) const {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    double m = 0;
    for (int i : active) {
      const auto k = static_cast<std::size_t>(i);
      m = std::max(m, std::abs(a_[k] - c_.u[k] * ct - c_.v[k] * st));
    }
    return m;
  }

 private:
  Coord coord(int i) const {
    const auto k = static_cast<std::size_t>(i);
    return {static_cast<double>(i), a_[k], c_.u[k], c_.v[k]};
  }

  void update_general(const int* index, const double* values, int count) {
    for (std::size_t g = 0; g < static_cast<std::size_t>(grid_); ++g) {
      const double cg = cos_[g];
      const double sg = sin_[g];
      double cand = -1;
      double who = -1;
      bool hit = false;
      for (int j = 0; j < count; ++j) {
        const auto i = static_cast<std::size_t>(index[j]);
        const double e = std::abs(values[j] - c_.u[i] * cg - c_.v[i] * sg);
        if (e > cand) {
          cand = e;
          who = index[j];
        }
        hit |= index[j] == arg_[g];
      }
      if (cand > max_[g] || (hit && cand == max_[g])) {
        max_[g] = cand;
        arg_[g] = who;
      } else if (hit) {
        stale_.push_back(g);
      }
    }
  }

  void recompute(std::size_t g) {
    int where = 0;
    max_[g] = column_max(a_.size(), a_.data(), c_.u.data(), c_.v.data(), cos_[g], sin_[g], &where);
    arg_[g] = where;
  }

  const GreatCircle& c_;
  std::vector<double> a_;
  int grid_;
  std::size_t lanes_;
  std::vector<double> cos_, sin_, max_, arg_;
  std::vector<double> speed_;
  std::vector<std::size_t> stale_;
  mutable std::vector<double> err_;
};

struct Minimum {
  double theta;
  double value;
};

Minimum minimise(const GridSweep& sweep, int refinements, std::vector<int>& active) {
  const std::size_t g = sweep.argmin();
  const double h = sweep.spacing();
  Minimum best{sweep.angle(g), sweep.value(g)};
  if (refinements <= 0 || best.value == 0) return best;
  sweep.active_near(g, h, active);
  const double ratio = (std::sqrt(5.0) - 1) / 2;
  double lo = best.theta - h;
  double hi = best.theta + h;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = sweep.evaluate(x1, active);
  double f2 = sweep.evaluate(x2, active);
  for (int it = 0; it < refinements; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = sweep.evaluate(x1, active);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = sweep.evaluate(x2, active);
    }
  }
  const Minimum refined = f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
  if (refined.value < best.value) {
    best = refined;
    best.theta = std::fmod(best.theta + 2 * kPi, 2 * kPi);
  }
  return best;
}

std::vector<double> centred(std::span<const int> locations, double centre) {
  std::vector<double> a(locations.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = locations[i] - centre;
  return a;
}

class FitAccumulator {
 public:
  FitAccumulator(std::size_t steps, FitOptions opt, double spacing) {
    fit_.options = opt;
    fit_.grid_spacing = spacing;
    fit_.theta.reserve(steps + 1);
    fit_.distance.reserve(steps + 1);
    steps_ = steps;
  }

  void add(Minimum m) {
    double th = m.theta;
    if (!fit_.theta.empty()) {
      const double prev = fit_.theta.back();
      th += 2 * kPi * std::round((prev - th) / (2 * kPi));
      fit_.max_step = std::max(fit_.max_step, std::abs(th - prev));
    }
    const std::size_t k = fit_.theta.size();
    const double linear = steps_ == 0 ? 0.0 : kPi * static_cast<double>(k) / static_cast<double>(steps_);
    fit_.max_linear_deviation = std::max(fit_.max_linear_deviation, std::abs(th - linear));
    fit_.inf_distance = std::max(fit_.inf_distance, m.value);
    fit_.theta.push_back(th);
    fit_.distance.push_back(m.value);
  }

  CircleFit take() { return std::move(fit_); }

 private:
  CircleFit fit_;
  std::size_t steps_ = 0;
};

void check_options(const FitOptions& opt) {
  if (opt.grid < 4) throw std::invalid_argument("circle fit grid must have at least 4 points");
  if (opt.refinements < 0) throw std::invalid_argument("refinement count must be non-negative");
}

}  // namespace

std::vector<int> embed(const Permutation& p) {
  const Permutation inv = p.inverse();
  return {inv.one_line().begin(), inv.one_line().end()};
}

bool on_sphere(const std::vector<int>& z) {
  const auto n = static_cast<std::int64_t>(z.size());
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  for (int x : z) {
    s1 += x;
    s2 += static_cast<std::int64_t>(x) * x;
  }
  return s1 == n * (n + 1) / 2 && s2 == n * (n + 1) * (2 * n + 1) / 6;
}

SphereParams sphere_params(int n) {
  if (n < 1) throw std::invalid_argument("sphere_params needs n >= 1");
  const double dn = n;
  return {(dn + 1) / 2, std::sqrt((dn * dn * dn - dn) / 12)};
}

std::vector<double> GreatCircle::point(double theta) const {
  std::vector<double> z(u.size());
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = centre + u[i] * ct + v[i] * st;
  return z;
}

double CircleInvariants::worst() const { return std::max({sum_u, sum_v, norm_u, norm_v, dot}); }

CircleInvariants circle_invariants(const GreatCircle& c) {
  const double r = c.radius;
  CircleInvariants out;
  out.sum_u = std::abs(std::accumulate(c.u.begin(), c.u.end(), 0.0)) / r;
  out.sum_v = std::abs(std::accumulate(c.v.begin(), c.v.end(), 0.0)) / r;
  out.norm_u = std::abs(std::sqrt(dot(c.u, c.u)) - r) / r;
  out.norm_v = std::abs(std::sqrt(dot(c.v, c.v)) - r) / r;
  out.dot = std::abs(dot(c.u, c.v)) / (r * r);
  return out;
}

GreatCircle make_circle(std::vector<double> u, std::vector<double> v) {
  if (u.size() != v.size() || u.empty()) throw std::invalid_argument("circle vectors must have equal positive length");
  const auto sp = sphere_params(static_cast<int>(u.size()));
  return {static_cast<int>(u.size()), sp.centre, sp.radius, std::move(u), std::move(v)};
}

GreatCircle circle_through(const SortingNetwork& w) {
  const int n = w.n();
  if (n < 3) throw std::domain_error("circle_through needs n >= 3");
  const auto sp = sphere_params(n);
  ConfigurationCursor cur(w);
  std::vector<double> u = centred(cur.locations(), sp.centre);
  cur.seek(w.length() / 2);
  std::vector<double> v = centred(cur.locations(), sp.centre);
  const double proj = dot(v, u) / dot(u, u);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * u[i];
  const double len = std::sqrt(dot(v, v));
  if (!(len > 1e-9 * sp.radius)) throw std::domain_error("circle_through: the two configurations are parallel");
  for (double& x : v) x *= sp.radius / len;
  return {n, sp.centre, sp.radius, std::move(u), std::move(v)};
}

double constant_speed_distance(const SortingNetwork& w, const GreatCircle& c) {
  if (c.n != w.n()) throw std::invalid_argument("circle and network sizes differ");
  const std::size_t big_n = w.length();
  ConfigurationCursor cur(w);
  double worst = 0;
  for (std::size_t k = 0;; ++k) {
    const double th = big_n == 0 ? 0.0 : kPi * static_cast<double>(k) / static_cast<double>(big_n);
    const double ct = std::cos(th);
    const double st = std::sin(th);
    const auto loc = cur.locations();
    for (std::size_t i = 0; i < loc.size(); ++i) {
      worst = std::max(worst, std::abs(loc[i] - c.centre - c.u[i] * ct - c.v[i] * st));
    }
    if (cur.at_end()) break;
    cur.advance();
  }
  return worst;
}

CircleFit fit_circle(const SortingNetwork& w, const GreatCircle& c, FitOptions opt) {
  check_options(opt);
  if (c.n != w.n()) throw std::invalid_argument("circle and network sizes differ");
  ConfigurationCursor cur(w);
  GridSweep sweep(c, centred(cur.locations(), c.centre), opt.grid);
  FitAccumulator acc(w.length(), opt, sweep.spacing());
  std::vector<int> active;
  acc.add(minimise(sweep, opt.refinements, active));
  while (!cur.at_end()) {
    const int s = w.swap(cur.time() + 1);
    const int idx[2] = {cur.particle_at(s) - 1, cur.particle_at(s + 1) - 1};
    cur.advance();
    const double vals[2] = {cur.location_of(idx[0] + 1) - c.centre, cur.location_of(idx[1] + 1) - c.centre};
    sweep.update(idx, vals, 2);
    acc.add(minimise(sweep, opt.refinements, active));
  }
  return acc.take();
}

CircleFit fit_path(const std::vector<std::vector<double>>& path, const GreatCircle& c, FitOptions opt) {
  check_options(opt);
  if (path.empty()) throw std::invalid_argument("fit_path needs at least one point");
  std::vector<double> start(path.front());
  for (double& x : start) x -= c.centre;
  GridSweep sweep(c, std::move(start), opt.grid);
  FitAccumulator acc(path.size() - 1, opt, sweep.spacing());
  std::vector<int> active;
  acc.add(minimise(sweep, opt.refinements, active));
  std::vector<int> idx;
  std::vector<double> vals;
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[k].size() != static_cast<std::size_t>(c.n)) throw std::invalid_argument("path point has the wrong dimension");
    idx.clear();
    vals.clear();
    for (std::size_t i = 0; i < path[k].size(); ++i) {
      const double a = path[k][i] - c.centre;
      if (a != sweep.point()[i]) {
        idx.push_back(static_cast<int>(i));
        vals.push_back(a);
      }
    }
    sweep.update(idx.data(), vals.data(), static_cast<int>(idx.size()));
    acc.add(minimise(sweep, opt.refinements, active));
  }
  return acc.take();
}

double inf_distance(const SortingNetwork& w, const GreatCircle& c, FitOptions opt) {
  return fit_circle(w, c, opt).inf_distance;
}

std::vector<double> theta_sequence(const SortingNetwork& w, const GreatCircle& c, FitOptions opt) {
  return fit_circle(w, c, opt).theta;
}

ScaledPointMeasure empirical_nu(const GreatCircle& c) {
  ScaledPointMeasure m;
  m.points.reserve(c.u.size());
  const double scale = 2.0 / c.n;
  for (std::size_t i = 0; i < c.u.size(); ++i) m.points.push_back({scale * c.u[i], scale * c.v[i]});
  return m;
}

SineCurve fit_sine_curve(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() != y.size() || t.size() < 2) throw std::invalid_argument("sine fit needs matching samples");
  double ss = 0, sc = 0, cc = 0, ys = 0, yc = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double s = std::sin(kPi * t[j]);
    const double c = std::cos(kPi * t[j]);
    ss += s * s;
    sc += s * c;
    cc += c * c;
    ys += y[j] * s;
    yc += y[j] * c;
  }
  const double det = ss * cc - sc * sc;
  if (!(std::abs(det) > 0)) throw std::domain_error("sine fit: sample times do not determine both coefficients");
  // y ~ a sin(pi t) + b cos(pi t) = A sin(pi t + Theta) with a = A cos Theta, b = A sin Theta.
  const double a = (ys * cc - yc * sc) / det;
  const double b = (yc * ss - ys * sc) / det;
  SineCurve out{std::hypot(a, b), std::atan2(b, a), 0};
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double fit = a * std::sin(kPi * t[j]) + b * std::cos(kPi * t[j]);
    out.residual = std::max(out.residual, std::abs(y[j] - fit));
  }
  return out;
}

SineFit sine_fit(const SortingNetwork& w, int points) {
  if (points < 3) throw std::invalid_argument("sine fit needs at least 3 grid points");
  const int n = w.n();
  const auto un = static_cast<std::size_t>(n);
  const auto up = static_cast<std::size_t>(points);
  const std::vector<double> traj = trajectory_grid(w, points - 1);
  std::vector<double> t(up);
  for (std::size_t j = 0; j < up; ++j) t[j] = static_cast<double>(j) / (points - 1);
  SineFit out;
  out.points = points;
  out.amplitude.resize(un);
  out.phase.resize(un);
  std::vector<double> y(up);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < up; ++j) y[j] = traj[j * un + i];
    const SineCurve f = fit_sine_curve(t, y);
    out.amplitude[i] = f.amplitude;
    out.phase[i] = f.phase;
    if (f.residual > out.max_residual || out.worst_particle == 0) {
      out.max_residual = std::max(out.max_residual, f.residual);
      out.worst_particle = static_cast<int>(i) + 1;
    }
  }
  return out;
}

}  // namespace sortnet
