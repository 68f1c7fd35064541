#include "orlicz/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace orlicz {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DegeneracyProfile DegeneracyProfile::euclidean() {
  return DegeneracyProfile(false, 0.0);
}

DegeneracyProfile DegeneracyProfile::exp_power(double sigma) {
  if (!(sigma > 0.0) || !(sigma <= 2.0))
    throw std::invalid_argument("exp_power: requires sigma in (0, 2]");
  return DegeneracyProfile(true, sigma);
}

double DegeneracyProfile::sigma() const {
  if (!degenerate_) throw std::logic_error("sigma: flat profile has none");
  return sigma_;
}

double DegeneracyProfile::f(double x) const {
  if (!degenerate_) return 1.0;
  double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  return std::exp(-std::pow(ax, -sigma_));  // underflows to 0 near the axis
}

double DegeneracyProfile::inv_f(double x) const {
  if (!degenerate_) return 1.0;
  double ax = std::abs(x);
  if (ax == 0.0) return kInf;
  return std::exp(std::pow(ax, -sigma_));  // overflows to +inf near the axis
}

MetricGrid::MetricGrid(DegeneracyProfile profile, double half_width,
                       int cells_per_axis)
    : profile_(profile), a_(half_width), n_(cells_per_axis) {
  if (!(a_ > 0.0) || !std::isfinite(a_))
    throw std::invalid_argument("MetricGrid: requires half_width > 0");
  if (n_ < 8 || n_ % 2 != 0)
    throw std::invalid_argument("MetricGrid: requires even cells_per_axis >= 8");
  h_ = 2.0 * a_ / n_;
}

std::size_t MetricGrid::node_count() const {
  std::size_t m = static_cast<std::size_t>(n_ + 1);
  return m * m;
}

std::size_t MetricGrid::index(int i, int j) const {
  return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_ + 1) +
         static_cast<std::size_t>(i);
}

// long knight moves included so the discrete metric tracks oblique geodesics
const std::vector<GridMove>& grid_moves() {
  static const std::vector<GridMove> kStencil = {
      {1, 0},  {-1, 0},  {0, 1},  {0, -1},  {1, 1},  {1, -1},  {-1, 1}, {-1, -1},
      {1, 2},  {1, -2},  {-1, 2}, {-1, -2}, {2, 1},  {2, -1},  {-2, 1}, {-2, -1},
      {1, 3},  {1, -3},  {-1, 3}, {-1, -3}, {3, 1},  {3, -1},  {-3, 1}, {-3, -1},
  };
  return kStencil;
}

double grid_move_cost(const MetricGrid& g, int i, int j, const GridMove& m) {
  (void)j;
  double dx = m.di * g.h();
  double dy = m.dj * g.h();
  if (m.dj == 0) return std::abs(dx);
  double xm = 0.5 * (g.x(i) + g.x(i + m.di));
  double inv = g.profile().inv_f(xm);
  if (std::isinf(inv)) return kInf;
  return std::hypot(dx, dy * inv);  // +inf when the climb cost overflows
}

DistanceField distance_field(const MetricGrid& grid, int src_i, int src_j) {
  int m = grid.nodes_per_axis();
  if (src_i < 0 || src_i >= m || src_j < 0 || src_j >= m)
    throw std::invalid_argument("distance_field: source off the grid");
  std::vector<double> d(grid.node_count(), kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  d[grid.index(src_i, src_j)] = 0.0;
  pq.emplace(0.0, grid.index(src_i, src_j));
  while (!pq.empty()) {
    auto [dist, idx] = pq.top();
    pq.pop();
    if (dist > d[idx]) continue;
    int i = static_cast<int>(idx % static_cast<std::size_t>(m));
    int j = static_cast<int>(idx / static_cast<std::size_t>(m));
    for (const GridMove& mv : grid_moves()) {
      int ni = i + mv.di, nj = j + mv.dj;
      if (ni < 0 || ni >= m || nj < 0 || nj >= m) continue;
      double c = grid_move_cost(grid, i, j, mv);
      if (std::isinf(c)) continue;
      double nd = dist + c;
      std::size_t nidx = grid.index(ni, nj);
      if (nd < d[nidx]) {
        d[nidx] = nd;
        pq.emplace(nd, nidx);
      }
    }
  }
  return DistanceField(grid, src_i, src_j, std::move(d));
}

DistanceField origin_distance_field(const MetricGrid& grid) {
  return distance_field(grid, grid.center(), grid.center());
}

double ball_measure(const DistanceField& field, double r) {
  const MetricGrid& g = field.grid();
  if (!(r > 0.0) || !(r <= g.a() * (1.0 + 1e-12)))
    throw std::invalid_argument("ball_measure: requires 0 < r <= half_width");
  std::size_t count = 0;
  for (double d : field.values())
    if (d < r) ++count;
  return static_cast<double>(count) * g.h() * g.h();
}

double doubling_ratio(const DistanceField& field, double r) {
  const MetricGrid& g = field.grid();
  if (!(r > 0.0) || !(2.0 * r <= g.a() * (1.0 + 1e-12)))
    throw std::invalid_argument("doubling_ratio: requires 0 < 2r <= half_width");
  double inner = ball_measure(field, r);
  if (inner == 0.0) throw DegenerateDataError("doubling_ratio: empty inner ball");
  return ball_measure(field, 2.0 * r) / inner;
}

double volume_asymptotic(const DegeneracyProfile& profile, double r) {
  if (!profile.degenerate())
    throw std::invalid_argument("volume_asymptotic: flat profile has no law");
  if (!(r > 0.0)) throw std::invalid_argument("volume_asymptotic: requires r > 0");
  double s = profile.sigma();
  return std::pow(r, 2.0 * (s + 1.0)) * std::exp(-std::pow(r, -s));
}

double detour_distance(const DegeneracyProfile& profile, double x, double y,
                       double x_cap) {
  if (!profile.degenerate())
    throw std::invalid_argument("detour_distance: degenerate profile only");
  double ax = std::abs(x), ay = std::abs(y);
  if (!(x_cap > ax)) throw std::invalid_argument("detour_distance: cap <= |x|");
  if (ay == 0.0) return ax;
  auto cost = [&](double X) { return 2.0 * X - ax + ay * profile.inv_f(X); };
  double lo = std::max(ax, 1e-12);
  double X = golden_min(cost, lo, x_cap);
  return std::min(cost(X), std::min(cost(lo), cost(x_cap)));
}

namespace {

// returns {thickness, argmax X}; log-domain objective ln(s - 2X + |x|) - X^-sigma
std::pair<double, double> thickness_impl(const DegeneracyProfile& p, double x,
                                         double s) {
  double ax = std::abs(x);
  if (!(s > ax)) return {0.0, ax};
  double sg = p.sigma();
  auto obj = [&](double X) {
    double budget = s - 2.0 * X + ax;
    if (!(budget > 0.0)) return -kInf;
    return std::log(budget) - std::pow(X, -sg);
  };
  double lo = std::max(ax, 1e-12);
  double hi = 0.5 * (s + ax);
  double X = golden_max(obj, lo, hi);
  double best = std::max(obj(X), obj(lo));
  if (obj(lo) > obj(X)) X = lo;
  if (best == -kInf) return {0.0, ax};
  return {std::exp(best), X};  // underflow to 0 is the honest answer
}

}  // namespace

double column_thickness(const DegeneracyProfile& profile, double x, double s) {
  if (!profile.degenerate())
    throw std::invalid_argument("column_thickness: degenerate profile only");
  if (!(s >= 0.0)) throw std::invalid_argument("column_thickness: requires s >= 0");
  return thickness_impl(profile, x, s).first;
}

std::pair<double, double> column_thickness_argmax(const DegeneracyProfile& profile,
                                                  double x, double s) {
  if (!profile.degenerate())
    throw std::invalid_argument("column_thickness_argmax: degenerate profile only");
  if (!(s >= 0.0))
    throw std::invalid_argument("column_thickness_argmax: requires s >= 0");
  return thickness_impl(profile, x, s);
}

double profile_ball_volume(const MetricGrid& grid, double r) {
  const DegeneracyProfile& p = grid.profile();
  if (!p.degenerate())
    throw std::invalid_argument("profile_ball_volume: degenerate profile only");
  if (!(r > 0.0) || !(r <= grid.a() * (1.0 + 1e-12)))
    throw std::invalid_argument("profile_ball_volume: requires 0 < r <= half_width");
  double v = 0.0;
  for (int i = 0; i < grid.nodes_per_axis(); ++i) {
    double x = grid.x(i);
    if (std::abs(x) >= r) continue;
    double t = std::min(thickness_impl(p, x, r).first, grid.a());
    v += 2.0 * t * grid.h();
  }
  return v;
}

double profile_doubling_ratio(const MetricGrid& grid, double r) {
  if (!(r > 0.0) || !(2.0 * r <= grid.a() * (1.0 + 1e-12)))
    throw std::invalid_argument(
        "profile_doubling_ratio: requires 0 < 2r <= half_width");
  double inner = profile_ball_volume(grid, r);
  if (inner == 0.0)
    throw DegenerateDataError("profile_doubling_ratio: vanishing inner volume");
  return profile_ball_volume(grid, 2.0 * r) / inner;
}

namespace {

struct FitData {
  std::vector<double> r, lnratio;
};

double fit_sse(const FitData& d, double s, std::vector<double>* coef_out) {
  std::vector<std::array<double, 3>> rows;
  rows.reserve(d.r.size());
  for (double r : d.r) rows.push_back({1.0, std::pow(r, -s), r});
  std::vector<double> c = solve_normal_3x3(rows, d.lnratio);
  double sse = 0.0;
  for (std::size_t k = 0; k < d.r.size(); ++k) {
    double pred = c[0] + c[1] * rows[k][1] + c[2] * rows[k][2];
    double e = d.lnratio[k] - pred;
    sse += e * e;
  }
  if (coef_out) *coef_out = c;
  return sse;
}

}  // namespace

DoublingFit log_doubling_exponent_fit(const std::vector<double>& radii,
                                      const std::vector<double>& ratios) {
  if (radii.size() != ratios.size())
    throw std::invalid_argument("log_doubling_exponent_fit: size mismatch");
  if (radii.size() < 3)
    throw std::invalid_argument("log_doubling_exponent_fit: needs >= 3 points");
  FitData d;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!std::isfinite(radii[k]) || !std::isfinite(ratios[k])) continue;
    if (!(radii[k] > 0.0) || !(ratios[k] > 0.0)) continue;
    d.r.push_back(radii[k]);
    d.lnratio.push_back(std::log(ratios[k]));
  }
  if (d.r.size() < 3)
    throw DegenerateDataError("log_doubling_exponent_fit: < 3 usable points");

  // coarse scan for the global basin, then golden refinement inside it
  const double s_lo = 0.05, s_hi = 3.0;
  const int coarse = 60;
  int best_k = 0;
  double best_sse = kInf;
  for (int k = 0; k <= coarse; ++k) {
    double s = s_lo + (s_hi - s_lo) * k / coarse;
    double sse = fit_sse(d, s, nullptr);
    if (sse < best_sse) {
      best_sse = sse;
      best_k = k;
    }
  }
  double step = (s_hi - s_lo) / coarse;
  double blo = std::max(s_lo, s_lo + best_k * step - step);
  double bhi = std::min(s_hi, s_lo + best_k * step + step);
  double s_star =
      golden_min([&](double s) { return fit_sse(d, s, nullptr); }, blo, bhi, 150);

  DoublingFit out;
  std::vector<double> c;
  fit_sse(d, s_star, &c);
  out.sigma_hat = s_star;
  out.level = c[0];
  out.scale = c[1];
  out.drift = c[2];
  out.points = d.r.size();
  auto [rmin_it, rmax_it] = std::minmax_element(d.r.begin(), d.r.end());
  out.excess_variation =
      c[1] * (std::pow(*rmin_it, -s_star) - std::pow(*rmax_it, -s_star));
  out.divergent = out.excess_variation > 0.25;

  // diagnostic: the naive lnln slope (biased when the level term dominates)
  std::vector<double> nx, ny;
  for (std::size_t k = 0; k < d.r.size(); ++k)
    if (d.lnratio[k] > 0.0) {
      nx.push_back(std::log(1.0 / d.r[k]));
      ny.push_back(std::log(d.lnratio[k]));
    }
  if (nx.size() >= 2) out.naive_slope = fit_line(nx, ny).slope;
  return out;
}

}  // namespace orlicz
