#include "orlicz/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "orlicz/detail/grid_diff.hpp"
#include "orlicz/numerics.hpp"

namespace orlicz {

std::vector<double> q_gradient(const MetricGrid& grid, const std::vector<double>& u) {
  if (u.size() != grid.node_count())
    throw std::invalid_argument("q_gradient: field size mismatch");
  std::vector<double> g(u.size());
  int m = grid.nodes_per_axis();
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      g[grid.index(i, j)] = detail::q_gradient_mag(grid, u, i, j);
  return g;
}

std::vector<RadialProfile> standard_profiles(double r, double gamma) {
  if (!(r > 0.0)) throw std::invalid_argument("standard_profiles: requires r > 0");
  CutoffSequence cs(r, gamma, 3);
  double r1 = cs.radius(1), r2 = cs.radius(2), r3 = cs.radius(3);

  auto ramp = [](double hi, double lo) {
    return std::pair(
        [hi, lo](double s) {
          if (s <= lo) return 1.0;
          if (s >= hi) return 0.0;
          return (hi - s) / (hi - lo);
        },
        [hi, lo](double s) {
          return (s > lo && s < hi) ? -1.0 / (hi - lo) : 0.0;
        });
  };

  std::vector<RadialProfile> out;
  {
    auto [v, sl] = ramp(r1, r2);
    out.push_back({"cutoff_ramp_1", v, sl, r1});
  }
  {
    auto [v, sl] = ramp(r2, r3);
    out.push_back({"cutoff_ramp_2", v, sl, r2});
  }
  out.push_back({"linear_bump",
                 [r](double s) { return std::max(0.0, 1.0 - s / r); },
                 [r](double s) { return s < r ? -1.0 / r : 0.0; }, r});
  out.push_back({"quadratic_bump",
                 [r](double s) {
                   double t = std::max(0.0, 1.0 - s / r);
                   return t * t;
                 },
                 [r](double s) {
                   double t = std::max(0.0, 1.0 - s / r);
                   return s < r ? -2.0 * t / r : 0.0;
                 },
                 r});
  return out;
}

ShellQuadrature shell_quadrature(const MetricGrid& grid, double R, int shells) {
  const DegeneracyProfile& p = grid.profile();
  if (!p.degenerate())
    throw std::invalid_argument("shell_quadrature: degenerate profile only");
  if (!(R > 0.0) || !(R <= grid.a() * (1.0 + 1e-12)))
    throw std::invalid_argument("shell_quadrature: requires 0 < R <= half_width");
  if (shells < 8) throw std::invalid_argument("shell_quadrature: too few shells");

  ShellQuadrature q;
  q.mid.resize(shells);
  q.mass.assign(shells, 0.0);
  q.q_mass.assign(shells, 0.0);
  double ds = R / shells;
  for (int k = 0; k < shells; ++k) q.mid[k] = (k + 0.5) * ds;

  double sg = p.sigma();
  for (int i = 0; i < grid.nodes_per_axis(); ++i) {
    double x = grid.x(i);
    if (std::abs(x) >= R) continue;
    double prev = 0.0;
    for (int k = 0; k < shells; ++k) {
      double s_out = (k + 1) * ds;
      auto [thick, xstar] = column_thickness_argmax(p, x, s_out);
      thick = std::min(thick, grid.a());
      double dm = 2.0 * grid.h() * (thick - prev);
      if (dm > 0.0) {
        q.mass[k] += dm;
        // detour eikonal envelope at the outer edge: the ratio
        // f(x)/f(X*) = exp(X*^-sigma - |x|^-sigma) lies in [0, 1]; keeping it
        // in the log domain avoids 0 * inf at the degenerate axis
        double log_ratio = std::pow(xstar, -sg) - std::pow(std::abs(x), -sg);
        double w = std::sqrt(1.0 + std::exp(2.0 * log_ratio));
        q.q_mass[k] += w * dm;
      }
      prev = thick;
    }
  }
  for (double m : q.mass) q.total += m;
  if (!(q.total > 0.0))
    throw DegenerateDataError("shell_quadrature: ball has no resolvable mass");
  return q;
}

SobolevSample sobolev_ratio_radial(const ShellQuadrature& q, const RadialProfile& w,
                                   const YoungFunction& phi) {
  std::vector<double> values(q.mid.size());
  for (std::size_t k = 0; k < q.mid.size(); ++k) values[k] = w.value(q.mid[k]);
  DiscreteMeasureSpace space(q.mass);
  SobolevSample out;
  out.name = w.name;
  out.lhs = luxemburg_norm(values, space, phi);
  double grad = 0.0;
  for (std::size_t k = 0; k < q.mid.size(); ++k)
    grad += std::abs(w.slope(q.mid[k])) * q.q_mass[k];
  out.rhs = grad / q.total;
  if (!(out.rhs > 0.0) || !std::isfinite(out.rhs))
    throw DegenerateDataError("sobolev_ratio_radial: vanishing gradient mass");
  out.ratio = out.lhs / out.rhs;
  return out;
}

SobolevSample sobolev_ratio_field(const DistanceField& field,
                                  const std::vector<double>& w, double r,
                                  const YoungFunction& phi, bool metric_surrogate) {
  const MetricGrid& g = field.grid();
  if (w.size() != g.node_count())
    throw std::invalid_argument("sobolev_ratio_field: field size mismatch");
  if (!(r > 0.0) || !(r <= g.a() * (1.0 + 1e-12)))
    throw std::invalid_argument("sobolev_ratio_field: requires 0 < r <= half_width");

  int m = g.nodes_per_axis();
  std::vector<double> vals, weights;
  double grad_sum = 0.0;
  std::size_t count = 0;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      if (!(field.at(i, j) < r)) continue;
      vals.push_back(w[g.index(i, j)]);
      weights.push_back(1.0);
      grad_sum += metric_surrogate ? discrete_lip(g, w, i, j)
                                   : detail::q_gradient_mag(g, w, i, j);
      ++count;
    }
  if (count == 0)
    throw DegenerateDataError("sobolev_ratio_field: empty discrete ball");
  DiscreteMeasureSpace space(weights);
  SobolevSample out;
  out.name = metric_surrogate ? "metric_surrogate" : "q_gradient";
  out.lhs = luxemburg_norm(vals, space, phi);
  out.rhs = grad_sum / static_cast<double>(count);
  if (!(out.rhs > 0.0))
    throw DegenerateDataError("sobolev_ratio_field: vanishing gradient mass");
  out.ratio = out.lhs / out.rhs;
  return out;
}

double pp_sobolev_check(const DistanceField& field, const std::vector<double>& w,
                        double r, double p) {
  const MetricGrid& g = field.grid();
  if (w.size() != g.node_count())
    throw std::invalid_argument("pp_sobolev_check: field size mismatch");
  if (!(p >= 1.0)) throw std::invalid_argument("pp_sobolev_check: requires p >= 1");
  if (!(r > 0.0) || !(r <= g.a() * (1.0 + 1e-12)))
    throw std::invalid_argument("pp_sobolev_check: requires 0 < r <= half_width");

  int m = g.nodes_per_axis();
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (std::abs(g.x(i)) >= r && w[g.index(i, j)] != 0.0)
        throw std::invalid_argument(
            "pp_sobolev_check: test field must vanish on the strip |x| >= r");

  double s_val = 0.0, s_grad = 0.0;
  std::size_t count = 0;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      if (!(field.at(i, j) < r)) continue;
      s_val += std::pow(std::abs(w[g.index(i, j)]), p);
      s_grad += std::pow(detail::euclid_gradient_mag(g, w, i, j), p);
      ++count;
    }
  if (count == 0) throw DegenerateDataError("pp_sobolev_check: empty discrete ball");
  if (!(s_grad > 0.0))
    throw DegenerateDataError("pp_sobolev_check: vanishing gradient mass");
  return s_val / (std::pow(r, p) * s_grad);
}

double superradius_formula(double sigma, double alpha, double r) {
  if (!(sigma > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("superradius_formula: requires sigma, alpha > 0");
  if (!(sigma * alpha < 1.0))
    throw std::invalid_argument("superradius_formula: requires sigma * alpha < 1");
  if (!(r > 0.0)) throw std::invalid_argument("superradius_formula: requires r > 0");
  return std::pow(sigma, alpha) * std::pow(r, 1.0 - sigma * alpha);
}

SuperradiusSweep empirical_superradius(const MetricGrid& grid,
                                       const YoungFunction& phi,
                                       const std::vector<double>& radii,
                                       double gamma) {
  if (radii.size() < 4)
    throw std::invalid_argument("empirical_superradius: needs >= 4 radii");
  SuperradiusSweep sweep;
  bool degenerate = grid.profile().degenerate();
  bool log_bump = phi.kind() == YoungFunction::Kind::LogPower;

  // flat profile: one distance field serves every radius
  std::unique_ptr<DistanceField> field;
  if (!degenerate)
    field = std::make_unique<DistanceField>(origin_distance_field(grid));

  for (double r : radii) {
    SuperradiusSamplePoint pt;
    pt.r = r;
    std::vector<RadialProfile> profiles = standard_profiles(r, gamma);
    if (degenerate) {
      ShellQuadrature q = shell_quadrature(grid, r);
      for (const RadialProfile& w : profiles) {
        SobolevSample s = sobolev_ratio_radial(q, w, phi);
        if (s.ratio > pt.max_ratio) {
          pt.max_ratio = s.ratio;
          pt.best_profile = s.name;
        }
      }
      if (log_bump && 2.0 * r <= grid.a() * (1.0 + 1e-12)) {
        double v1 = profile_ball_volume(grid, r);
        double v2 = profile_ball_volume(grid, 2.0 * r);
        if (v1 > 0.0 && v2 > v1) pt.proxy = std::pow(std::log(v2 / v1), phi.exponent());
      }
    } else {
      const MetricGrid& g = grid;
      std::vector<double> w(g.node_count());
      for (const RadialProfile& prof : profiles) {
        int m = g.nodes_per_axis();
        for (int j = 0; j < m; ++j)
          for (int i = 0; i < m; ++i) {
            double d = field->at(i, j);
            w[g.index(i, j)] = std::isinf(d) ? 0.0 : prof.value(d);
          }
        SobolevSample s = sobolev_ratio_field(*field, w, r, phi);
        if (s.ratio > pt.max_ratio) {
          pt.max_ratio = s.ratio;
          pt.best_profile = prof.name;
        }
      }
    }
    pt.phi_over_r = pt.max_ratio / r;
    if (pt.proxy > 0.0) pt.band = pt.phi_over_r / pt.proxy;
    sweep.points.push_back(pt);
  }

  std::vector<double> lx, ly;
  for (const auto& pt : sweep.points)
    if (pt.max_ratio > 0.0) {
      lx.push_back(std::log(pt.r));
      ly.push_back(std::log(pt.max_ratio));
    }
  if (lx.size() < 4)
    throw DegenerateDataError("empirical_superradius: fewer than 4 usable radii");
  sweep.slope = fit_line(lx, ly).slope;
  return sweep;
}

}  // namespace orlicz
