#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orlicz/cutoff.hpp"
#include "orlicz/metric.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// Pointwise magnitude of the anisotropic gradient sqrt(u_x^2 + f(x)^2 u_y^2)
// by central differences (one-sided at the boundary). u is a node field.
std::vector<double> q_gradient(const MetricGrid& grid, const std::vector<double>& u);

// Radial test profile g(s) on [0, support); value and slope.
struct RadialProfile {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> slope;
  double support = 0.0;
};

// The four pinned radial shapes on the ball of radius r: the first two
// cutoff ramps of the accumulating sequence (decay exponent gamma) and the
// linear and quadratic bumps (1 - s/r)+ and ((1 - s/r)+)^2.
std::vector<RadialProfile> standard_profiles(double r, double gamma);

// Distance-shell decomposition of the degenerate-profile ball {d < R}
// (detour metric), by per-column thickness increments: shell k holds the
// mass between detour radii s_k and s_{k+1}. q_mass additionally weights
// each column cell by the detour eikonal envelope
// sqrt(1 + (f(x)/f(X*))^2) in [1, sqrt 2].
struct ShellQuadrature {
  std::vector<double> mid;     // shell midpoint radii
  std::vector<double> mass;    // plain area per shell
  std::vector<double> q_mass;  // gradient-weighted area per shell
  double total = 0.0;          // sum of mass
};

ShellQuadrature shell_quadrature(const MetricGrid& grid, double R, int shells = 400);

struct SobolevSample {
  std::string name;
  double lhs = 0.0;    // Luxemburg functional of the test function over the ball
  double rhs = 0.0;    // mean gradient mass
  double ratio = 0.0;  // lhs / rhs
};

// Ratio for a radial profile w = g(d(.)) on the shell decomposition:
//   lhs = Luxemburg_phi of g over the shell distribution,
//   rhs = (1/|B|) sum_k |g'(mid_k)| q_mass_k.
SobolevSample sobolev_ratio_radial(const ShellQuadrature& q, const RadialProfile& w,
                                   const YoungFunction& phi);

// Ratio for an arbitrary node field on a lattice ball {d < r}:
//   lhs = Luxemburg_phi of w over the ball cells,
//   rhs = mean of |grad_Q w| over the ball (L^1), or of the one-move
//         metric difference quotients when metric_surrogate is set.
SobolevSample sobolev_ratio_field(const DistanceField& field,
                                  const std::vector<double>& w, double r,
                                  const YoungFunction& phi,
                                  bool metric_surrogate = false);

// Smallest constant C with
//   (1/|B|) sum_B |w|^p h^2 <= C r^p (1/|B|) sum_B |grad w|^p h^2
// for one test field w that vanishes on the strip {|x| >= r} (precondition;
// the plain Euclidean gradient is used). Throws DegenerateDataError when the
// gradient mass vanishes.
double pp_sobolev_check(const DistanceField& field, const std::vector<double>& w,
                        double r, double p);

// Closed-form prediction sigma^alpha r^(1 - sigma alpha) for the superradius
// of the degenerate profile; requires sigma * alpha < 1.
double superradius_formula(double sigma, double alpha, double r);

struct SuperradiusSamplePoint {
  double r = 0.0;
  double max_ratio = 0.0;      // best ratio over the standard profiles
  std::string best_profile;
  double phi_over_r = 0.0;     // max_ratio / r
  double proxy = 0.0;          // (ln V(2r)/V(r))^alpha, 0 when unavailable
  double band = 0.0;           // phi_over_r / proxy, 0 when unavailable
};

struct SuperradiusSweep {
  std::vector<SuperradiusSamplePoint> points;
  double slope = 0.0;          // log-log slope of max_ratio vs r
};

// Measures the best Sobolev ratio of the standard profile family on each
// ball of the sweep. Degenerate profile: shell route with the volume proxy;
// flat profile: lattice route (proxy left 0).
SuperradiusSweep empirical_superradius(const MetricGrid& grid, const YoungFunction& phi,
                                       const std::vector<double>& radii, double gamma);

}  // namespace orlicz
