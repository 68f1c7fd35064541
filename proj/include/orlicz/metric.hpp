#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orlicz/numerics.hpp"

namespace orlicz {

// Vertical speed profile f(x) of subunit motion: paths move freely in x and
// at speed |f(x)| in y. Either the flat profile f = 1 or the flat-to-zero
// profile f(x) = exp(-1/|x|^sigma), whose metric degenerates on the y axis.
class DegeneracyProfile {
 public:
  static DegeneracyProfile euclidean();
  static DegeneracyProfile exp_power(double sigma);  // sigma in (0, 2]

  bool degenerate() const { return degenerate_; }
  double sigma() const;  // only for the degenerate profile

  double f(double x) const;      // in [0, 1]
  double inv_f(double x) const;  // 1/f(x); +inf on the degenerate axis

 private:
  DegeneracyProfile(bool d, double s) : degenerate_(d), sigma_(s) {}
  bool degenerate_;
  double sigma_;
};

// Uniform lattice on the square [-a, a]^2 with n cells per axis (n even so a
// node sits at the origin). Nodes are (x_i, y_j), i, j = 0..n.
class MetricGrid {
 public:
  MetricGrid(DegeneracyProfile profile, double half_width, int cells_per_axis);

  const DegeneracyProfile& profile() const { return profile_; }
  double a() const { return a_; }
  int n() const { return n_; }
  double h() const { return h_; }
  int nodes_per_axis() const { return n_ + 1; }
  std::size_t node_count() const;

  double x(int i) const { return -a_ + h_ * i; }
  double y(int j) const { return -a_ + h_ * j; }
  std::size_t index(int i, int j) const;
  int center() const { return n_ / 2; }

 private:
  DegeneracyProfile profile_;
  double a_;
  int n_;
  double h_;
};

// One lattice move of the shortest-path stencil.
struct GridMove {
  int di;
  int dj;
};

// The 24-move stencil shared by the distance solver and the difference-
// quotient scans: (+-1,0),(0,+-1),(+-1,+-1),(+-1,+-2),(+-2,+-1),
// (+-1,+-3),(+-3,+-1). The widest gap between consecutive directions is
// ~18.4 degrees, so single-source distances overestimate the continuum
// metric by at most ~1.4% in the worst direction.
const std::vector<GridMove>& grid_moves();

// Cost of applying `m` at node (i, j): sqrt((di h)^2 + (dj h / f(x_mid))^2)
// with f evaluated at the move's x midpoint; +inf where the climb cost
// overflows (the degeneracy disconnects the nodes).
double grid_move_cost(const MetricGrid& g, int i, int j, const GridMove& m);

// Shortest-path distances from one source over the shared stencil.
// Entries are +inf where the degeneracy disconnects a node.
class DistanceField {
 public:
  DistanceField(MetricGrid grid, int src_i, int src_j, std::vector<double> d)
      : grid_(std::move(grid)), src_(src_i, src_j), d_(std::move(d)) {}

  const MetricGrid& grid() const { return grid_; }
  std::pair<int, int> source() const { return src_; }
  double at(int i, int j) const { return d_[grid_.index(i, j)]; }
  const std::vector<double>& values() const { return d_; }

 private:
  MetricGrid grid_;
  std::pair<int, int> src_;
  std::vector<double> d_;
};

DistanceField distance_field(const MetricGrid& grid, int src_i, int src_j);
DistanceField origin_distance_field(const MetricGrid& grid);

// Cell-count measure of the discrete ball {d < r}: (#nodes) h^2.
// Requires 0 < r <= a. Resolves only features wider than h; see
// profile_ball_volume for the degenerate profile's slivers.
double ball_measure(const DistanceField& field, double r);

// ball_measure(2r) / ball_measure(r); requires 2r <= a and a nonempty
// inner ball.
double doubling_ratio(const DistanceField& field, double r);

// Closed-form small-r law r^(2(sigma+1)) exp(-1/r^sigma) of the origin ball
// volume for the degenerate profile.
double volume_asymptotic(const DegeneracyProfile& profile, double r);

// Detour metric of the degenerate profile from the origin:
//   d(x, y) = min over X in [|x|, x_cap] of  2X - |x| + |y| / f(X)
// (walk out to |X|, climb, walk back). Exact for y = 0; elsewhere within a
// factor 2 of the subunit distance and sharing its asymptotics.
double detour_distance(const DegeneracyProfile& profile, double x, double y,
                       double x_cap);

// Largest |y| reachable at abscissa x within detour budget s:
//   y_max(x, s) = max over X in [|x|, (s+|x|)/2] of (s - 2X + |x|) f(X),
// golden-section on the log objective. Zero when the column is out of reach.
double column_thickness(const DegeneracyProfile& profile, double x, double s);

// Same, also returning the achieving abscissa X* (the climb point).
std::pair<double, double> column_thickness_argmax(const DegeneracyProfile& profile,
                                                  double x, double s);

// Volume of the detour-metric ball {d < r} by per-column quadrature:
// sum_i 2 y_max(x_i, r) h over lattice columns. Degenerate profile only;
// requires 0 < r <= a.
double profile_ball_volume(const MetricGrid& grid, double r);

// profile_ball_volume(2r) / profile_ball_volume(r); requires 2r <= a.
double profile_doubling_ratio(const MetricGrid& grid, double r);

struct DoublingFit {
  bool divergent = false;    // true when the ratios force a blowing-up model
  double sigma_hat = 0.0;    // exponent of the fitted r^(-sigma) term
  double level = 0.0;        // A in  ln ratio ~ A + B r^(-sigma) + C r
  double scale = 0.0;        // B
  double drift = 0.0;        // C
  double excess_variation = 0.0;  // B (r_min^-sigma - r_max^-sigma)
  double naive_slope = 0.0;  // diagnostic lnln-vs-ln(1/r) slope
  std::size_t points = 0;
};

// Fits ln(ratio) = A + B r^(-s) + C r over s in [0.05, 3] (golden scan with
// inner linear least squares) and classifies: divergent iff the fitted
// variation across the sweep exceeds 0.25. Needs >= 3 finite points with
// ratio > 0; non-finite pairs are dropped.
DoublingFit log_doubling_exponent_fit(const std::vector<double>& radii,
                                      const std::vector<double>& ratios);

}  // namespace orlicz
