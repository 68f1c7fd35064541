#pragma once

#include <vector>

#include "orlicz/metric.hpp"

namespace orlicz {

// Radii accumulating at r/2:
//   r_1 = r,  r_j - r_{j+1} = (c / j^gamma) r,  c = 1 / (2 zeta(gamma)),
// so r_j decreases to r/2. Requires gamma > 1 (otherwise the defining series
// diverges) and r > 0.
class CutoffSequence {
 public:
  CutoffSequence(double r, double gamma, int count);

  double r() const { return r_; }
  double gamma() const { return gamma_; }
  double c() const { return c_; }
  int count() const { return static_cast<int>(radii_.size()); }
  double radius(int j) const;  // 1-based
  const std::vector<double>& radii() const { return radii_; }

  // Clamped affine ramp between the j-th annulus radii: 1 inside r_{j+1},
  // 0 outside r_j, slope 1/(r_j - r_{j+1}) between. 1-based, j < count.
  double psi(int j, double dist) const;

  // Lipschitz bound of psi_j: j^gamma / (c r).
  double lip_bound(int j) const;

 private:
  double r_, gamma_, c_;
  std::vector<double> radii_;
};

// Largest one-move difference quotient |u(q) - u(p)| / d_move(p, q) over the
// stencil at node (i, j); +inf moves are skipped.
double discrete_lip(const MetricGrid& grid, const std::vector<double>& u, int i,
                    int j);
double max_discrete_lip(const MetricGrid& grid, const std::vector<double>& u);

struct GradientBoundReport {
  double max_gradient = 0.0;  // max central-difference |grad_Q psi_j|
  double max_quotient = 0.0;  // max one-move difference quotient
  double bound = 0.0;         // lip_bound(j)
  bool pass = false;
};

// Checks the Lipschitz bound of psi_j(d(.)) on a distance field. The one-move
// quotient obeys bound exactly (triangle inequality); the central-difference
// Q-gradient may exceed it by up to sqrt(2) when the ramp is narrower than a
// cell, so it is checked against sqrt(2) * bound.
GradientBoundReport q_gradient_bound_check(const DistanceField& field,
                                           const CutoffSequence& cs, int j);

}  // namespace orlicz
