#include "orlicz/cutoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orlicz/detail/grid_diff.hpp"
#include "orlicz/numerics.hpp"

namespace orlicz {

CutoffSequence::CutoffSequence(double r, double gamma, int count)
    : r_(r), gamma_(gamma) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("CutoffSequence: requires r > 0");
  if (!(gamma > 1.0))
    throw std::invalid_argument(
        "CutoffSequence: requires gamma > 1 (the radius decrements form a "
        "divergent series otherwise)");
  if (count < 2) throw std::invalid_argument("CutoffSequence: requires count >= 2");
  c_ = 1.0 / (2.0 * zeta(gamma));
  radii_.resize(count);
  radii_[0] = r;
  for (int j = 1; j < count; ++j)
    radii_[j] = radii_[j - 1] - c_ * r / std::pow(static_cast<double>(j), gamma);
}

double CutoffSequence::radius(int j) const {
  if (j < 1 || j > count()) throw std::out_of_range("CutoffSequence::radius");
  return radii_[j - 1];
}

double CutoffSequence::psi(int j, double dist) const {
  if (j < 1 || j >= count()) throw std::out_of_range("CutoffSequence::psi");
  double rj = radii_[j - 1], rj1 = radii_[j];
  if (dist <= rj1) return 1.0;
  if (dist >= rj) return 0.0;
  return (rj - dist) / (rj - rj1);
}

double CutoffSequence::lip_bound(int j) const {
  if (j < 1 || j >= count()) throw std::out_of_range("CutoffSequence::lip_bound");
  return std::pow(static_cast<double>(j), gamma_) / (c_ * r_);
}

double discrete_lip(const MetricGrid& grid, const std::vector<double>& u, int i,
                    int j) {
  if (u.size() != grid.node_count())
    throw std::invalid_argument("discrete_lip: field size mismatch");
  int m = grid.nodes_per_axis();
  double best = 0.0;
  double u0 = u[grid.index(i, j)];
  for (const GridMove& mv : grid_moves()) {
    int ni = i + mv.di, nj = j + mv.dj;
    if (ni < 0 || ni >= m || nj < 0 || nj >= m) continue;
    double cost = grid_move_cost(grid, i, j, mv);
    if (std::isinf(cost)) continue;
    best = std::max(best, std::abs(u[grid.index(ni, nj)] - u0) / cost);
  }
  return best;
}

double max_discrete_lip(const MetricGrid& grid, const std::vector<double>& u) {
  double best = 0.0;
  int m = grid.nodes_per_axis();
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) best = std::max(best, discrete_lip(grid, u, i, j));
  return best;
}

GradientBoundReport q_gradient_bound_check(const DistanceField& field,
                                           const CutoffSequence& cs, int j) {
  const MetricGrid& g = field.grid();
  std::vector<double> u(g.node_count());
  int m = g.nodes_per_axis();
  for (int jj = 0; jj < m; ++jj)
    for (int ii = 0; ii < m; ++ii) {
      double d = field.at(ii, jj);
      u[g.index(ii, jj)] = std::isinf(d) ? 0.0 : cs.psi(j, d);
    }
  GradientBoundReport rep;
  rep.bound = cs.lip_bound(j);
  for (int jj = 0; jj < m; ++jj)
    for (int ii = 0; ii < m; ++ii)
      rep.max_gradient =
          std::max(rep.max_gradient, detail::q_gradient_mag(g, u, ii, jj));
  rep.max_quotient = max_discrete_lip(g, u);
  double tol = 1.0 + 1e-9;
  rep.pass = rep.max_quotient <= rep.bound * tol &&
             rep.max_gradient <= std::sqrt(2.0) * rep.bound * tol;
  return rep;
}

}  // namespace orlicz
