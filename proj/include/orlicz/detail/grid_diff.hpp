#pragma once

#include <cmath>
#include <vector>

#include "orlicz/metric.hpp"

namespace orlicz::detail {

// Central differences, one-sided at the boundary.
inline void node_gradient(const MetricGrid& g, const std::vector<double>& u,
                          int i, int j, double* ux, double* uy) {
  int m = g.nodes_per_axis();
  int il = i > 0 ? i - 1 : i, ir = i < m - 1 ? i + 1 : i;
  int jl = j > 0 ? j - 1 : j, jr = j < m - 1 ? j + 1 : j;
  *ux = (u[g.index(ir, j)] - u[g.index(il, j)]) / ((ir - il) * g.h());
  *uy = (u[g.index(i, jr)] - u[g.index(i, jl)]) / ((jr - jl) * g.h());
}

inline double q_gradient_mag(const MetricGrid& g, const std::vector<double>& u,
                             int i, int j) {
  double ux, uy;
  node_gradient(g, u, i, j, &ux, &uy);
  double fy = g.profile().f(g.x(i)) * uy;
  return std::sqrt(ux * ux + fy * fy);
}

inline double euclid_gradient_mag(const MetricGrid& g, const std::vector<double>& u,
                                  int i, int j) {
  double ux, uy;
  node_gradient(g, u, i, j, &ux, &uy);
  return std::sqrt(ux * ux + uy * uy);
}

}  // namespace orlicz::detail
