#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orlicz {

// Thrown when a computation receives data it cannot make sense of
// (empty balls, all-zero fields, non-finite inputs discovered mid-run).
class DegenerateDataError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Deterministic 64-bit generator (splitmix64). Identical streams on every
// platform; used only to synthesize reproducible example inputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

// Riemann zeta for s > 1: direct sum to 1e6 plus a three-term
// Euler-Maclaurin tail. Absolute error below 1e-12 for s >= 1.05.
double zeta(double s);

// sum_{j >= from} j^{-s} for s > 1, from >= 1. Same accuracy as zeta().
double zeta_tail(double s, std::uint64_t from);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

// Ordinary least squares y ~ intercept + slope * x. Needs >= 2 points.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Golden-section search on a unimodal function over [lo, hi].
// Returns the abscissa; 200 iterations shrink the bracket below 1e-40 * (hi-lo).
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  int iters = 200);
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters = 200);

// Solve the 3x3 normal equations (A^T A) c = A^T y by Gaussian elimination
// with partial pivoting. rows[i] = (a0, a1, a2) are design-matrix rows.
// Throws DegenerateDataError on a numerically singular system.
std::vector<double> solve_normal_3x3(const std::vector<std::array<double, 3>>& rows,
                                     const std::vector<double>& y);

}  // namespace orlicz
