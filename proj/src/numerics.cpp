#include "orlicz/numerics.hpp"

#include <cmath>
#include <limits>

namespace orlicz {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

namespace {

constexpr std::uint64_t kZetaCut = 1000000;

// Euler-Maclaurin tail sum_{j >= m} j^{-s}, three correction terms; the next
// term is O(s^3 m^{-s-3}), far below 1e-15 for m ~ 1e6.
double em_tail(double s, double m) {
  double ms = std::pow(m, -s);
  return m * ms / (s - 1.0) + 0.5 * ms + s * ms / m / 12.0;
}

}  // namespace

double zeta(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta: requires s > 1");
  double sum = 0.0;
  for (std::uint64_t j = kZetaCut; j >= 1; --j)  // ascending magnitude
    sum += std::pow(static_cast<double>(j), -s);
  return sum + em_tail(s, static_cast<double>(kZetaCut + 1));
}

double zeta_tail(double s, std::uint64_t from) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta_tail: requires s > 1");
  if (from < 1) throw std::invalid_argument("zeta_tail: requires from >= 1");
  std::uint64_t cut = from > kZetaCut ? from : kZetaCut;
  double sum = 0.0;
  for (std::uint64_t j = cut; j >= from; --j)
    sum += std::pow(static_cast<double>(j), -s);
  return sum + em_tail(s, static_cast<double>(cut + 1));
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("fit_line: size mismatch");
  if (x.size() < 2) throw std::invalid_argument("fit_line: needs >= 2 points");
  double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
      throw DegenerateDataError("fit_line: non-finite input");
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double det = n * sxx - sx * sx;
  if (std::abs(det) < 1e-300 * (1.0 + sxx))
    throw DegenerateDataError("fit_line: degenerate abscissae");
  LineFit out;
  out.slope = (n * sxy - sx * sy) / det;
  out.intercept = (sy - out.slope * sx) / n;
  out.points = x.size();
  return out;
}

namespace {

const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

double golden(const std::function<double(double)>& f, double lo, double hi,
              int iters, bool maximize) {
  double sign = maximize ? -1.0 : 1.0;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = sign * f(x1), f2 = sign * f(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = sign * f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = sign * f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  int iters) {
  if (!(lo <= hi)) throw std::invalid_argument("golden_min: empty interval");
  return golden(f, lo, hi, iters, false);
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters) {
  if (!(lo <= hi)) throw std::invalid_argument("golden_max: empty interval");
  return golden(f, lo, hi, iters, true);
}

std::vector<double> solve_normal_3x3(const std::vector<std::array<double, 3>>& rows,
                                     const std::vector<double>& y) {
  if (rows.size() != y.size() || rows.size() < 3)
    throw std::invalid_argument("solve_normal_3x3: needs >= 3 matching rows");
  double m[3][4] = {};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m[i][j] += rows[k][i] * rows[k][j];
      m[i][3] += rows[k][i] * y[k];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int i = col + 1; i < 3; ++i)
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    if (std::abs(m[piv][col]) < 1e-300)
      throw DegenerateDataError("solve_normal_3x3: singular system");
    if (piv != col)
      for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[col][j]);
    for (int i = 0; i < 3; ++i) {
      if (i == col) continue;
      double fac = m[i][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[i][j] -= fac * m[col][j];
    }
  }
  return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace orlicz
