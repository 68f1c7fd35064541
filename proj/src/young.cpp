#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orlicz/numerics.hpp"

namespace orlicz {

YoungFunction YoungFunction::log_power(double alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha))
    throw std::invalid_argument("log_power: requires alpha > 1");
  return YoungFunction(Kind::LogPower, alpha);
}

YoungFunction YoungFunction::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("power: requires p >= 1");
  return YoungFunction(Kind::Power, p);
}

double YoungFunction::operator()(double t) const {
  if (!(t >= 0.0)) throw std::invalid_argument("YoungFunction: requires t >= 0");
  if (kind_ == Kind::Power) return std::pow(t, e_);
  if (t <= 1.0) return 0.0;
  return t * std::pow(std::log(t), e_);
}

double YoungFunction::derivative(double t) const {
  if (!(t >= 0.0)) throw std::invalid_argument("YoungFunction: requires t >= 0");
  if (kind_ == Kind::Power) {
    if (t == 0.0 && e_ < 1.0) throw std::domain_error("derivative at 0");
    return e_ * std::pow(t, e_ - 1.0);
  }
  if (t <= 1.0) return 0.0;  // left value at the kink
  double lt = std::log(t);
  return std::pow(lt, e_) + e_ * std::pow(lt, e_ - 1.0);
}

double YoungFunction::inverse(double y) const {
  if (!(y >= 0.0)) throw std::invalid_argument("inverse: requires y >= 0");
  if (y == 0.0) return 0.0;  // smallest preimage
  if (kind_ == Kind::Power) return std::pow(y, 1.0 / e_);
  // strictly increasing above 1; bracket then bisect
  double lo = 1.0, hi = 2.0;
  while ((*this)(hi) < y) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw std::domain_error("inverse: out of range");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if ((*this)(mid) < y)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-14 * hi) break;
  }
  return hi;
}

bool YoungCheckReport::all_pass() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionReport& c) { return c.pass; });
}

YoungCheckReport check_young(const YoungFunction& phi) {
  YoungCheckReport rep;

  rep.conditions.push_back({"vanishes_at_zero", phi(0.0) == 0.0, phi(0.0)});

  // chordal convexity on a geometric sample, midpoint and quarter points
  {
    bool ok = true;
    double worst = 0.0;
    std::vector<double> grid;
    for (int k = -12; k <= 12; ++k) grid.push_back(std::pow(10.0, 0.25 * k));
    grid.push_back(0.0);
    for (std::size_t i = 0; i < grid.size() && ok; ++i)
      for (std::size_t j = i + 1; j < grid.size() && ok; ++j)
        for (double lam : {0.25, 0.5, 0.75}) {
          double a = grid[i], b = grid[j];
          double lhs = phi(lam * a + (1.0 - lam) * b);
          double rhs = lam * phi(a) + (1.0 - lam) * phi(b);
          if (lhs > rhs + 1e-12 * (1.0 + rhs)) {
            ok = false;
            worst = lam * a + (1.0 - lam) * b;
            break;
          }
        }
    rep.conditions.push_back({"convex", ok, worst});
  }

  // phi(t)/t increases without bound: strictly increasing across decades
  // once positive, and the top sample dominates the first positive one
  {
    bool ok = true;
    double worst = 0.0;
    double prev = -1.0, first_pos = 0.0, last = 0.0;
    for (int k = 0; k <= 8; ++k) {
      double t = std::pow(10.0, k);
      double ratio = phi(t) / t;
      if (ratio > 0.0 && first_pos == 0.0) first_pos = ratio;
      if (prev > 0.0 && ratio <= prev) {
        ok = false;
        worst = t;
        break;
      }
      prev = ratio;
      last = ratio;
    }
    if (ok && !(first_pos > 0.0 && last >= 8.0 * first_pos)) {
      ok = false;
      worst = last;
    }
    rep.conditions.push_back({"ratio_increases_unbounded", ok, worst});
  }

  // phi(t)/t -> 0 at 0+
  {
    double r8 = phi(1e-8) / 1e-8;
    double r1 = phi(0.1) / 0.1;
    bool ok = r8 <= 1e-4 * (1.0 + r1);
    rep.conditions.push_back({"ratio_vanishes_at_zero", ok, r8});
  }

  if (phi.kind() == YoungFunction::Kind::LogPower) {
    bool ok = true;
    double worst = 0.0;
    for (double t : {1.5, 2.0, std::exp(1.0), 10.0, 1e3, 1e8}) {
      double want = t * std::pow(std::log(t), phi.exponent());
      if (std::abs(phi(t) - want) > 1e-12 * want) {
        ok = false;
        worst = t;
        break;
      }
    }
    rep.conditions.push_back({"log_power_shape", ok, worst});
  }

  return rep;
}

DiscreteMeasureSpace::DiscreteMeasureSpace(std::vector<double> weights)
    : w_(std::move(weights)), total_(0.0) {
  if (w_.empty()) throw std::invalid_argument("measure space: no atoms");
  for (double w : w_) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("measure space: weights must be finite and >= 0");
    total_ += w;
  }
  if (!(total_ > 0.0)) throw DegenerateDataError("measure space: total mass is zero");
}

namespace {

// (1/mu) sum phi(|f|/k) w; w = 0 atoms contribute nothing even when phi blows up
double modular(const std::vector<double>& f, const DiscreteMeasureSpace& mu,
               const YoungFunction& phi, double k) {
  double s = 0.0;
  const auto& w = mu.weights();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (w[i] == 0.0) continue;
    s += phi(std::abs(f[i]) / k) * w[i];
    if (std::isinf(s)) return s;
  }
  return s / mu.total();
}

}  // namespace

double luxemburg_norm(const std::vector<double>& f, const DiscreteMeasureSpace& mu,
                      const YoungFunction& phi) {
  if (f.size() != mu.size())
    throw std::invalid_argument("luxemburg_norm: size mismatch");
  double fmax = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!std::isfinite(f[i]))
      throw DegenerateDataError("luxemburg_norm: non-finite sample");
    if (mu.weights()[i] > 0.0) fmax = std::max(fmax, std::abs(f[i]));
  }
  if (fmax == 0.0) return 0.0;

  double hi = 2.0 * fmax;
  while (modular(f, mu, phi, hi) > 1.0) {
    hi *= 2.0;
    if (hi > 1e300) throw DegenerateDataError("luxemburg_norm: no finite bracket");
  }
  double lo = hi;
  for (;;) {
    double cand = 0.5 * lo;
    if (cand < 1e-300) return hi;  // modular never exceeds 1: flat bump region
    if (modular(f, mu, phi, cand) > 1.0) {
      lo = cand;
      break;
    }
    lo = cand;
    hi = cand;
  }
  while (hi - lo > 1e-10 * hi) {
    double mid = 0.5 * (lo + hi);
    if (modular(f, mu, phi, mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

double lp_norm(const std::vector<double>& f, const DiscreteMeasureSpace& mu, double p) {
  if (f.size() != mu.size()) throw std::invalid_argument("lp_norm: size mismatch");
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: requires p >= 1");
  double s = 0.0;
  const auto& w = mu.weights();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!std::isfinite(f[i])) throw DegenerateDataError("lp_norm: non-finite sample");
    if (w[i] == 0.0) continue;
    s += std::pow(std::abs(f[i]), p) * w[i];
  }
  return std::pow(s / mu.total(), 1.0 / p);
}

}  // namespace orlicz
