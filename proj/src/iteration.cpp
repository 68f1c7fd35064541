#include "orlicz/iteration.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {

void validate_trace(const IterationTrace& t) {
  if (!(t.mu_star > 0.0) || !std::isfinite(t.mu_star))
    throw std::invalid_argument("trace: requires mu_star > 0");
  if (!(t.c_tilde > 0.0) || !std::isfinite(t.c_tilde))
    throw std::invalid_argument("trace: requires c_tilde > 0");
  if (!(t.gamma > 1.0) || !std::isfinite(t.gamma))
    throw std::invalid_argument("trace: requires gamma > 1");
  if (t.measures.empty()) throw std::invalid_argument("trace: no measures");
  if (!t.radii.empty() && t.radii.size() != t.measures.size())
    throw std::invalid_argument("trace: radii/measures size mismatch");
  double prev = std::numeric_limits<double>::infinity();
  for (double mu : t.measures) {
    if (!(mu > 0.0) || !std::isfinite(mu))
      throw DegenerateDataError("trace: measures must be finite and > 0");
    if (mu > prev * (1.0 + 1e-12))
      throw DegenerateDataError("trace: measures must be nonincreasing");
    prev = mu;
  }
  if (t.mu_half < 0.0 || !std::isfinite(t.mu_half))
    throw std::invalid_argument("trace: bad mu_half");
}

}  // namespace

std::vector<double> pj_sequence(const IterationTrace& t) {
  validate_trace(t);
  std::vector<double> p(t.measures.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    double j = static_cast<double>(k + 1);
    p[k] = t.mu_star / (t.c_tilde * std::pow(j, t.gamma) * t.measures[k]);
  }
  return p;
}

RecursionReport recursion_check(const IterationTrace& t, const YoungFunction& phi) {
  std::vector<double> p = pj_sequence(t);
  RecursionReport rep;
  const double slack = 1e-12;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    StepVerdict v;
    v.j = static_cast<int>(k + 1);
    v.p_j = p[k];
    double phi_p = phi(p[k]);
    v.bump_active =
        phi.kind() == YoungFunction::Kind::Power ? p[k] > 0.0 : p[k] > 1.0;
    v.setup_ok = phi_p <= (t.mu_star / t.measures[k + 1]) * (1.0 + slack);
    v.p_next_bound =
        phi_p / (t.c_tilde * std::pow(static_cast<double>(k + 2), t.gamma));
    v.recursion_ok = p[k + 1] >= v.p_next_bound * (1.0 - slack);
    rep.all_setup_ok = rep.all_setup_ok && v.setup_ok;
    if (!v.recursion_ok && rep.first_recursion_failure == 0)
      rep.first_recursion_failure = v.j;
    rep.all_recursion_ok = rep.all_recursion_ok && v.recursion_ok;
    rep.steps.push_back(v);
  }
  return rep;
}

namespace {

void check_abc(double alpha, double gamma, double c_tilde) {
  if (!(alpha > 1.0)) throw std::invalid_argument("requires alpha > 1");
  if (!(gamma > 1.0) || !(gamma < alpha))
    throw std::invalid_argument("requires 1 < gamma < alpha");
  if (!(c_tilde > 0.0) || !std::isfinite(c_tilde))
    throw std::invalid_argument("requires c_tilde > 0");
}

// h(j) = (e c)^(1/alpha) (j+1)^(gamma/alpha) - j + 1, concave in j
double h_of_j(double K, double gamma_over_alpha, double j) {
  return K * std::pow(j + 1.0, gamma_over_alpha) - j + 1.0;
}

}  // namespace

InductionThresholds induction_threshold(double alpha, double gamma, double c_tilde) {
  check_abc(alpha, gamma, c_tilde);
  InductionThresholds out;
  out.closed_form = std::exp(
      2.0 + (alpha - gamma) / alpha *
                std::pow(std::exp(1.0) * c_tilde, 1.0 / (alpha - gamma)));
  double K = std::pow(std::exp(1.0) * c_tilde, 1.0 / alpha);
  double ga = gamma / alpha;
  double best = h_of_j(K, ga, 1.0);
  int best_j = 1;
  for (int j = 2; j <= 10000000; ++j) {
    double v = h_of_j(K, ga, static_cast<double>(j));
    if (v > best) {
      best = v;
      best_j = j;
    } else {
      break;  // concave: first decrease is final
    }
    if (j == 10000000)
      throw std::invalid_argument(
          "induction_threshold: threshold exceeds floating range (gamma too "
          "close to alpha for this c_tilde)");
  }
  out.sharper = std::exp(best);
  out.argmax_j = best_j;
  return out;
}

double doubling_bound(double alpha, double gamma, double c_tilde) {
  return c_tilde * induction_threshold(alpha, gamma, c_tilde).sharper;
}

std::optional<int> contradiction_scan(double p1, double alpha, double gamma,
                                      double c_tilde, double ratio_star_half,
                                      int j_max) {
  if (!(p1 > 1.0)) throw std::invalid_argument("contradiction_scan: requires p1 > 1");
  if (!(alpha > 1.0)) throw std::invalid_argument("requires alpha > 1");
  if (!(gamma > 0.0)) throw std::invalid_argument("requires gamma > 0");
  if (!(c_tilde > 0.0)) throw std::invalid_argument("requires c_tilde > 0");
  if (!(ratio_star_half > 0.0) || !std::isfinite(ratio_star_half))
    throw std::invalid_argument("requires a positive finite measure ratio");
  if (j_max < 1) throw std::invalid_argument("requires j_max >= 1");
  double q = p1;
  for (int j = 1; j <= j_max; ++j) {
    double ceiling = ratio_star_half / (c_tilde * std::pow(static_cast<double>(j), gamma));
    if (q > ceiling) return j;
    if (!(q > 1.0)) return std::nullopt;  // rollout stalls below the bump
    q = q * std::pow(std::log(q), alpha) /
        (c_tilde * std::pow(static_cast<double>(j + 1), gamma));
  }
  return std::nullopt;
}

namespace {

double h_func(double alpha, double gamma, double c) {
  return std::log(c * induction_threshold(alpha, gamma, c).sharper);
}

}  // namespace

SuperradiusBound superradius_lower_bound(double alpha, double eps, double c_s,
                                         double measure_ratio,
                                         std::optional<double> gamma_opt) {
  if (!(alpha > 1.0)) throw std::invalid_argument("requires alpha > 1");
  if (!(eps > 0.0) || !(eps < alpha - 1.0))
    throw std::invalid_argument("requires 0 < eps < alpha - 1");
  if (!(c_s > 0.0) || !std::isfinite(c_s))
    throw std::invalid_argument("requires c_s > 0");
  if (!(measure_ratio >= 0.0) || !std::isfinite(measure_ratio))
    throw std::invalid_argument("requires a finite measure ratio >= 0");
  double gamma = gamma_opt.value_or(1.0 + eps);
  if (!(gamma > 1.0) || !(gamma < alpha))
    throw std::invalid_argument("requires 1 < gamma < alpha");

  SuperradiusBound out;
  out.gamma = gamma;
  out.exponent = alpha - gamma;
  if (measure_ratio <= 1.0) {
    out.vacuous = true;
    return out;
  }
  double L = std::log(measure_ratio);

  // H(c) = ln(c * sharper(c)) is strictly increasing; bisect H(c) = L
  double lo = 1.0, hi = 1.0;
  while (h_func(alpha, gamma, lo) > L) {
    lo *= 0.5;
    if (lo < 1e-300) break;
  }
  while (h_func(alpha, gamma, hi) < L) {
    hi *= 2.0;
    if (hi > 1e300)
      throw DegenerateDataError("superradius_lower_bound: ratio out of range");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (h_func(alpha, gamma, mid) < L)
      lo = mid;
    else
      hi = mid;
  }
  out.c_tilde_min = 0.5 * (lo + hi);

  double c_gamma = 1.0 / (2.0 * zeta(gamma));
  out.value = c_gamma / (2.0 * c_s) * out.c_tilde_min;
  out.c_eps = out.value / std::pow(L, alpha - gamma);
  return out;
}

SuperradiusBound superradius_lower_bound_sweep(double alpha, double eps, double c_s,
                                               double measure_ratio,
                                               int grid_points) {
  if (grid_points < 1) throw std::invalid_argument("requires grid_points >= 1");
  double lo = 1.0 + eps, hi = 0.5 * (1.0 + alpha);
  if (hi < lo) hi = lo;
  SuperradiusBound best;
  bool have = false;
  for (int k = 0; k < grid_points; ++k) {
    double g = grid_points == 1
                   ? lo
                   : lo + (hi - lo) * k / static_cast<double>(grid_points - 1);
    // keep strictly inside (1, alpha)
    g = std::min(g, alpha * (1.0 - 1e-9));
    SuperradiusBound b = superradius_lower_bound(alpha, eps, c_s, measure_ratio, g);
    if (!have || b.value > best.value) {
      best = b;
      have = true;
    }
  }
  return best;
}

}  // namespace orlicz
