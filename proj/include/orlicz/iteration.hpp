#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz {

// Measured inputs of the accumulating-cutoff iteration on one ball.
struct IterationTrace {
  double mu_star = 0.0;           // measure of the enveloping ball B*
  double mu_half = 0.0;           // measure of the half ball (0 if unknown)
  double c_tilde = 1.0;           // composite constant in the recursion
  double gamma = 2.0;             // cutoff decay exponent (> 1)
  std::vector<double> radii;      // r_j (optional; empty or same length)
  std::vector<double> measures;   // mu(B_j), positive, nonincreasing
};

// P_j = mu(B*) / (c_tilde j^gamma mu(B_j)).
std::vector<double> pj_sequence(const IterationTrace& t);

struct StepVerdict {
  int j = 0;                 // 1-based step index
  double p_j = 0.0;
  bool setup_ok = false;     // phi(P_j) <= mu(B*) / mu(B_{j+1})
  bool bump_active = false;  // P_j above the bump's flat segment
  double p_next_bound = 0.0; // phi(P_j) / (c_tilde (j+1)^gamma)
  bool recursion_ok = false; // P_{j+1} >= p_next_bound (within slack)
};

struct RecursionReport {
  std::vector<StepVerdict> steps;
  bool all_setup_ok = true;
  bool all_recursion_ok = true;
  int first_recursion_failure = 0;  // 0 = none
};

// Verifies, step by step, the algebraic consequence
//   P_{j+1} >= phi(P_j) / (c_tilde (j+1)^gamma)
// and the setup condition phi(P_j) <= mu(B*)/mu(B_{j+1}) on a trace.
// Relative slack 1e-12 absorbs roundoff.
RecursionReport recursion_check(const IterationTrace& t, const YoungFunction& phi);

struct InductionThresholds {
  double closed_form = 0.0;  // exp(2 + ((alpha-gamma)/alpha) (e c)^(1/(alpha-gamma)))
  double sharper = 0.0;      // exp(max_j h(j)), h(j) = (e c)^(1/alpha) (j+1)^(gamma/alpha) - j + 1
  int argmax_j = 0;
};

// Thresholds on P_1 guaranteeing P_j >= P_1 e^(j-1) under the recursion with
// bump t (ln t)^alpha. Requires alpha > gamma > 1, c_tilde > 0.
InductionThresholds induction_threshold(double alpha, double gamma, double c_tilde);

// c_tilde * sharper threshold: ceiling on mu(B*)/mu(half B) compatible with
// the recursion, i.e. the doubling constant certified by the iteration.
double doubling_bound(double alpha, double gamma, double c_tilde);

// Rolls the forced recursion Q_1 = p1, Q_{j+1} = Q_j (ln Q_j)^alpha /
// (c_tilde (j+1)^gamma) and returns the first j <= j_max where Q_j exceeds
// the ceiling ratio_star_half / (c_tilde j^gamma), i.e. where the trace
// contradicts the claimed measure ratio. nullopt if no contradiction.
std::optional<int> contradiction_scan(double p1, double alpha, double gamma,
                                      double c_tilde, double ratio_star_half,
                                      int j_max);

struct SuperradiusBound {
  double value = 0.0;       // certified lower bound for phi(r)/r
  double gamma = 0.0;       // decay exponent the bound was assembled with
  double c_eps = 0.0;       // value / L^(alpha-gamma), L = ln(measure ratio)
  double exponent = 0.0;    // alpha - gamma
  double c_tilde_min = 0.0; // inverted composite constant H^(-1)(L)
  bool vacuous = false;     // measure ratio <= 1: nothing to certify
};

// From mu(B)/mu(half B) = e^L, inverts H(c) = ln(c * sharper_threshold(c))
// (strictly increasing) to the least composite constant c_tilde the
// iteration tolerates, then converts it into a lower bound for phi(r)/r:
//   phi(r)/r >= (c_gamma / (2 c_s)) H^(-1)(L),  c_gamma = 1/(2 zeta(gamma)).
// gamma defaults to 1 + eps; requires 0 < eps < alpha - 1.
SuperradiusBound superradius_lower_bound(double alpha, double eps, double c_s,
                                         double measure_ratio,
                                         std::optional<double> gamma = {});

// Same, sweeping gamma over an even grid in [1 + eps, (1 + alpha)/2] and
// returning the strongest (largest) bound.
SuperradiusBound superradius_lower_bound_sweep(double alpha, double eps, double c_s,
                                               double measure_ratio,
                                               int grid_points = 9);

}  // namespace orlicz
