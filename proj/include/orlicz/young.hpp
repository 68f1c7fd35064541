#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace orlicz {

// Convex bump generating an Orlicz space. Two shapes:
//   log_power(alpha): 0 on [0,1], t (ln t)^alpha for t > 1   (alpha > 1)
//   power(p):         t^p                                     (p >= 1)
// p = 1 is allowed so the plain L1 mean is reachable; the structural
// checker below still reports which growth conditions p = 1 violates.
class YoungFunction {
 public:
  enum class Kind { LogPower, Power };

  static YoungFunction log_power(double alpha);
  static YoungFunction power(double p);

  Kind kind() const { return kind_; }
  // alpha for LogPower, p for Power.
  double exponent() const { return e_; }

  double operator()(double t) const;   // t >= 0
  double derivative(double t) const;   // one-sided where the shape has a kink
  double inverse(double y) const;      // smallest t with value y; inverse(0) = 0

 private:
  YoungFunction(Kind k, double e) : kind_(k), e_(e) {}
  Kind kind_;
  double e_;
};

struct ConditionReport {
  std::string name;
  bool pass = false;
  double witness = 0.0;  // where the check failed, or the tightest margin
};

struct YoungCheckReport {
  std::vector<ConditionReport> conditions;
  bool all_pass() const;
};

// Samples the defining properties: vanishing at 0, chordal convexity,
// phi(t)/t increasing without bound, phi(t)/t -> 0 at 0+, and for the
// log-power shape agreement with t (ln t)^alpha above 1.
YoungCheckReport check_young(const YoungFunction& phi);

// Finitely many atoms with nonnegative weights.
class DiscreteMeasureSpace {
 public:
  explicit DiscreteMeasureSpace(std::vector<double> weights);
  const std::vector<double>& weights() const { return w_; }
  double total() const { return total_; }
  std::size_t size() const { return w_.size(); }

 private:
  std::vector<double> w_;
  double total_;
};

// Normalized Luxemburg functional: the smallest k > 0 with
//   (1/mu(X)) sum phi(|f_i| / k) w_i <= 1,
// located by doubling/halving bracket plus bisection to 1e-10 relative
// width (upper end returned). Zero function -> 0.
double luxemburg_norm(const std::vector<double>& f, const DiscreteMeasureSpace& mu,
                      const YoungFunction& phi);

// Normalized L^p norm ((1/mu(X)) sum |f_i|^p w_i)^(1/p), p >= 1.
double lp_norm(const std::vector<double>& f, const DiscreteMeasureSpace& mu, double p);

}  // namespace orlicz
