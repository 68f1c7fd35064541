#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "orlicz/iteration.hpp"
#include "orlicz/numerics.hpp"

using namespace orlicz;

namespace {

IterationTrace small_trace() {
  IterationTrace t;
  t.mu_star = 10.0;
  t.mu_half = 1.0;
  t.c_tilde = 2.0;
  t.gamma = 1.5;
  t.measures = {2.0, 1.0, 0.5, 0.25};
  return t;
}

}  // namespace

TEST_CASE("pj closed values") {
  std::vector<double> pj = pj_sequence(small_trace());
  REQUIRE(pj.size() == 4);
  CHECK(pj[0] == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(pj[1] == doctest::Approx(1.7677669529663687).epsilon(1e-14));
  CHECK(pj[2] == doctest::Approx(1.9245008972987525).epsilon(1e-14));
  CHECK(pj[3] == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("trace validation rejects malformed data") {
  IterationTrace t = small_trace();
  t.measures[2] = -0.5;
  CHECK_THROWS_AS(pj_sequence(t), DegenerateDataError);
  t = small_trace();
  t.measures = {1.0, 2.0};  // increasing
  CHECK_THROWS_AS(pj_sequence(t), DegenerateDataError);
  t = small_trace();
  t.mu_star = 0.0;
  CHECK_THROWS_AS(pj_sequence(t), std::invalid_argument);
  t = small_trace();
  t.gamma = 1.0;
  CHECK_THROWS_AS(pj_sequence(t), std::invalid_argument);
  t = small_trace();
  t.radii = {1.0, 0.9};  // wrong length
  CHECK_THROWS_AS(pj_sequence(t), std::invalid_argument);
}

TEST_CASE("recursion check implication on a synthetic trace") {
  // Measures built so that the setup condition holds with room to spare:
  // mu_{j+1} = mu_star / phi(P_j) exactly, the boundary case.
  YoungFunction phi = YoungFunction::log_power(2.0);
  IterationTrace t;
  t.mu_star = 100.0;
  t.c_tilde = 1.0;
  t.gamma = 1.5;
  t.measures = {10.0};
  for (int j = 1; j <= 8; ++j) {
    double pj = t.mu_star /
                (t.c_tilde * std::pow(j, t.gamma) * t.measures.back());
    double bound = phi(pj);
    if (bound <= 1.0) break;
    // clamp so the sequence stays nonincreasing; setup still holds since
    // the measure only ever drops below the boundary value
    t.measures.push_back(std::min(t.measures.back(), t.mu_star / bound));
  }
  REQUIRE(t.measures.size() >= 3);
  RecursionReport rep = recursion_check(t, phi);
  CHECK(rep.all_setup_ok);
  CHECK(rep.all_recursion_ok);
  CHECK(rep.first_recursion_failure == 0);
  for (const auto& s : rep.steps) {
    CHECK(s.setup_ok);
    CHECK(s.recursion_ok);
  }
}

TEST_CASE("recursion check flags a broken setup") {
  YoungFunction phi = YoungFunction::log_power(2.0);
  IterationTrace t;
  t.mu_star = 100.0;
  t.c_tilde = 1.0;
  t.gamma = 1.5;
  // second measure far too large for the setup inequality
  t.measures = {10.0, 9.99, 9.98};
  RecursionReport rep = recursion_check(t, phi);
  CHECK_FALSE(rep.all_setup_ok);
}

TEST_CASE("induction thresholds closed forms") {
  InductionThresholds th = induction_threshold(2.0, 1.5, 1.0);
  // exp(2 + 0.25 e^2)
  CHECK(th.closed_form == doctest::Approx(46.86466709725828).epsilon(1e-12));
  // scan maximum sits at j = 1: exp(sqrt(e) 2^{3/4})
  CHECK(th.argmax_j == 1);
  CHECK(th.sharper == doctest::Approx(16.00350262859246).epsilon(1e-12));
  CHECK(th.sharper <= th.closed_form);
  CHECK(doubling_bound(2.0, 1.5, 1.0) ==
        doctest::Approx(th.sharper).epsilon(1e-14));

  CHECK_THROWS_AS(induction_threshold(2.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(induction_threshold(2.0, 0.9, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(induction_threshold(1.0, 1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(induction_threshold(2.0, 1.5, 0.0), std::invalid_argument);
}

TEST_CASE("sharper threshold is never above the closed form") {
  for (double alpha : {1.5, 2.0, 2.5, 3.0}) {
    for (double gamma : {1.1, 1.2, 1.35}) {
      for (double c : {0.5, 1.0, 4.0}) {
        InductionThresholds th = induction_threshold(alpha, gamma, c);
        CHECK(th.sharper <= th.closed_form * (1.0 + 1e-12));
        CHECK(th.argmax_j >= 1);
      }
    }
  }
}

TEST_CASE("contradiction scan fires on a seeded rollout") {
  InductionThresholds th = induction_threshold(2.0, 1.5, 1.0);
  std::optional<int> hit =
      contradiction_scan(2.0 * th.sharper, 2.0, 1.5, 1.0, 1e6, 40);
  REQUIRE(hit.has_value());
  CHECK(*hit <= 40);
  CHECK(*hit >= 2);
  // a rollout that stalls below the bump's active range never fires
  CHECK_FALSE(contradiction_scan(1.01, 2.0, 1.5, 1.0, 1e6, 40).has_value());
  CHECK_THROWS_AS(contradiction_scan(0.9, 2.0, 1.5, 1.0, 1e6, 40),
                  std::invalid_argument);
}

TEST_CASE("superradius bound inverts its own forward map") {
  // If the measured ratio equals the certified ceiling for c0, the inversion
  // must return c0.
  double alpha = 2.0, eps = 0.4;
  double gamma = 1.0 + eps;
  for (double c0 : {0.5, 1.0, 3.0}) {
    double ratio = doubling_bound(alpha, gamma, c0);
    SuperradiusBound b = superradius_lower_bound(alpha, eps, 1.0, ratio);
    CHECK_FALSE(b.vacuous);
    CHECK(b.gamma == doctest::Approx(gamma).epsilon(1e-14));
    CHECK(b.c_tilde_min == doctest::Approx(c0).epsilon(1e-6));
    CHECK(b.exponent == doctest::Approx(alpha - gamma).epsilon(1e-14));
    // value = c_eps L^{alpha-gamma} with L = ln(ratio)
    double L = std::log(ratio);
    CHECK(b.value ==
          doctest::Approx(b.c_eps * std::pow(L, alpha - gamma)).epsilon(1e-10));
  }
}

TEST_CASE("superradius bound grows with the measured ratio") {
  double prev = 0.0;
  for (double ratio : {5.0, 50.0, 5e3, 5e6}) {
    SuperradiusBound b = superradius_lower_bound(2.0, 0.1, 1.0, ratio);
    CHECK(b.value > prev);
    prev = b.value;
  }
  SuperradiusBound v = superradius_lower_bound(2.0, 0.1, 1.0, 0.8);
  CHECK(v.vacuous);
  CHECK(v.value == 0.0);
  CHECK_THROWS_AS(superradius_lower_bound(2.0, 1.5, 1.0, 10.0),
                  std::invalid_argument);  // eps >= alpha - 1
  CHECK_THROWS_AS(superradius_lower_bound(2.0, 0.1, 0.0, 10.0),
                  std::invalid_argument);
}

TEST_CASE("gamma sweep only strengthens the single-gamma bound") {
  for (double ratio : {30.0, 3e3}) {
    SuperradiusBound one = superradius_lower_bound(2.0, 0.1, 1.0, ratio);
    SuperradiusBound best = superradius_lower_bound_sweep(2.0, 0.1, 1.0, ratio);
    CHECK(best.value >= one.value * (1.0 - 1e-12));
  }
}
