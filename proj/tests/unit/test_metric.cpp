#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orlicz/metric.hpp"

using namespace orlicz;

TEST_CASE("grid geometry") {
  MetricGrid g(DegeneracyProfile::euclidean(), 1.0, 8);
  CHECK(g.h() == doctest::Approx(0.25));
  CHECK(g.nodes_per_axis() == 9);
  CHECK(g.node_count() == 81);
  CHECK(g.x(g.center()) == doctest::Approx(0.0));
  CHECK(g.y(0) == doctest::Approx(-1.0));
  CHECK(g.y(8) == doctest::Approx(1.0));
  CHECK_THROWS_AS(MetricGrid(DegeneracyProfile::euclidean(), 1.0, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(MetricGrid(DegeneracyProfile::euclidean(), 1.0, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(MetricGrid(DegeneracyProfile::euclidean(), -1.0, 8),
                  std::invalid_argument);
}

TEST_CASE("degeneracy profile values") {
  DegeneracyProfile e = DegeneracyProfile::euclidean();
  CHECK(e.f(0.3) == 1.0);
  CHECK(e.inv_f(-5.0) == 1.0);
  CHECK_FALSE(e.degenerate());

  DegeneracyProfile d = DegeneracyProfile::exp_power(1.0);
  CHECK(d.degenerate());
  CHECK(d.sigma() == 1.0);
  CHECK(d.f(0.0) == 0.0);
  CHECK(std::isinf(d.inv_f(0.0)));
  CHECK(d.f(0.5) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(d.f(-0.5) == d.f(0.5));  // even in x
  CHECK(d.f(1e-300) == 0.0);     // underflows cleanly, no NaN

  CHECK_THROWS_AS(DegeneracyProfile::exp_power(0.0), std::invalid_argument);
  CHECK_THROWS_AS(DegeneracyProfile::exp_power(2.5), std::invalid_argument);
}

TEST_CASE("euclid distance field tracks the plane metric") {
  MetricGrid g(DegeneracyProfile::euclidean(), 1.0, 128);
  DistanceField f = origin_distance_field(g);
  // stencil overestimates by at most ~1.4% plus O(h) wiggle
  int c = g.center();
  for (int di : {5, 17, 40}) {
    for (int dj : {3, 11, 29}) {
      double exact = std::hypot(di * g.h(), dj * g.h());
      double got = f.at(c + di, c + dj);
      CHECK(got >= exact * (1.0 - 1e-12));
      CHECK(got <= exact * 1.02);
    }
  }
  CHECK(f.at(c, c) == 0.0);
}

TEST_CASE("euclid ball measure approximates disc area") {
  MetricGrid g(DegeneracyProfile::euclidean(), 1.0, 384);
  DistanceField f = origin_distance_field(g);
  for (double r : {0.3, 0.45}) {
    double area = std::numbers::pi * r * r;
    CHECK(ball_measure(f, r) == doctest::Approx(area).epsilon(0.02));
  }
  CHECK(doubling_ratio(f, 0.2) == doctest::Approx(4.0).epsilon(0.05));
  CHECK_THROWS_AS(ball_measure(f, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ball_measure(f, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(doubling_ratio(f, 0.6), std::invalid_argument);
}

TEST_CASE("closed-form origin volume law") {
  DegeneracyProfile d = DegeneracyProfile::exp_power(1.0);
  // r^4 e^{-1/r} at r = 0.25
  CHECK(volume_asymptotic(d, 0.25) ==
        doctest::Approx(7.154546440911789e-05).epsilon(1e-13));
  DegeneracyProfile h = DegeneracyProfile::exp_power(0.5);
  CHECK(volume_asymptotic(h, 0.25) ==
        doctest::Approx(std::pow(0.25, 3.0) * std::exp(-2.0)).epsilon(1e-13));
}

TEST_CASE("detour distance closed stationary point") {
  DegeneracyProfile d = DegeneracyProfile::exp_power(1.0);
  // 2X + |y| e^{1/X} is stationary at X = 0.2 when y = 0.08 e^{-5}:
  // the minimum value is 0.4 + 0.08 = 0.48
  double y = 0.0005390357599268374;
  CHECK(detour_distance(d, 0.0, y, 1.0) == doctest::Approx(0.48).epsilon(1e-8));
  // y = 0: pure walk along the axis
  CHECK(detour_distance(d, 0.3, 0.0, 1.0) == doctest::Approx(0.3).epsilon(1e-9));
  // symmetry in both arguments
  CHECK(detour_distance(d, -0.1, 0.001, 1.0) ==
        doctest::Approx(detour_distance(d, 0.1, -0.001, 1.0)).epsilon(1e-12));
}

TEST_CASE("column thickness inverts the detour budget") {
  DegeneracyProfile d = DegeneracyProfile::exp_power(1.0);
  for (double x : {0.0, 0.05, 0.12}) {
    double t = column_thickness(d, x, 0.3);
    CHECK(t > 0.0);
    // the detour to the achieved thickness spends exactly the budget
    CHECK(detour_distance(d, x, t, 1.0) == doctest::Approx(0.3).epsilon(1e-6));
  }
  auto [t, xstar] = column_thickness_argmax(d, 0.0, 0.3);
  CHECK(t > 0.0);
  CHECK(xstar > 0.0);
  CHECK(xstar <= 0.15 + 1e-12);
  // out of reach: |x| beyond the budget
  CHECK(column_thickness(d, 0.5, 0.3) == 0.0);
}

TEST_CASE("profile ball volume brackets the closed form") {
  MetricGrid g(DegeneracyProfile::exp_power(1.0), 1.0, 256);
  double prev = 0.0;
  for (double r : {0.15, 0.2, 0.3, 0.4}) {
    double v = profile_ball_volume(g, r);
    CHECK(v > prev);  // monotone in r
    prev = v;
    double law = volume_asymptotic(g.profile(), r);
    CHECK(v / law > 0.1);
    CHECK(v / law < 10.0);
  }
  CHECK(profile_doubling_ratio(g, 0.2) > 1.0);
  CHECK_THROWS_AS(profile_doubling_ratio(g, 0.6), std::invalid_argument);
}

TEST_CASE("doubling fit recovers a planted exponent") {
  // planted law: ln ratio = 3 ln 2 + (1 - 2^{-1/2}) r^{-1/2}, the sigma = 1/2
  // profile's closed form
  double A = 2.0794415416798357, B = 0.2928932188134524;
  std::vector<double> radii, ratios;
  double r = 0.1;
  for (int i = 0; i < 8; ++i) {
    radii.push_back(r);
    ratios.push_back(std::exp(A + B * std::pow(r, -0.5)));
    r *= 1.23;
  }
  DoublingFit fit = log_doubling_exponent_fit(radii, ratios);
  CHECK(fit.divergent);
  CHECK(fit.sigma_hat == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(fit.level == doctest::Approx(A).epsilon(1e-4));
  CHECK(fit.scale == doctest::Approx(B).epsilon(1e-3));
  CHECK(std::abs(fit.drift) < 1e-3);
  CHECK(fit.points == 8);
}

TEST_CASE("doubling fit flags constant ratios as consistent") {
  std::vector<double> radii, ratios;
  double r = 0.1;
  for (int i = 0; i < 8; ++i) {
    radii.push_back(r);
    ratios.push_back(4.0);
    r *= 1.2;
  }
  DoublingFit fit = log_doubling_exponent_fit(radii, ratios);
  CHECK_FALSE(fit.divergent);
  CHECK(fit.excess_variation < 0.25);
}

TEST_CASE("doubling fit input hygiene") {
  CHECK_THROWS_AS(log_doubling_exponent_fit({0.1, 0.2}, {2.0, 2.0}),
                  std::invalid_argument);
  // enough entries, but too few usable after filtering
  std::vector<double> radii = {0.1, 0.2, 0.3, 0.4};
  std::vector<double> ratios = {0.0, -1.0, std::nan(""), 2.0};
  CHECK_THROWS_AS(log_doubling_exponent_fit(radii, ratios), DegenerateDataError);
}
