#include <doctest.h>

#include <cmath>

#include "orlicz/sobolev.hpp"

using namespace orlicz;

TEST_CASE("q_gradient of planes") {
  MetricGrid g(DegeneracyProfile::euclidean(), 1.0, 16);
  std::vector<double> u(g.node_count());
  for (int j = 0; j < g.nodes_per_axis(); ++j)
    for (int i = 0; i < g.nodes_per_axis(); ++i)
      u[g.index(i, j)] = 2.0 * g.x(i) - 0.5 * g.y(j);
  std::vector<double> grad = q_gradient(g, u);
  double expected = std::hypot(2.0, 0.5);
  for (double v : grad) CHECK(v == doctest::Approx(expected).epsilon(1e-11));

  // degenerate profile scales the y component by f(x)
  MetricGrid gd(DegeneracyProfile::exp_power(1.0), 1.0, 16);
  std::vector<double> w(gd.node_count());
  for (int j = 0; j < gd.nodes_per_axis(); ++j)
    for (int i = 0; i < gd.nodes_per_axis(); ++i)
      w[gd.index(i, j)] = 3.0 * gd.y(j);
  std::vector<double> gw = q_gradient(gd, w);
  int c = gd.center();
  double x1 = gd.x(c + 2);
  CHECK(gw[gd.index(c + 2, c)] ==
        doctest::Approx(3.0 * gd.profile().f(x1)).epsilon(1e-11));
  CHECK(gw[gd.index(c, c)] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("standard profile family shapes") {
  std::vector<RadialProfile> fam = standard_profiles(0.4, 2.0);
  REQUIRE(fam.size() == 4);
  CHECK(fam[0].name == "cutoff_ramp_1");
  CHECK(fam[1].name == "cutoff_ramp_2");
  CHECK(fam[2].name == "linear_bump");
  CHECK(fam[3].name == "quadratic_bump");
  for (const auto& p : fam) {
    CHECK(p.value(0.0) == doctest::Approx(1.0));
    CHECK(p.value(p.support) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.support <= 0.4 + 1e-12);
    CHECK(p.support > 0.0);
  }
  // linear bump: value (1 - s/r)+, slope -1/r
  CHECK(fam[2].value(0.2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fam[2].slope(0.2) == doctest::Approx(-2.5).epsilon(1e-12));
  // quadratic bump: ((1 - s/r)+)^2
  CHECK(fam[3].value(0.2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(fam[3].slope(0.2) == doctest::Approx(-2.5).epsilon(1e-12));
}

TEST_CASE("shell quadrature telescopes to the column volume") {
  MetricGrid g(DegeneracyProfile::exp_power(1.0), 1.0, 256);
  for (double R : {0.2, 0.35}) {
    ShellQuadrature q = shell_quadrature(g, R);
    CHECK(q.total ==
          doctest::Approx(profile_ball_volume(g, R)).epsilon(1e-9));
    double sum = 0.0;
    REQUIRE(q.mass.size() == q.mid.size());
    REQUIRE(q.q_mass.size() == q.mid.size());
    for (std::size_t k = 0; k < q.mass.size(); ++k) {
      sum += q.mass[k];
      CHECK(q.q_mass[k] >= q.mass[k] * (1.0 - 1e-12));
      CHECK(q.q_mass[k] <= q.mass[k] * (std::sqrt(2.0) + 1e-12));
      if (k) CHECK(q.mid[k] > q.mid[k - 1]);
    }
    CHECK(sum == doctest::Approx(q.total).epsilon(1e-12));
  }
  // deep in the degeneracy the reachable set underflows to nothing
  MetricGrid flat0(DegeneracyProfile::exp_power(2.0), 1.0, 256);
  CHECK_THROWS_AS(shell_quadrature(flat0, 0.02), DegenerateDataError);
}

TEST_CASE("radial ratio is scale invariant and positive") {
  MetricGrid g(DegeneracyProfile::exp_power(1.0), 1.0, 256);
  ShellQuadrature q = shell_quadrature(g, 0.3);
  YoungFunction phi = YoungFunction::log_power(2.0);
  std::vector<RadialProfile> fam = standard_profiles(0.3, 2.0);
  for (const auto& p : fam) {
    SobolevSample s = sobolev_ratio_radial(q, p, phi);
    CHECK(s.lhs > 0.0);
    CHECK(s.rhs > 0.0);
    CHECK(s.ratio == doctest::Approx(s.lhs / s.rhs).epsilon(1e-14));

    RadialProfile scaled = p;
    scaled.value = [p](double t) { return 5.0 * p.value(t); };
    scaled.slope = [p](double t) { return 5.0 * p.slope(t); };
    SobolevSample s5 = sobolev_ratio_radial(q, scaled, phi);
    CHECK(s5.ratio == doctest::Approx(s.ratio).epsilon(1e-8));
  }
}

TEST_CASE("field ratio on the flat grid") {
  MetricGrid g(DegeneracyProfile::euclidean(), 1.0, 128);
  DistanceField f = origin_distance_field(g);
  YoungFunction phi = YoungFunction::power(2.0);
  double r = 0.4;
  std::vector<double> w(g.node_count(), 0.0);
  for (int j = 0; j < g.nodes_per_axis(); ++j)
    for (int i = 0; i < g.nodes_per_axis(); ++i) {
      double d = f.at(i, j);
      if (d < r) w[g.index(i, j)] = 1.0 - d / r;
    }
  SobolevSample grad = sobolev_ratio_field(f, w, r, phi);
  CHECK(grad.lhs > 0.0);
  CHECK(grad.rhs > 0.0);
  SobolevSample lip = sobolev_ratio_field(f, w, r, phi, true);
  // the one-move surrogate sees slope ~ 1/r as well
  CHECK(lip.rhs == doctest::Approx(grad.rhs).epsilon(0.25));
}

TEST_CASE("pp constant of the tent matches the disc integral") {
  // (1/|B|) int (1-|x|/r)^2 over the disc = 5/4 - 8/(3 pi), and the
  // euclid gradient of the tent is 1/r, so C -> 5/4 - 8/(3 pi) = 0.401174
  MetricGrid g(DegeneracyProfile::euclidean(), 1.0, 256);
  DistanceField f = origin_distance_field(g);
  double r = 0.3;
  std::vector<double> w(g.node_count(), 0.0);
  for (int j = 0; j < g.nodes_per_axis(); ++j)
    for (int i = 0; i < g.nodes_per_axis(); ++i)
      w[g.index(i, j)] = std::max(0.0, 1.0 - std::abs(g.x(i)) / r);
  double c = pp_sobolev_check(f, w, r, 2.0);
  CHECK(c == doctest::Approx(0.4011736368432248).epsilon(0.05));

  // support precondition: a tent wider than the strip is rejected
  std::vector<double> wide(g.node_count(), 1.0);
  CHECK_THROWS_AS(pp_sobolev_check(f, wide, r, 2.0), std::invalid_argument);
}

TEST_CASE("superradius closed form and guard") {
  CHECK(superradius_formula(0.5, 1.5, 0.01) ==
        doctest::Approx(0.1118033988749895).epsilon(1e-13));
  // phi(r)/r = sigma^alpha r^{-sigma alpha} decreases in r
  CHECK(superradius_formula(0.5, 1.5, 0.01) / 0.01 >
        superradius_formula(0.5, 1.5, 0.02) / 0.02);
  CHECK_THROWS_AS(superradius_formula(1.0, 1.5, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(superradius_formula(0.5, 2.0, 0.01), std::invalid_argument);
}

TEST_CASE("flat-profile superradius sweep scales classically") {
  MetricGrid g(DegeneracyProfile::euclidean(), 1.0, 256);
  YoungFunction phi = YoungFunction::power(2.0);
  std::vector<double> radii = {0.2, 0.26, 0.33, 0.42, 0.5};
  SuperradiusSweep sweep = empirical_superradius(g, phi, radii, 2.0);
  REQUIRE(sweep.points.size() == radii.size());
  // phi(r) = r regime: max-ratio slope ~ 1, phi(r)/r flat
  CHECK(sweep.slope == doctest::Approx(1.0).epsilon(0.1));
  double first = sweep.points.front().phi_over_r;
  for (const auto& pt : sweep.points) {
    CHECK(pt.max_ratio > 0.0);
    CHECK(pt.phi_over_r == doctest::Approx(first).epsilon(0.1));
    CHECK_FALSE(pt.best_profile.empty());
  }
  CHECK_THROWS_AS(empirical_superradius(g, phi, {0.2, 0.3}, 2.0),
                  std::invalid_argument);
}
