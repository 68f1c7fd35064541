#include <doctest.h>

#include <cmath>
#include <vector>

#include "orlicz/numerics.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

bool condition_pass(const YoungCheckReport& rep, const std::string& name) {
  for (const auto& c : rep.conditions)
    if (c.name == name) return c.pass;
  return false;
}

}  // namespace

TEST_CASE("log-power bump closed values") {
  YoungFunction phi = YoungFunction::log_power(2.0);
  CHECK(phi(0.0) == 0.0);
  CHECK(phi(0.5) == 0.0);
  CHECK(phi(1.0) == 0.0);
  CHECK(phi(std::exp(1.0)) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  // d/dt [t (ln t)^2] = (ln t)^2 + 2 ln t  -> 3 at t = e
  CHECK(phi.derivative(std::exp(1.0)) == doctest::Approx(3.0).epsilon(1e-12));

  YoungFunction phi15 = YoungFunction::log_power(1.5);
  CHECK(phi15(10.0) == doctest::Approx(34.94005087826986).epsilon(1e-13));

  CHECK_THROWS_AS(YoungFunction::log_power(1.0), std::invalid_argument);
  CHECK_THROWS_AS(YoungFunction::log_power(0.5), std::invalid_argument);
}

TEST_CASE("power bump closed values") {
  YoungFunction p2 = YoungFunction::power(2.0);
  CHECK(p2(3.0) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(p2.derivative(3.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(p2.inverse(9.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK_NOTHROW(YoungFunction::power(1.0));  // L1 endpoint is representable
  CHECK_THROWS_AS(YoungFunction::power(0.5), std::invalid_argument);
}

TEST_CASE("inverse round-trips on both shapes") {
  YoungFunction lp = YoungFunction::log_power(2.0);
  CHECK(lp.inverse(0.0) == 0.0);
  for (double t : {1.5, 2.0, 5.0, 40.0, 1e4}) {
    double y = lp(t);
    CHECK(lp.inverse(y) == doctest::Approx(t).epsilon(1e-9));
  }
  YoungFunction pw = YoungFunction::power(4.0);
  for (double y : {1e-6, 0.5, 7.0, 1e8})
    CHECK(pw(pw.inverse(y)) == doctest::Approx(y).epsilon(1e-12));
}

TEST_CASE("structural checker classifies the shapes") {
  YoungCheckReport lp = check_young(YoungFunction::log_power(2.0));
  CHECK(lp.all_pass());

  YoungCheckReport p2 = check_young(YoungFunction::power(2.0));
  CHECK(p2.all_pass());

  // p = 1: phi(t)/t == 1 never vanishes at 0, never grows without bound
  YoungCheckReport p1 = check_young(YoungFunction::power(1.0));
  CHECK_FALSE(p1.all_pass());
  CHECK_FALSE(condition_pass(p1, "ratio_vanishes_at_zero"));
  CHECK(condition_pass(p1, "vanishes_at_zero"));
  CHECK(condition_pass(p1, "convex"));
}

TEST_CASE("discrete measure space validates weights") {
  DiscreteMeasureSpace mu({1.0, 2.0, 0.0});
  CHECK(mu.total() == doctest::Approx(3.0));
  CHECK(mu.size() == 3);
  CHECK_THROWS_AS(DiscreteMeasureSpace({}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasureSpace({1.0, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasureSpace({0.0, 0.0}), DegenerateDataError);
}

TEST_CASE("luxemburg norm with a power bump is the Lp norm") {
  Rng rng(2024);
  for (double p : {1.0, 2.0, 4.0}) {
    YoungFunction phi = YoungFunction::power(p);
    for (int rep = 0; rep < 20; ++rep) {
      std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 30));
      std::vector<double> f, w;
      for (std::size_t i = 0; i < n; ++i) {
        f.push_back(rng.uniform(-3.0, 3.0));
        w.push_back(rng.uniform(0.0, 1.0));
      }
      w[0] += 1e-3;  // keep the total positive
      DiscreteMeasureSpace mu(w);
      CHECK(luxemburg_norm(f, mu, phi) ==
            doctest::Approx(lp_norm(f, mu, p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("luxemburg norm edge cases") {
  YoungFunction phi = YoungFunction::power(2.0);
  DiscreteMeasureSpace mu({1.0, 1.0, 1.0});
  CHECK(luxemburg_norm({0.0, 0.0, 0.0}, mu, phi) == 0.0);
  // zero-weight atoms carry no mass, however large their values
  DiscreteMeasureSpace mu2({1.0, 0.0});
  double n2 = luxemburg_norm({2.0, 1e300}, mu2, phi);
  CHECK(n2 == doctest::Approx(2.0).epsilon(1e-9));
  // positive homogeneity
  std::vector<double> f = {0.3, -1.2, 0.7};
  double base = luxemburg_norm(f, mu, phi);
  for (double& v : f) v *= 5.0;
  CHECK(luxemburg_norm(f, mu, phi) == doctest::Approx(5.0 * base).epsilon(1e-9));
  CHECK_THROWS_AS(luxemburg_norm({1.0}, mu, phi), std::invalid_argument);
}

TEST_CASE("log-power luxemburg norm solves the modular equation") {
  YoungFunction phi = YoungFunction::log_power(2.0);
  DiscreteMeasureSpace mu({1.0, 2.0, 0.5});
  std::vector<double> f = {4.0, -7.5, 2.0};
  double k = luxemburg_norm(f, mu, phi);
  double modular = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    modular += phi(std::abs(f[i]) / k) * mu.weights()[i];
  modular /= mu.total();
  CHECK(modular == doctest::Approx(1.0).epsilon(1e-8));
}
