#include <doctest.h>

#include <cmath>
#include <random>

#include "repsel/economy.hpp"
#include "test_support.hpp"

using namespace repsel;
using repsel::testing::lowcost_base_params;

TEST_CASE("parameter validation rejects each broken invariant") {
  EconomyParams good = lowcost_base_params();
  CHECK_NOTHROW(good.validate());

  auto broken = good;
  broken.r = 0.0;
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = good;
  broken.kappa = -0.1;
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = good;
  broken.phi_b = -1.0;
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = good;
  broken.c = 0.0;
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = good;
  broken.c = broken.lambda_a;  // needs c < lambda_a strictly
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = good;
  broken.lambda_a = broken.lambda_b;  // needs lambda_a < lambda_b strictly
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = good;
  broken.lambda_b = std::nan("");
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
}

TEST_CASE("regime classification at the baseline low-cost parameters") {
  const RegimeInfo info = classify_regime(lowcost_base_params());
  CHECK(info.regime == Regime::LowCost);
  CHECK(std::abs(info.w1 - 0.1967) < 1e-4);

  // Hand-checkable arithmetic behind the classification: the b-only value
  // of reputation 1 is 0.32*1.8/4.22, strictly below lambda_a - c = 0.6.
  const double rw1_b = 0.32 * 1.8 / 4.22;
  CHECK(rw1_b == doctest::Approx(0.13649289099526).epsilon(1e-12));
  CHECK(rw1_b < 0.6);
}

TEST_CASE("no meetings means zero continuation value and the low cost regime") {
  EconomyParams p = lowcost_base_params();
  p.kappa = 0.0;
  const RegimeInfo info = classify_regime(p);
  CHECK(info.regime == Regime::LowCost);
  CHECK(info.w1 == 0.0);
}

TEST_CASE("knife-edge equality classifies as high cost") {
  // All quantities exactly representable: r w_b(1) = 1*(2-1)/(1+1+2) = 0.25
  // and lambda_a - c = 0.25, so the comparison is an exact tie.
  const EconomyParams p{1.0, 1.25, 2.0, 1.0, 1.0, 0.5, 1.0};
  CHECK(classify_regime(p).regime == Regime::HighCost);
  // An ulp above the tie flips to low cost: membership is strict.
  EconomyParams above = p;
  above.lambda_a = std::nextafter(1.25, 2.0);
  CHECK(classify_regime(above).regime == Regime::LowCost);
}

TEST_CASE("w1 is nonnegative, bounded, and including a-projects never hurts") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const EconomyParams p = testing::sample_params(rng);
    const RegimeInfo info = classify_regime(p);
    CHECK(info.w1 >= 0.0);
    CHECK(p.r * info.w1 < p.lambda_b - p.c);
    if (info.regime == Regime::LowCost && p.kappa > 0.0) {
      const double kb = p.kappa * p.phi_b;
      const double w1_b = kb * (p.lambda_b - p.c) / ((p.r + kb + p.lambda_b) * p.r);
      CHECK(info.w1 >= w1_b);
    }
  }
}

TEST_CASE("belief decay fixed points and the odds-halving example") {
  CHECK(belief_decay(0.0, 3.0, 5.0) == 0.0);
  CHECK(belief_decay(1.0, 3.0, 5.0) == 1.0);
  // Odds fall from 1 to 1/2 when lambda*t = ln 2.
  CHECK(belief_decay(0.5, 1.0, std::log(2.0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(belief_decay(0.5, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(belief_decay(1.5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("belief decay matches a fourth-order ODE integration") {
  // Independent oracle: RK4 on d pi = -pi (1-pi) lambda dt.
  const double lambda = 3.0, t_end = 0.25, pi0 = 0.8;
  const int steps = 4000;
  const double h = t_end / steps;
  auto f = [&](double pi) { return -pi * (1.0 - pi) * lambda; };
  double pi = pi0;
  for (int i = 0; i < steps; ++i) {
    const double k1 = f(pi);
    const double k2 = f(pi + 0.5 * h * k1);
    const double k3 = f(pi + 0.5 * h * k2);
    const double k4 = f(pi + h * k3);
    pi += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  CHECK(belief_decay(pi0, lambda, t_end) == doctest::Approx(pi).epsilon(1e-8));
}

TEST_CASE("belief decay is monotone in time and order preserving in the prior") {
  double prev = belief_decay(0.7, 2.0, 0.0);
  for (int i = 1; i <= 50; ++i) {
    const double cur = belief_decay(0.7, 2.0, 0.1 * i);
    CHECK(cur < prev);
    prev = cur;
  }
  for (int i = 1; i < 20; ++i) {
    const double lo = belief_decay(i / 20.0, 2.0, 0.8);
    const double hi = belief_decay((i + 1) / 20.0, 2.0, 0.8);
    CHECK(lo < hi);
  }
}

TEST_CASE("hitting time examples and input rejection") {
  CHECK(hitting_time(0.5, 0.5, 2.0) == 0.0);
  CHECK(hitting_time(0.5, 1.0 / 3.0, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(hitting_time(0.4, 0.5, 1.0), std::invalid_argument);  // target above start
  CHECK_THROWS_AS(hitting_time(1.0, 0.5, 1.0), std::invalid_argument);  // endpoint
  CHECK_THROWS_AS(hitting_time(0.5, 0.0, 1.0), std::invalid_argument);  // endpoint
  CHECK_THROWS_AS(hitting_time(0.5, 0.4, 0.0), std::invalid_argument);  // rate
}

TEST_CASE("hitting time inverts belief decay to machine precision") {
  const double t = hitting_time(0.8, 0.334252, 3.0);
  CHECK(std::abs(belief_decay(0.8, 3.0, t) - 0.334252) < 1e-12);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const double pi0 = testing::uniform(rng, 0.02, 0.98);
    const double target = testing::uniform(rng, 0.01, pi0);
    const double lambda = testing::uniform(rng, 0.2, 4.0);
    const double dt = hitting_time(pi0, target, lambda);
    CHECK(std::abs(belief_decay(pi0, lambda, dt) - target) < 1e-12);
  }
}
