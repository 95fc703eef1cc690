#include <doctest.h>

#include <cmath>
#include <random>

#include "repsel/benchmark.hpp"
#include "repsel/solver.hpp"
#include "test_support.hpp"

using namespace repsel;
using repsel::testing::lowcost_base_params;
using repsel::testing::benchmark_base_params;

TEST_CASE("baseline no-learning constants are reproduced") {
  const BenchmarkReport rep = solve_no_learning(benchmark_base_params());
  CHECK(rep.regime.regime == Regime::LowCost);
  CHECK(rep.beta_hat == 0.6 / 3.8);
  REQUIRE(rep.alpha_hat.has_value());
  CHECK(std::abs(*rep.alpha_hat - 0.648248) < 1e-4);

  // Indifference at the a-boundary, both sides evaluated independently.
  const double lhs = rep.params.lambda_a * *rep.alpha_hat - rep.params.c;
  const double rhs = rep.params.r * rep.w_ab_branch(*rep.alpha_hat);
  CHECK(std::abs(lhs - rhs) < 1e-6);
  CHECK(std::abs(lhs - 0.372372) < 1e-4);
}

TEST_CASE("reservation value vanishes at beta_hat together with v_b") {
  const BenchmarkReport rep = solve_no_learning(benchmark_base_params());
  CHECK(std::abs(rep.w(rep.beta_hat)) < 1e-14);
  CHECK(std::abs(rep.w_b_branch(rep.beta_hat)) < 1e-14);
  CHECK(std::abs(rep.v(ProjectType::B, rep.beta_hat)) < 1e-14);
}

TEST_CASE("the closed-form quadratic agrees with the root finder") {
  const BenchmarkReport rep = solve_no_learning(benchmark_base_params());
  CHECK(rep.diagnostics.at("alpha_hat_quadratic_gap") < 1e-9);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const EconomyParams p = testing::sample_params_in_regime(rng, Regime::LowCost);
    CHECK(solve_no_learning(p).diagnostics.at("alpha_hat_quadratic_gap") < 1e-9);
  }
}

TEST_CASE("w_hat is continuous across both boundaries") {
  const BenchmarkReport rep = solve_no_learning(benchmark_base_params());
  REQUIRE(rep.alpha_hat.has_value());
  CHECK(std::abs(rep.w_b_branch(*rep.alpha_hat) - rep.w_ab_branch(*rep.alpha_hat)) < 1e-9);
  CHECK(std::abs(rep.w(rep.beta_hat + 1e-13) - 0.0) < 1e-9);
}

TEST_CASE("membership rule matches the value comparison on a grid") {
  const BenchmarkReport rep = solve_no_learning(benchmark_base_params());
  const EconomyParams& p = rep.params;
  for (int i = 0; i <= 2000; ++i) {
    const double pi = i / 2000.0;
    const double w = rep.w(pi);
    for (ProjectType q : {ProjectType::A, ProjectType::B}) {
      const double gain = p.rate(q) * pi - p.c - p.r * w;
      if (std::abs(gain) <= 1e-9) continue;  // knife-edge band
      CHECK((gain > 0.0) == (rep.v(q, pi) > w + 1e-12));
    }
  }
}

TEST_CASE("matching value functions kink at the lower boundary") {
  const BenchmarkReport rep = solve_no_learning(benchmark_base_params());
  const double step = 1e-6;
  // One-sided finite differences disagree by far more than the smoothness
  // tolerance used for the learning solution (1e-5): these are genuine kinks.
  const double right_b =
      (rep.v(ProjectType::B, rep.beta_hat + step) - rep.v(ProjectType::B, rep.beta_hat)) / step;
  const double left_b =
      (rep.v(ProjectType::B, rep.beta_hat) - rep.v(ProjectType::B, rep.beta_hat - step)) / step;
  CHECK(std::abs(right_b - left_b) > 1e-5 * 10.0);

  REQUIRE(rep.alpha_hat.has_value());
  const double a = *rep.alpha_hat;
  const double right_a = (rep.v(ProjectType::A, a + step) - rep.v(ProjectType::A, a)) / step;
  const double left_a = (rep.v(ProjectType::A, a) - rep.v(ProjectType::A, a - step)) / step;
  CHECK(std::abs(right_a - left_a) > 1e-5 * 10.0);
}

TEST_CASE("a-section is empty in the high cost regime") {
  EconomyParams p = lowcost_base_params();
  p.lambda_a = 1.3;
  const BenchmarkReport rep = solve_no_learning(p);
  CHECK(rep.regime.regime == Regime::HighCost);
  CHECK_FALSE(rep.alpha_hat.has_value());
  for (double pi : {0.2, 0.6, 1.0}) CHECK_FALSE(rep.in_matching_set(ProjectType::A, pi));
}

TEST_CASE("benchmark sections are increasing intervals with a inside b") {
  const BenchmarkReport rep = solve_no_learning(benchmark_base_params());
  REQUIRE(rep.alpha_hat.has_value());
  CHECK(rep.beta_hat < *rep.alpha_hat);
  bool seen_a = false;
  for (int i = 0; i <= 1000; ++i) {
    const double pi = i / 1000.0;
    const bool in_a = rep.in_matching_set(ProjectType::A, pi);
    if (in_a) CHECK(rep.in_matching_set(ProjectType::B, pi));
    if (seen_a) CHECK(in_a);
    seen_a = seen_a || in_a;
  }
}

TEST_CASE("alpha_hat grows as search frictions fall") {
  double prev = -1.0;
  for (int i = 0; i <= 12; ++i) {
    EconomyParams p = benchmark_base_params();
    p.kappa = 0.3 + 0.3 * i;
    const BenchmarkReport rep = solve_no_learning(p);
    REQUIRE(rep.alpha_hat.has_value());
    CHECK(*rep.alpha_hat > prev);
    prev = *rep.alpha_hat;
  }
}

TEST_CASE("learning lowers the b-boundary relative to the benchmark") {
  const LearningComparison cmp = compare_learning(lowcost_base_params());
  CHECK(std::abs(cmp.beta - 0.334252) < 1e-4);
  CHECK(cmp.beta_hat == 1.2 / 3.0);
  CHECK(cmp.beta_below_benchmark);
  CHECK(cmp.b_section_includes_benchmark);

  EconomyParams p = lowcost_base_params();
  p.kappa = 0.0;
  const LearningComparison frozen = compare_learning(p);
  CHECK(std::abs(frozen.beta - frozen.beta_hat) < 1e-15);
  CHECK_FALSE(frozen.beta_below_benchmark);

  std::mt19937_64 rng(47);
  for (int i = 0; i < 40; ++i) {
    const EconomyParams q = testing::sample_params(rng);  // kappa > 0 in the box
    CHECK(compare_learning(q).beta_below_benchmark);
  }
}
