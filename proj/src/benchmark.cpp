#include "repsel/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "repsel/root_find.hpp"
#include "repsel/solver.hpp"

namespace repsel {

namespace {

constexpr double kBracketMargin = 1e-9;
constexpr double kAlphaHatTol = 1e-12;

// Positive root of the indifference quadratic
//   la lb x^2 + (r la - k phi_b (lb - la) - c lb) x - c r = 0,
// equivalent to lambda_a pi - c = r w_ab(pi). Kept as a diagnostic
// cross-check of the root finder.
double alpha_hat_quadratic(const EconomyParams& p) {
  const double kb = p.kappa * p.phi_b;
  const double a = p.lambda_a * p.lambda_b;
  const double b = p.r * p.lambda_a - kb * (p.lambda_b - p.lambda_a) - p.c * p.lambda_b;
  const double e = -p.c * p.r;
  return (-b + std::sqrt(b * b - 4.0 * a * e)) / (2.0 * a);
}

}  // namespace

double BenchmarkReport::w_b_branch(double pi) const {
  const auto& p = params;
  const double kb = p.kappa * p.phi_b;
  return kb * (p.lambda_b * pi - p.c) / (p.r * (p.r + p.lambda_b * pi + kb));
}

double BenchmarkReport::w_ab_branch(double pi) const {
  const auto& p = params;
  const double ka = p.kappa * p.phi_a;
  const double kb = p.kappa * p.phi_b;
  const double ra = p.r + p.lambda_a * pi;
  const double rb = p.r + p.lambda_b * pi;
  const double num = kb * (p.lambda_b * pi - p.c) * ra + ka * (p.lambda_a * pi - p.c) * rb;
  return num / (p.r * (ra * rb + kb * ra + ka * rb));
}

double BenchmarkReport::w(double pi) const {
  if (pi <= beta_hat) return 0.0;
  if (!alpha_hat || pi <= *alpha_hat) return w_b_branch(pi);
  return w_ab_branch(pi);
}

double BenchmarkReport::v(ProjectType q, double pi) const {
  const double lam = params.rate(q);
  const double wp = w(pi);
  const double match = (lam * pi - params.c) / (params.r + lam * pi) +
                       lam * pi * wp / (params.r + lam * pi);
  return std::max(wp, match);
}

BenchmarkReport solve_no_learning(const EconomyParams& p) {
  p.validate();
  BenchmarkReport rep;
  rep.params = p;
  rep.regime = classify_regime(p);
  rep.beta_hat = p.c / p.lambda_b;

  if (rep.regime.regime == Regime::LowCost) {
    auto g = [&](double pi) { return p.lambda_a * pi - p.c - p.r * rep.w_ab_branch(pi); };
    const double lo = rep.beta_hat + kBracketMargin;
    const double hi = 1.0 - kBracketMargin;
    if (!(g(lo) < 0.0 && g(hi) > 0.0)) {
      throw std::runtime_error("solve_no_learning: indifference root not bracketed in low cost regime");
    }
    const auto root = find_root(g, lo, hi, kAlphaHatTol);
    rep.alpha_hat = root.x;
    rep.diagnostics["indifference_residual"] = std::abs(g(root.x));
    rep.diagnostics["alpha_hat_quadratic_gap"] = std::abs(root.x - alpha_hat_quadratic(p));
    rep.diagnostics["w_junction_alpha_hat"] =
        std::abs(rep.w_b_branch(root.x) - rep.w_ab_branch(root.x));
  }
  rep.diagnostics["w_at_beta_hat"] = std::abs(rep.w_b_branch(rep.beta_hat));
  return rep;
}

LearningComparison compare_learning(const EconomyParams& p) {
  const SolveReport learn = solve(p);
  const BenchmarkReport bench = solve_no_learning(p);
  LearningComparison cmp;
  cmp.beta = learn.beta;
  cmp.beta_hat = bench.beta_hat;
  cmp.beta_below_benchmark = learn.beta < bench.beta_hat;
  cmp.alpha = learn.alpha;
  cmp.alpha_hat = bench.alpha_hat;
  cmp.b_section_includes_benchmark = learn.beta <= bench.beta_hat;
  if (learn.alpha && bench.alpha_hat) {
    cmp.a_section_includes_benchmark = *learn.alpha <= *bench.alpha_hat;
  } else {
    // An absent benchmark a-section is trivially included.
    cmp.a_section_includes_benchmark = !bench.alpha_hat.has_value();
  }
  return cmp;
}

}  // namespace repsel
