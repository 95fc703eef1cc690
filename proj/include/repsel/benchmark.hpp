#pragma once

#include <map>
#include <optional>
#include <string>

#include "repsel/economy.hpp"

namespace repsel {

/// Solution of the no-learning benchmark, where the agent's type is the
/// known constant pi instead of a hidden binary draw. Everything is in
/// closed form; the report evaluates w-hat and v-hat_q directly from the
/// primitives.
struct BenchmarkReport {
  EconomyParams params;
  RegimeInfo regime;
  double beta_hat = 0.0;                // = c / lambda_b exactly
  std::optional<double> alpha_hat;      // absent in the high cost regime
  std::map<std::string, double> diagnostics;

  /// Reservation-value branch when only b-projects are accepted.
  double w_b_branch(double pi) const;
  /// Reservation-value branch when both project types are accepted.
  double w_ab_branch(double pi) const;

  // Piecewise evaluation on [0,1].
  double w(double pi) const;
  double v(ProjectType q, double pi) const;

  bool in_matching_set(ProjectType q, double pi) const {
    if (q == ProjectType::B) return pi > beta_hat;
    return alpha_hat.has_value() && pi > *alpha_hat;
  }
};

/// Solves the no-learning model. alpha_hat comes from root-finding on the
/// indifference condition lambda_a pi - c = r w_ab(pi); the printed
/// closed-form quadratic is evaluated only as a cross-check and its gap is
/// stored in diagnostics["alpha_hat_quadratic_gap"].
BenchmarkReport solve_no_learning(const EconomyParams& params);

/// Side-by-side boundary comparison of the learning and no-learning
/// solutions at the same primitives.
struct LearningComparison {
  double beta = 0.0;
  double beta_hat = 0.0;
  bool beta_below_benchmark = false;  // beta < beta_hat
  std::optional<double> alpha;
  std::optional<double> alpha_hat;
  bool b_section_includes_benchmark = false;  // (beta,1] contains (beta_hat,1]
  bool a_section_includes_benchmark = false;  // (alpha,1] contains (alpha_hat,1]
};

LearningComparison compare_learning(const EconomyParams& params);

}  // namespace repsel
