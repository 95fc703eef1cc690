#pragma once

#include <map>
#include <optional>
#include <string>

#include "repsel/economy.hpp"

namespace repsel {

/// Coefficient form of a matching value function on its continuation
/// interval (x_low, 1]:
///
///   v(pi) = p0 + p1*pi + gamma * ((1-pi)/(1-x_low))^(1+rho) * (x_low/pi)^rho
///
/// with rho = r/lambda_q. The homogeneous term equals 1 at x_low and
/// vanishes (with its derivative) at pi = 1. Only ever evaluated on
/// (x_low, 1], so the pi^(-rho) singularity at 0 is never reached.
struct ValueFn {
  double p0 = 0.0;
  double p1 = 0.0;
  double gamma = 0.0;
  double x_low = 0.0;
  double rho = 0.0;

  double value(double pi) const;
  double derivative(double pi) const;
};

/// Sections of the optimal matching set. Both are increasing intervals,
/// open at the lower end: a q-match is kept iff pi > cutoff_q. An absent
/// a-cutoff means the a-section is empty (high cost regime).
struct MatchingSet {
  double beta = 0.0;
  std::optional<double> alpha;

  bool contains(ProjectType q, double pi) const {
    if (q == ProjectType::B) return pi > beta;
    return alpha.has_value() && pi > *alpha;
  }
};

/// Full solution of the learning model: boundaries, value-function
/// coefficients and the piecewise evaluators for w, v_a, v_b on [0,1].
/// Immutable after construction; safe to share across threads.
struct SolveReport {
  EconomyParams params;
  RegimeInfo regime;
  double beta = 0.0;
  std::optional<double> alpha;  // absent in the high cost regime
  ValueFn vb;
  ValueFn va;  // in the high cost regime: the scaled-vb coefficients
  bool va_is_scaled_vb = false;
  MatchingSet matching;
  std::map<std::string, double> diagnostics;

  /// kappa*phi_b / (r + kappa*phi_b), the weight tying w to v_b on the
  /// b-only region.
  double scale_b() const;

  // Piecewise evaluation on [0,1]; outside a continuation interval the
  // stopping branch (the reservation value) is substituted. Evaluation at
  // exactly a boundary point uses the stopping branch.
  double w(double pi) const;
  double w_prime(double pi) const;
  double vb_value(double pi) const;
  double vb_prime(double pi) const;
  double va_value(double pi) const;
  double va_prime(double pi) const;
};

/// Lowest boundary point of the b-section: beta = c / (lambda_b (1+w(1))).
Belief solve_beta(const EconomyParams& params, const RegimeInfo& regime);

/// Closed-form v*_b with value matching and smooth pasting at beta.
ValueFn build_vb(const EconomyParams& params, const RegimeInfo& regime, double beta);

/// Lower boundary of the a-section in the low cost regime, from the
/// fixed point
///   alpha = [r lb c + k phi_b (lb-la)(c + r v_b(alpha))] / [r lb la (1+w1)].
/// Returns nothing in the high cost regime. Throws if no root is
/// bracketed in (beta, 1): that signals an internal inconsistency.
std::optional<Belief> solve_alpha(const EconomyParams& params, const RegimeInfo& regime,
                                  const ValueFn& vb);

/// Closed-form v*_a in the low cost regime. gamma is pinned by value
/// matching v_a(alpha) = scale * v_b(alpha); the derivative condition then
/// holds automatically and is asserted by solve(), not imposed.
ValueFn build_va(const EconomyParams& params, const RegimeInfo& regime, double alpha,
                 const ValueFn& vb);

/// Orchestrates the full solve and fills the diagnostics block. Throws
/// std::runtime_error if any internal residual exceeds its tolerance.
SolveReport solve(const EconomyParams& params);

}  // namespace repsel
