#pragma once

#include <stdexcept>
#include <string>

namespace repsel {

/// Posterior probability that the agent is the high type. Plain double on
/// [0,1]; validated at API boundaries rather than wrapped.
using Belief = double;

enum class ProjectType { A, B };

inline const char* to_string(ProjectType q) { return q == ProjectType::A ? "a" : "b"; }

/// The seven primitives of the economy. All rates are per unit time,
/// project masses are dimensionless.
struct EconomyParams {
  double r;         // discount rate, > 0
  double lambda_a;  // success rate of a-projects for a high type
  double lambda_b;  // success rate of b-projects, lambda_b > lambda_a
  double c;         // flow cost while matched, 0 < c < lambda_a
  double kappa;     // meeting-rate scale, >= 0
  double phi_a;     // mass of a-projects, >= 0
  double phi_b;     // mass of b-projects, >= 0

  void validate() const;

  double rate(ProjectType q) const { return q == ProjectType::A ? lambda_a : lambda_b; }
  double mass(ProjectType q) const { return q == ProjectType::A ? phi_a : phi_b; }
  double meet_rate(ProjectType q) const { return kappa * mass(q); }
  double total_meet_rate() const { return kappa * (phi_a + phi_b); }

  bool operator==(const EconomyParams&) const = default;
};

enum class Regime { LowCost, HighCost };

inline const char* to_string(Regime rg) {
  return rg == Regime::LowCost ? "low_cost" : "high_cost";
}

/// Cost-regime label plus the value w(1) of holding reputation 1 in that
/// regime. w(1) is endogenous: its closed form differs across regimes.
struct RegimeInfo {
  Regime regime;
  double w1;
};

/// Classifies the economy. Low cost iff an a-project at reputation 1 beats
/// the option value of waiting for a b-project; knife-edge equality counts
/// as high cost so that the a-section of the matching set stays empty.
RegimeInfo classify_regime(const EconomyParams& params);

/// Closed-form belief decay while matched to a project with success rate
/// lambda_q and no success observed: odds shrink by exp(-lambda_q * t).
/// Endpoints 0 and 1 are fixed points.
Belief belief_decay(Belief pi0, double lambda_q, double t);

/// Inverse of belief_decay: time for the belief to fall from pi0 to
/// pi_target. Requires 0 < pi_target <= pi0 < 1.
double hitting_time(Belief pi0, Belief pi_target, double lambda_q);

}  // namespace repsel
