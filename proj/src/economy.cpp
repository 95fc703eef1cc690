#include "repsel/economy.hpp"

#include <cmath>

namespace repsel {

void EconomyParams::validate() const {
  auto bad = [](const std::string& what) { throw std::invalid_argument("EconomyParams: " + what); };
  for (double v : {r, lambda_a, lambda_b, c, kappa, phi_a, phi_b}) {
    if (!std::isfinite(v)) bad("all fields must be finite");
  }
  if (r <= 0.0) bad("r must be > 0");
  if (kappa < 0.0) bad("kappa must be >= 0");
  if (phi_a < 0.0 || phi_b < 0.0) bad("phi_a and phi_b must be >= 0");
  if (!(0.0 < c && c < lambda_a && lambda_a < lambda_b)) bad("need 0 < c < lambda_a < lambda_b");
}

RegimeInfo classify_regime(const EconomyParams& p) {
  p.validate();
  const double ka = p.kappa * p.phi_a;
  const double kb = p.kappa * p.phi_b;
  // Value of reputation 1 when only b-projects are accepted there.
  const double w1_b = kb * (p.lambda_b - p.c) / ((p.r + kb + p.lambda_b) * p.r);
  if (p.lambda_a - p.c > p.r * w1_b) {
    const double ra = p.r + p.lambda_a;
    const double rb = p.r + p.lambda_b;
    const double num = kb * (p.lambda_b - p.c) * ra + ka * (p.lambda_a - p.c) * rb;
    const double den = ra * rb + kb * ra + ka * rb;
    return {Regime::LowCost, num / (den * p.r)};
  }
  return {Regime::HighCost, w1_b};
}

Belief belief_decay(Belief pi0, double lambda_q, double t) {
  if (!(pi0 >= 0.0 && pi0 <= 1.0)) throw std::invalid_argument("belief_decay: pi0 outside [0,1]");
  if (!(t >= 0.0)) throw std::invalid_argument("belief_decay: t must be >= 0");
  if (pi0 == 0.0 || pi0 == 1.0) return pi0;  // absorbing for the decay ODE
  // Odds form avoids cancellation near pi = 1.
  const double decayed = pi0 * std::exp(-lambda_q * t);
  return decayed / (1.0 - pi0 + decayed);
}

double hitting_time(Belief pi0, Belief pi_target, double lambda_q) {
  if (!(pi0 > 0.0 && pi0 < 1.0) || !(pi_target > 0.0 && pi_target < 1.0)) {
    throw std::invalid_argument("hitting_time: beliefs must lie strictly inside (0,1)");
  }
  if (pi_target > pi0) throw std::invalid_argument("hitting_time: belief only decays, need pi_target <= pi0");
  if (lambda_q <= 0.0) throw std::invalid_argument("hitting_time: lambda_q must be > 0");
  if (pi_target == pi0) return 0.0;
  return std::log(pi0 * (1.0 - pi_target) / (pi_target * (1.0 - pi0))) / lambda_q;
}

}  // namespace repsel
